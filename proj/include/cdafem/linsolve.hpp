#pragma once

#include "cdafem/assembly.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace cdafem {

struct SolveReport {
  Eigen::VectorXd solution;
  double relative_residual = 0.0;  // ||Ax-b||_2 / ||b||_2
  std::string note;                // factorization summary
};

/// Raised on breakdown or when the residual contract cannot be met; carries
/// the best residual reached so the adaptive driver can abort loudly.
struct SolveFailure : std::runtime_error {
  SolveFailure(const std::string& what, double residual)
      : std::runtime_error(what), best_residual(residual) {}
  double best_residual;
};

/// Direct sparse solve of the (generally nonsymmetric) system; the result is
/// deterministic for fixed inputs and satisfies
/// relative_residual <= tol, else SolveFailure is thrown. max_dofs caps the
/// problem size accepted (work guard).
SolveReport solve(const SparseSystem& system, double tol = 1e-10, int max_dofs = 4'000'000);

}  // namespace cdafem
