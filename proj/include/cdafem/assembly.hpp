#pragma once

#include "cdafem/mesh.hpp"
#include "cdafem/problems.hpp"

#include <Eigen/Sparse>

#include <vector>

namespace cdafem {

enum class StabilizationKind { None, SUPG, CIP };

/// Stabilization selection with its scale constants. The SUPG parameter is
/// supg_scale * h_T a_T^{-1} xi(Pe_T/2), which satisfies
/// delta_T <~ h_T min{a_T^{-1}, eps^{-1} h_T}; the CIP penalty is
/// tau_E = c_cip h_E^2.
struct Stabilization {
  StabilizationKind kind = StabilizationKind::None;
  double supg_scale = 1.0;
  double c_cip = 0.01;
};

/// Linear system over the interior (non-Dirichlet) vertices, rows compressed.
struct SparseSystem {
  Eigen::SparseMatrix<double, Eigen::RowMajor> matrix;
  Eigen::VectorXd rhs;
  std::vector<int> dof_of_vertex;  // -1 for boundary vertices
  std::vector<int> vertex_of_dof;
};

/// delta_T of the streamline diffusion method: h_T a_T^{-1} xi(Pe_T/2) with
/// xi(s) = coth(s) - 1/s and Pe_T = a_T h_T / eps. xi is evaluated by its
/// series s/3 - s^3/45 below s = 1e-4 to avoid cancellation.
double delta_supg(double h_T, double a_T, double eps);

/// Jump-penalty matrix sum_E tau_E int_E [[a.grad u]] [[a.grad v]] over all
/// vertices (no boundary elimination), tau_E = c_cip h_E^2. Symmetric
/// positive semidefinite; exact for the elementwise-constant P1 convective
/// derivative.
Eigen::SparseMatrix<double, Eigen::RowMajor> assemble_cip_term(const Mesh& mesh, const Problem& problem,
                                                               double c_cip);

/// Assemble eps<grad u, grad v> + <a.grad u + (div a + b) u, v> = <f, v>
/// plus the selected stabilization, with homogeneous Dirichlet rows and
/// columns eliminated. Element integrals use the degree-4 rule composed with
/// coefficient evaluation; edge integrals are exact for P1.
SparseSystem assemble(const Mesh& mesh, const Problem& problem, const Stabilization& stab);

}  // namespace cdafem
