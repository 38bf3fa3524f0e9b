#pragma once

#include "cdafem/assembly.hpp"
#include "cdafem/estimator.hpp"
#include "cdafem/mesh.hpp"
#include "cdafem/problems.hpp"

#include <functional>
#include <vector>

namespace cdafem {

enum class RefineMode { Uniform, Adaptive };

struct AdaptConfig {
  int kmax = 4;
  int max_dof = 10000;
  RefineMode mode = RefineMode::Adaptive;
  int initial_n = 4;  // structured unit-square start
  Stabilization stab;
  EstimatorConfig estimator;
  Problem problem;
  double lin_tol = 1e-10;
  double eta_stop = 0.0;  // optional estimator-value stop; 0 disables
};

/// One adaptive step's plotted quantities, plus mesh diagnostics that are
/// not part of the CSV schema.
struct AdaptRecord {
  int step = 0;
  int dof = 0;
  double err_max = 0.0;
  double star = 0.0;
  double starstar = 0.0;
  double eta_max = 0.0;
  double osc = 0.0;
  double ell_h = 0.0;
  double seconds = 0.0;
  // diagnostics
  double h_min = 0.0;
  double h_max = 0.0;
  int num_triangles = 0;
};

/// Modified maximum strategy: with eta = max_T eta(T), an element is
/// bisected kmax - j times when eta(T) lies in [2^{-(j+1)} eta, 2^{-j} eta),
/// ties going to the higher count; elements below 2^{-kmax} eta stay
/// unmarked. The argmax element always receives kmax bisections. Throws if
/// all indicators vanish.
MarkList mark(const IndicatorReport& report, int kmax);

using StepCallback =
    std::function<void(const AdaptRecord&, const Mesh&, const IndicatorReport&)>;

/// solve -> estimate -> mark -> refine until dof >= max_dof. Uniform mode
/// bisects every element twice per step, halving the mesh size (DOF roughly
/// quadruples per step). One record is emitted per step through the optional
/// callback before the list is returned, so partial output survives a solver
/// failure.
std::vector<AdaptRecord> adapt_loop(const AdaptConfig& config, const StepCallback& on_step = {});

}  // namespace cdafem
