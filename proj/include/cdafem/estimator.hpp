#pragma once

#include "cdafem/field.hpp"
#include "cdafem/problems.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cdafem {

/// Estimator constants: eta(T) = min{1, c_vol l_h h_T^2/eps} ||R_h||_inf;T
///                             + min{sqrt(eps), c_jump l_h h_T} ||[[grad u_h]]||_inf;dT\dOmega.
/// Max norms are approximated on a barycentric lattice of the given order
/// (order 4 = 15 points per element, corners included).
struct EstimatorConfig {
  double c_vol = 0.0125;
  double c_jump = 0.03;
  int sample_order = 4;
};

struct ElementIndicator {
  double eta = 0.0;
  double volume_part = 0.0;
  double jump_part = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double osc = 0.0;  // alpha_T ||R_h - mean_T R_h||_inf;T
};

struct IndicatorReport {
  std::vector<ElementIndicator> elements;
  double eta_max = 0.0;
  double osc_max = 0.0;   // max over elements; equals the patch-max global value
  double ell_h = 0.0;
  double h_min = 0.0;
  int argmax_element = -1;
};

/// Logarithmic factor l_h = 1 + ln(2 + eps/h_min) + |ln eps|; always >= 1 + ln 2.
double log_factor(double eps, double h_min);

/// (alpha_T, beta_T) with the config constants folded in.
std::pair<double, double> weights(double eps, double h_T, double ell_h, const EstimatorConfig& config);

/// Sampled max of |a.grad u_h + (div a + b) u_h - f| over element t
/// (eps*Lap(u_h) vanishes for P1).
double element_residual_maxnorm(const Mesh& mesh, int t, const DiscreteField& u_h, const Problem& problem,
                                int sample_order);

/// Max over the interior edges of t of |grad u_h^+ . n^+ + grad u_h^- . n^-|;
/// constant per edge for P1. Boundary edges carry no jump term.
double jump_maxnorm(const Mesh& mesh, int t, const DiscreteField& u_h);

/// alpha_T * max|R_h - mean_T(R_h)| on t, the mean taken with the degree-4
/// rule. The patch-max form over omega_T is assembled by the caller
/// (see patch_oscillation).
double oscillation(const Mesh& mesh, int t, const DiscreteField& u_h, const Problem& problem, double alpha,
                   int sample_order);

IndicatorReport indicator_report(const Mesh& mesh, const DiscreteField& u_h, const Problem& problem,
                                 const EstimatorConfig& config);

double patch_oscillation(const Mesh& mesh, const IndicatorReport& report, int t);

/// Per-element CSV (tri,eta,volume,jump,alpha,beta,osc) for visualization.
void write_indicator_csv(const IndicatorReport& report, const std::string& path);

}  // namespace cdafem
