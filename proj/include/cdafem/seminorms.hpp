#pragma once

#include "cdafem/estimator.hpp"
#include "cdafem/field.hpp"

#include <functional>
#include <span>

namespace cdafem {

/// Pointwise error e = u - u_h and its gradient, evaluated element-locally
/// (the first argument is the triangle containing x). Tests may substitute
/// arbitrary evaluators.
struct ErrorField {
  std::function<double(int, const Vec2&)> value;
  std::function<Vec2(int, const Vec2&)> gradient;

  static ErrorField from(const Mesh& mesh, const DiscreteField& u_h, const Problem& problem);
};

/// Sub-simplices T_E^+/- of the two elements sharing an interior edge E, with
/// |T_E^+/-| = h_hat |E| and h_hat = min{sqrt(eps), |T^+|/|E|, |T^-|/|E|}.
/// Unless the sub-simplex is the parent itself, its apex lies on the median
/// of the parent through E.
struct EdgeSubsimplexPair {
  int edge = -1;
  std::array<int, 2> parent{-1, -1};            // T^+ (= edge.tri[0]) and T^-
  std::array<std::array<Vec2, 3>, 2> corners;   // [side] = {endpoint a, endpoint b, apex}
  double h_hat = 0.0;
  double edge_length = 0.0;
};

EdgeSubsimplexPair edge_subsimplices(const Mesh& mesh, int edge, double eps);

/// |a.grad e|_{*;T} = alpha_T |int_T b_T a.grad e| / |T| with the element
/// bubble b_T = (l0 l1 l2)^2; the sup over constant psi with unit L1 norm is
/// attained at psi = +-1/|T|. Integration by the degree-8 rule.
double star_element(const Mesh& mesh, int t, const ErrorField& error, const Problem& problem, double alpha);

/// |a.grad e|_{*;E} = h_hat^{-1} |int_{T_E^+ u T_E^-} alpha_T b_E a.grad e| / |E|
/// with the face bubble b_E = (l_a l_b)^2 built from the sub-simplex
/// barycentric coordinates of the edge endpoints; alpha is the weight of the
/// parent element on each side.
double star_edge(const Mesh& mesh, int edge, const ErrorField& error, const Problem& problem, double eps,
                 std::span<const double> alpha);

struct StarSeminorm {
  double element_max = 0.0;
  double edge_max = 0.0;
  double total = 0.0;  // element_max + edge_max
};

StarSeminorm star_global(const Mesh& mesh, const ErrorField& error, const Problem& problem, double eps,
                         std::span<const double> alpha);

/// |a.grad e|_{**} = max_T alpha_T (sampled max of |a.grad e| over T).
double starstar_global(const Mesh& mesh, const ErrorField& error, const Problem& problem,
                       std::span<const double> alpha, int sample_order);

/// Sampled ||u - u_h||_inf over per-element lattices (corners included).
double maxnorm_error(const Mesh& mesh, const DiscreteField& u_h, const Problem& problem, int sample_order);

/// The two bracketing quantities comparing |.|_** against |.|_{*;T}:
/// oscillation term alpha_T ||a.grad e - P0(a.grad e)||_inf;T and projection
/// term alpha_T ||P0(a.grad e)||_inf;T, with P0 the element mean.
struct ProjectionComparison {
  double oscillation_term = 0.0;
  double projection_term = 0.0;
};

ProjectionComparison projection_comparison_terms(const Mesh& mesh, int t, const ErrorField& error,
                                                 const Problem& problem, double alpha, int sample_order);

}  // namespace cdafem
