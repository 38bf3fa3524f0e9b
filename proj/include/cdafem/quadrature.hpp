#pragma once

#include "cdafem/geometry.hpp"

#include <array>
#include <vector>

namespace cdafem {

/// One node of a barycentric quadrature rule; weights of a rule sum to 1, so
/// the integral over a triangle is area * sum(w * f).
struct BaryPoint {
  double l0, l1, l2, w;
};

/// 6-point rule, exact for polynomials of total degree 4.
const std::vector<BaryPoint>& tri_rule_degree4();

/// 16-point rule, exact for polynomials of total degree 8. Used for the
/// bubble-weighted seminorm integrals (the element bubble has degree 6).
const std::vector<BaryPoint>& tri_rule_degree8();

/// All lattice points (i/m, j/m, k/m) with i+j+k = m, corners and edge
/// points included. Order 4 gives 15 points.
std::vector<std::array<double, 3>> barycentric_lattice(int order);

struct GaussPoint {
  double x, w;  // node and weight on [-1, 1]
};

/// Gauss-Legendre nodes computed by Newton iteration; exact for degree 2n-1.
std::vector<GaussPoint> gauss_legendre(int n);

/// f receives the physical point and its barycentric coordinates.
template <class F>
double integrate(const TriangleGeometry& g, const std::vector<BaryPoint>& rule, F&& f) {
  double s = 0.0;
  for (const auto& q : rule) s += q.w * f(g.point(q.l0, q.l1, q.l2), q.l0, q.l1, q.l2);
  return s * g.area;
}

}  // namespace cdafem
