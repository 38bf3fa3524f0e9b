#include "cdafem/quadrature.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace cdafem;

namespace {

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

// int_T l0^p l1^q l2^r = 2|T| p! q! r! / (p+q+r+2)!
double bary_monomial_integral(double area, int p, int q, int r) {
  return 2.0 * area * factorial(p) * factorial(q) * factorial(r) / factorial(p + q + r + 2);
}

double rule_monomial(const std::vector<BaryPoint>& rule, double area, int p, int q, int r) {
  double s = 0.0;
  for (const auto& n : rule)
    s += n.w * std::pow(n.l0, p) * std::pow(n.l1, q) * std::pow(n.l2, r);
  return s * area;
}

void check_rule_exact(const std::vector<BaryPoint>& rule, int degree) {
  const double area = 0.37;  // arbitrary; barycentric integrals scale linearly
  for (int p = 0; p <= degree; ++p)
    for (int q = 0; p + q <= degree; ++q)
      for (int r = 0; p + q + r <= degree; ++r) {
        const double exact = bary_monomial_integral(area, p, q, r);
        CHECK(rule_monomial(rule, area, p, q, r) == doctest::Approx(exact).epsilon(1e-12));
      }
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("degree-4 rule integrates all barycentric monomials up to degree 4") {
  CHECK(tri_rule_degree4().size() == 6);
  check_rule_exact(tri_rule_degree4(), 4);
}

TEST_CASE("degree-8 rule integrates all barycentric monomials up to degree 8") {
  CHECK(tri_rule_degree8().size() == 16);
  check_rule_exact(tri_rule_degree8(), 8);
}

TEST_CASE("duffy oracle rule reaches degree 12") {
  check_rule_exact(oracles::duffy_rule(8), 12);
}

TEST_CASE("gauss-legendre nodes are exact to degree 2n-1") {
  for (int n = 1; n <= 8; ++n) {
    const auto gl = gauss_legendre(n);
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double s = 0.0;
      for (const auto& g : gl) s += g.w * std::pow(g.x, p);
      const double exact = (p % 2 == 1) ? 0.0 : 2.0 / (p + 1);
      CHECK(s == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("barycentric lattice of order 4 has 15 points including the corners") {
  const auto pts = barycentric_lattice(4);
  CHECK(pts.size() == 15);
  int corners = 0;
  for (const auto& l : pts) {
    CHECK(l[0] + l[1] + l[2] == doctest::Approx(1.0));
    if (l[0] == 1.0 || l[1] == 1.0 || l[2] == 1.0) ++corners;
  }
  CHECK(corners == 3);
}

TEST_CASE("triangle geometry of the unit right triangle") {
  const auto g = make_triangle_geometry(Vec2(0, 0), Vec2(1, 0), Vec2(0, 1));
  CHECK(g.area == doctest::Approx(0.5));
  CHECK(g.diameter == doctest::Approx(std::sqrt(2.0)));
  CHECK(g.grad_lambda[0].isApprox(Vec2(-1, -1)));
  CHECK(g.grad_lambda[1].isApprox(Vec2(1, 0)));
  CHECK(g.grad_lambda[2].isApprox(Vec2(0, 1)));
  CHECK(g.edge_normal[0].isApprox(Vec2(0, -1)));  // bottom edge points down
  const auto l = g.barycentric(Vec2(0.25, 0.25));
  CHECK(l[0] == doctest::Approx(0.5));
  CHECK(l[1] == doctest::Approx(0.25));
  CHECK(l[2] == doctest::Approx(0.25));
}

}  // TEST_SUITE
