#include "cdafem/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace cdafem {

namespace {

void push_perm3(std::vector<BaryPoint>& rule, double a, double b, double c, double w) {
  rule.push_back({a, b, c, w});
  rule.push_back({c, a, b, w});
  rule.push_back({b, c, a, w});
}

void push_perm6(std::vector<BaryPoint>& rule, double a, double b, double c, double w) {
  push_perm3(rule, a, b, c, w);
  push_perm3(rule, a, c, b, w);
}

}  // namespace

const std::vector<BaryPoint>& tri_rule_degree4() {
  static const std::vector<BaryPoint> rule = [] {
    std::vector<BaryPoint> r;
    const double a1 = 0.445948490915965;
    const double w1 = 0.223381589678011;
    const double a2 = 0.091576213509771;
    const double w2 = 0.109951743655322;
    push_perm3(r, 1.0 - 2.0 * a1, a1, a1, w1);
    push_perm3(r, 1.0 - 2.0 * a2, a2, a2, w2);
    return r;
  }();
  return rule;
}

const std::vector<BaryPoint>& tri_rule_degree8() {
  static const std::vector<BaryPoint> rule = [] {
    std::vector<BaryPoint> r;
    r.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.144315607677787});
    const double a2 = 0.459292588292723, w2 = 0.095091634413923;
    const double a3 = 0.170569307751760, w3 = 0.103217370534718;
    const double a4 = 0.050547228317031, w4 = 0.032458497623198;
    push_perm3(r, 1.0 - 2.0 * a2, a2, a2, w2);
    push_perm3(r, 1.0 - 2.0 * a3, a3, a3, w3);
    push_perm3(r, 1.0 - 2.0 * a4, a4, a4, w4);
    const double a5 = 0.263112829634638, b5 = 0.728492392955404;
    push_perm6(r, 1.0 - a5 - b5, a5, b5, 0.027230314174435);
    return r;
  }();
  return rule;
}

std::vector<std::array<double, 3>> barycentric_lattice(int order) {
  if (order < 1) throw std::invalid_argument("barycentric_lattice: order must be >= 1");
  std::vector<std::array<double, 3>> pts;
  pts.reserve((order + 1) * (order + 2) / 2);
  const double m = order;
  for (int i = 0; i <= order; ++i)
    for (int j = 0; j <= order - i; ++j)
      pts.push_back({i / m, j / m, (order - i - j) / m});
  return pts;
}

std::vector<GaussPoint> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  std::vector<GaussPoint> pts(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p1 = 0.0, dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // refresh the derivative at the converged node
    double p0 = 1.0;
    p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    pts[i] = {x, 2.0 / ((1.0 - x * x) * dp * dp)};
  }
  return pts;
}

TriangleGeometry make_triangle_geometry(const Vec2& p0, const Vec2& p1, const Vec2& p2) {
  TriangleGeometry g;
  g.corner = {p0, p1, p2};
  g.area = 0.5 * cross2(p1 - p0, p2 - p0);
  for (int i = 0; i < 3; ++i) {
    const Vec2 t = g.corner[(i + 1) % 3] - g.corner[i];
    g.edge_length[i] = t.norm();
    g.edge_normal[i] = Vec2(t.y(), -t.x()) / g.edge_length[i];  // right of travel = outward for CCW
    g.diameter = std::max(g.diameter, g.edge_length[i]);
  }
  for (int i = 0; i < 3; ++i) {
    const Vec2 opp = g.corner[(i + 1) % 3] - g.corner[(i + 2) % 3];
    g.grad_lambda[i] = Vec2(opp.y(), -opp.x()) / (2.0 * g.area);
  }
  return g;
}

}  // namespace cdafem
