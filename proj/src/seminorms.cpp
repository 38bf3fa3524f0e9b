#include "cdafem/seminorms.hpp"

#include "cdafem/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace cdafem {

ErrorField ErrorField::from(const Mesh& mesh, const DiscreteField& u_h, const Problem& problem) {
  if (!problem.has_exact)
    throw std::invalid_argument("ErrorField::from: problem has no exact solution");
  ErrorField e;
  e.value = [&mesh, &u_h, &problem](int t, const Vec2& x) {
    (void)mesh;
    return problem.u(x) - u_h.value(t, x);
  };
  e.gradient = [&u_h, &problem](int t, const Vec2& x) -> Vec2 {
    return problem.grad_u(x) - u_h.gradient(t);
  };
  return e;
}

EdgeSubsimplexPair edge_subsimplices(const Mesh& mesh, int edge, double eps) {
  const auto& e = mesh.edge(edge);
  if (e.boundary) throw std::invalid_argument("edge_subsimplices: edge must be interior");

  EdgeSubsimplexPair pair;
  pair.edge = edge;
  pair.parent = {e.tri[0], e.tri[1]};
  const Vec2 pa = mesh.vertex(e.a), pb = mesh.vertex(e.b);
  pair.edge_length = (pb - pa).norm();

  const double ratio0 = mesh.geometry(e.tri[0]).area / pair.edge_length;
  const double ratio1 = mesh.geometry(e.tri[1]).area / pair.edge_length;
  pair.h_hat = std::min({std::sqrt(eps), ratio0, ratio1});

  const Vec2 mid = 0.5 * (pa + pb);
  for (int side = 0; side < 2; ++side) {
    const int t = pair.parent[side];
    const auto& tri = mesh.triangle(t);
    int apex = -1;
    for (int i = 0; i < 3; ++i)
      if (tri.v[i] != e.a && tri.v[i] != e.b) apex = tri.v[i];
    const Vec2 p = mesh.vertex(apex);
    const double ratio = mesh.geometry(t).area / pair.edge_length;
    // shrink the apex toward the edge midpoint along the median so that
    // |T_E| = h_hat |E| exactly
    const double scale = pair.h_hat / ratio;
    pair.corners[side] = {pa, pb, mid + scale * (p - mid)};
  }
  return pair;
}

namespace {

double conv_grad_e(const ErrorField& error, const Problem& problem, int t, const Vec2& x) {
  return problem.a(x).dot(error.gradient(t, x));
}

}  // namespace

double star_element(const Mesh& mesh, int t, const ErrorField& error, const Problem& problem, double alpha) {
  const auto& g = mesh.geometry(t);
  // weights sum to 1, so the sum is int_T b_T a.grad e / |T| directly
  double s = 0.0;
  for (const auto& q : tri_rule_degree8()) {
    const double b_T = q.l0 * q.l1 * q.l2;
    s += q.w * b_T * b_T * conv_grad_e(error, problem, t, g.point(q.l0, q.l1, q.l2));
  }
  return alpha * std::abs(s);
}

double star_edge(const Mesh& mesh, int edge, const ErrorField& error, const Problem& problem, double eps,
                 std::span<const double> alpha) {
  const auto pair = edge_subsimplices(mesh, edge, eps);
  double s = 0.0;
  for (int side = 0; side < 2; ++side) {
    const int t = pair.parent[side];
    const auto& c = pair.corners[side];
    const TriangleGeometry sub = make_triangle_geometry(c[0], c[1], c[2]);
    // face bubble (l_a l_b)^2 in sub-simplex coordinates; the extension of
    // the edge test function is constant normal to E
    for (const auto& q : tri_rule_degree8()) {
      const double b_E = q.l0 * q.l1;
      s += std::abs(sub.area) * q.w * alpha[t] * b_E * b_E *
           conv_grad_e(error, problem, t, sub.point(q.l0, q.l1, q.l2));
    }
  }
  return std::abs(s) / (pair.h_hat * pair.edge_length);
}

StarSeminorm star_global(const Mesh& mesh, const ErrorField& error, const Problem& problem, double eps,
                         std::span<const double> alpha) {
  StarSeminorm out;
  for (int t = 0; t < mesh.num_triangles(); ++t)
    out.element_max = std::max(out.element_max, star_element(mesh, t, error, problem, alpha[t]));
  for (int e = 0; e < mesh.num_edges(); ++e)
    if (!mesh.edge(e).boundary)
      out.edge_max = std::max(out.edge_max, star_edge(mesh, e, error, problem, eps, alpha));
  out.total = out.element_max + out.edge_max;
  return out;
}

double starstar_global(const Mesh& mesh, const ErrorField& error, const Problem& problem,
                       std::span<const double> alpha, int sample_order) {
  const auto lattice = barycentric_lattice(sample_order);
  double m = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const auto& g = mesh.geometry(t);
    double local = 0.0;
    for (const auto& l : lattice)
      local = std::max(local, std::abs(conv_grad_e(error, problem, t, g.point(l[0], l[1], l[2]))));
    m = std::max(m, alpha[t] * local);
  }
  return m;
}

double maxnorm_error(const Mesh& mesh, const DiscreteField& u_h, const Problem& problem, int sample_order) {
  if (!problem.has_exact)
    throw std::invalid_argument("maxnorm_error: problem has no exact solution");
  const auto lattice = barycentric_lattice(sample_order);
  double m = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const auto& g = mesh.geometry(t);
    for (const auto& l : lattice) {
      const Vec2 x = g.point(l[0], l[1], l[2]);
      m = std::max(m, std::abs(problem.u(x) - u_h.value_bary(t, l[0], l[1], l[2])));
    }
  }
  return m;
}

ProjectionComparison projection_comparison_terms(const Mesh& mesh, int t, const ErrorField& error,
                                                 const Problem& problem, double alpha, int sample_order) {
  const auto& g = mesh.geometry(t);
  const double mean = integrate(g, tri_rule_degree8(), [&](const Vec2& x, double, double, double) {
                        return conv_grad_e(error, problem, t, x);
                      }) /
                      g.area;
  ProjectionComparison out;
  out.projection_term = alpha * std::abs(mean);
  for (const auto& l : barycentric_lattice(sample_order)) {
    const Vec2 x = g.point(l[0], l[1], l[2]);
    out.oscillation_term =
        std::max(out.oscillation_term, std::abs(conv_grad_e(error, problem, t, x) - mean));
  }
  out.oscillation_term *= alpha;
  return out;
}

}  // namespace cdafem
