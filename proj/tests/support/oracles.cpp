#include "oracles.hpp"

#include <cmath>

namespace oracles {

using cdafem::BaryPoint;
using cdafem::Mesh;
using cdafem::Vec2;

std::vector<BaryPoint> duffy_rule(int k) {
  const auto gl = cdafem::gauss_legendre(k);
  std::vector<BaryPoint> rule;
  rule.reserve(static_cast<std::size_t>(k) * k);
  for (const auto& gu : gl) {
    const double u = 0.5 * (gu.x + 1.0), wu = 0.5 * gu.w;
    for (const auto& gv : gl) {
      const double v = 0.5 * (gv.x + 1.0), wv = 0.5 * gv.w;
      const double l1 = u, l2 = v * (1.0 - u);
      rule.push_back({1.0 - l1 - l2, l1, l2, 2.0 * wu * wv * (1.0 - u)});
    }
  }
  return rule;
}

Eigen::MatrixXd dense_full_matrix(const Mesh& mesh, const cdafem::Problem& problem,
                                  const cdafem::Stabilization& stab) {
  const int nv = mesh.num_vertices();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(nv, nv);

  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tri = mesh.triangle(t);
    const auto& g = mesh.geometry(t);
    const Vec2 centroid = (g.corner[0] + g.corner[1] + g.corner[2]) / 3.0;
    const Vec2 a = problem.a(centroid);
    const double c0 = problem.div_a(centroid) + problem.b(centroid);
    const double area = g.area;

    double delta = 0.0;
    if (stab.kind == cdafem::StabilizationKind::SUPG)
      delta = stab.supg_scale * cdafem::delta_supg(g.diameter, a.norm(), problem.eps);

    for (int i = 0; i < 3; ++i) {
      const double adgi = a.dot(g.grad_lambda[i]);
      for (int j = 0; j < 3; ++j) {
        const double adgj = a.dot(g.grad_lambda[j]);
        double v = problem.eps * area * g.grad_lambda[i].dot(g.grad_lambda[j]);
        v += adgj * area / 3.0;                                  // int (a.grad phi_j) phi_i
        v += c0 * area / 12.0 * (i == j ? 2.0 : 1.0);            // int c0 phi_j phi_i
        if (delta > 0.0) v += delta * (adgj * adgi * area + c0 * adgi * area / 3.0);
        A(tri.v[i], tri.v[j]) += v;
      }
    }
  }

  if (stab.kind == cdafem::StabilizationKind::CIP) {
    for (int e = 0; e < mesh.num_edges(); ++e) {
      const auto& edge = mesh.edge(e);
      if (edge.boundary) continue;
      const Vec2 mid = 0.5 * (mesh.vertex(edge.a) + mesh.vertex(edge.b));
      const Vec2 a = problem.a(mid);
      const double len = (mesh.vertex(edge.b) - mesh.vertex(edge.a)).norm();
      Eigen::VectorXd jump = Eigen::VectorXd::Zero(mesh.num_vertices());
      for (int side = 0; side < 2; ++side) {
        const int t = edge.tri[side];
        const double sgn = side == 0 ? 1.0 : -1.0;
        for (int i = 0; i < 3; ++i)
          jump[mesh.triangle(t).v[i]] += sgn * a.dot(mesh.geometry(t).grad_lambda[i]);
      }
      A += stab.c_cip * len * len * len * jump * jump.transpose();
    }
  }
  return A;
}

Eigen::MatrixXd dense_interior_matrix(const Mesh& mesh, const cdafem::Problem& problem,
                                      const cdafem::Stabilization& stab) {
  const Eigen::MatrixXd full = dense_full_matrix(mesh, problem, stab);
  std::vector<int> interior;
  for (int v = 0; v < mesh.num_vertices(); ++v)
    if (!mesh.vertex_on_boundary(v)) interior.push_back(v);
  Eigen::MatrixXd A(interior.size(), interior.size());
  for (std::size_t i = 0; i < interior.size(); ++i)
    for (std::size_t j = 0; j < interior.size(); ++j) A(i, j) = full(interior[i], interior[j]);
  return A;
}

int ladder_count(double eta, double eta_max, int kmax) {
  if (eta >= 0.5 * eta_max) return kmax;  // top rule has no upper bound
  for (int j = 1; j < kmax; ++j) {
    const double lo = eta_max * std::pow(2.0, -(j + 1));
    const double hi = eta_max * std::pow(2.0, -j);
    if (eta >= lo && eta < hi) return kmax - j;
  }
  return 0;
}

Mesh randomly_refined(int n0, int rounds, unsigned seed) {
  std::mt19937 rng(seed);
  Mesh mesh = cdafem::structured_unit_square(n0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> count(1, 2);
  for (int r = 0; r < rounds; ++r) {
    cdafem::MarkList marks;
    for (int t = 0; t < mesh.num_triangles(); ++t)
      if (coin(rng) < 0.3) marks.set(t, count(rng));
    if (marks.empty()) marks.set(static_cast<int>(rng() % mesh.num_triangles()), 1);
    mesh = bisect(mesh, marks);
  }
  return mesh;
}

}  // namespace oracles
