#include "cdafem/assembly.hpp"

#include "cdafem/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace cdafem {

double delta_supg(double h_T, double a_T, double eps) {
  if (!(h_T > 0.0 && a_T > 0.0 && eps > 0.0))
    throw std::invalid_argument("delta_supg: h_T, a_T, eps must be positive");
  const double s = 0.5 * a_T * h_T / eps;  // Pe_T / 2
  double xi;
  if (s < 1e-4) {
    xi = s / 3.0 - s * s * s / 45.0;
  } else {
    xi = 1.0 / std::tanh(s) - 1.0 / s;
  }
  return h_T / a_T * xi;
}

namespace {

double max_a_norm(const Problem& problem, const TriangleGeometry& g) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) m = std::max(m, problem.a(g.corner[i]).norm());
  for (const auto& q : tri_rule_degree4())
    m = std::max(m, problem.a(g.point(q.l0, q.l1, q.l2)).norm());
  return m;
}

}  // namespace

Eigen::SparseMatrix<double, Eigen::RowMajor> assemble_cip_term(const Mesh& mesh, const Problem& problem,
                                                               double c_cip) {
  std::vector<Eigen::Triplet<double>> trip;
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const auto& edge = mesh.edge(e);
    if (edge.boundary) continue;
    const Vec2 mid = 0.5 * (mesh.vertex(edge.a) + mesh.vertex(edge.b));
    const Vec2 a = problem.a(mid);
    const double len = (mesh.vertex(edge.b) - mesh.vertex(edge.a)).norm();
    const double tau = c_cip * len * len;

    // jump of a.grad(phi_w) across the edge for every involved vertex
    std::array<int, 6> verts{};
    std::array<double, 6> jump{};
    int nverts = 0;
    auto add = [&](int v, double j) {
      for (int i = 0; i < nverts; ++i)
        if (verts[i] == v) {
          jump[i] += j;
          return;
        }
      verts[nverts] = v;
      jump[nverts] = j;
      ++nverts;
    };
    for (int side = 0; side < 2; ++side) {
      const int t = edge.tri[side];
      const double sgn = side == 0 ? 1.0 : -1.0;
      const auto& tri = mesh.triangle(t);
      const auto& g = mesh.geometry(t);
      for (int i = 0; i < 3; ++i) add(tri.v[i], sgn * a.dot(g.grad_lambda[i]));
    }
    for (int i = 0; i < nverts; ++i)
      for (int j = 0; j < nverts; ++j)
        trip.emplace_back(verts[i], verts[j], tau * len * jump[i] * jump[j]);
  }
  Eigen::SparseMatrix<double, Eigen::RowMajor> S(mesh.num_vertices(), mesh.num_vertices());
  S.setFromTriplets(trip.begin(), trip.end());
  return S;
}

SparseSystem assemble(const Mesh& mesh, const Problem& problem, const Stabilization& stab) {
  const int nv = mesh.num_vertices();
  const auto& rule = tri_rule_degree4();

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(mesh.num_triangles()) * 9);
  Eigen::VectorXd rhs_full = Eigen::VectorXd::Zero(nv);

  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tri = mesh.triangle(t);
    const auto& g = mesh.geometry(t);

    Eigen::Matrix3d local = Eigen::Matrix3d::Zero();
    Eigen::Vector3d load = Eigen::Vector3d::Zero();

    // eps <grad u, grad v>: exact, gradients are constant
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        local(i, j) += problem.eps * g.area * g.grad_lambda[i].dot(g.grad_lambda[j]);

    double delta = 0.0;
    if (stab.kind == StabilizationKind::SUPG)
      delta = stab.supg_scale * delta_supg(g.diameter, max_a_norm(problem, g), problem.eps);

    for (const auto& q : rule) {
      const Vec2 x = g.point(q.l0, q.l1, q.l2);
      const Vec2 a = problem.a(x);
      const double c0 = problem.div_a(x) + problem.b(x);
      const double fx = problem.f(x);
      const double lam[3] = {q.l0, q.l1, q.l2};
      const double w = q.w * g.area;

      for (int i = 0; i < 3; ++i) {
        const double adgi = a.dot(g.grad_lambda[i]);
        for (int j = 0; j < 3; ++j) {
          const double trial = a.dot(g.grad_lambda[j]) + c0 * lam[j];
          local(i, j) += w * trial * lam[i];
          // residual form of the streamline term; eps*Lap(u_h) vanishes for
          // affine elements
          if (delta > 0.0) local(i, j) += w * delta * trial * adgi;
        }
        load(i) += w * fx * lam[i];
        if (delta > 0.0) load(i) += w * delta * fx * adgi;
      }
    }

    for (int i = 0; i < 3; ++i) {
      rhs_full[tri.v[i]] += load(i);
      for (int j = 0; j < 3; ++j) trip.emplace_back(tri.v[i], tri.v[j], local(i, j));
    }
  }

  Eigen::SparseMatrix<double, Eigen::RowMajor> full(nv, nv);
  full.setFromTriplets(trip.begin(), trip.end());
  if (stab.kind == StabilizationKind::CIP) full += assemble_cip_term(mesh, problem, stab.c_cip);

  SparseSystem sys;
  sys.dof_of_vertex.assign(nv, -1);
  for (int v = 0; v < nv; ++v) {
    if (!mesh.vertex_on_boundary(v)) {
      sys.dof_of_vertex[v] = static_cast<int>(sys.vertex_of_dof.size());
      sys.vertex_of_dof.push_back(v);
    }
  }
  const int n = static_cast<int>(sys.vertex_of_dof.size());
  if (n == 0) throw std::invalid_argument("assemble: mesh has no interior vertices");

  // homogeneous Dirichlet data: drop boundary rows and columns
  std::vector<Eigen::Triplet<double>> itrip;
  itrip.reserve(trip.size());
  for (int k = 0; k < full.outerSize(); ++k) {
    const int i = sys.dof_of_vertex[k];
    if (i < 0) continue;
    for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(full, k); it; ++it) {
      const int j = sys.dof_of_vertex[it.col()];
      if (j >= 0) itrip.emplace_back(i, j, it.value());
    }
  }
  sys.matrix.resize(n, n);
  sys.matrix.setFromTriplets(itrip.begin(), itrip.end());
  sys.rhs.resize(n);
  for (int d = 0; d < n; ++d) sys.rhs[d] = rhs_full[sys.vertex_of_dof[d]];
  return sys;
}

}  // namespace cdafem
