#include "cdafem/estimator.hpp"

#include "cdafem/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace cdafem {

double log_factor(double eps, double h_min) {
  if (!(eps > 0.0 && eps <= 1.0 && h_min > 0.0))
    throw std::invalid_argument("log_factor: need eps in (0,1] and h_min > 0");
  return 1.0 + std::log(2.0 + eps / h_min) + std::abs(std::log(eps));
}

std::pair<double, double> weights(double eps, double h_T, double ell_h, const EstimatorConfig& config) {
  const double alpha = std::min(1.0, config.c_vol * ell_h * h_T * h_T / eps);
  const double beta = std::min(std::sqrt(eps), config.c_jump * ell_h * h_T);
  return {alpha, beta};
}

namespace {

using Lattice = std::vector<std::array<double, 3>>;

// strong residual of the P1 field at a point of element t
double residual_at(int t, const DiscreteField& u_h, const Problem& problem, const Vec2& x, double l0,
                   double l1, double l2) {
  const Vec2 grad = u_h.gradient(t);
  const double uh = u_h.value_bary(t, l0, l1, l2);
  return problem.a(x).dot(grad) + (problem.div_a(x) + problem.b(x)) * uh - problem.f(x);
}

double residual_maxnorm_impl(const Mesh& mesh, int t, const DiscreteField& u_h, const Problem& problem,
                             const Lattice& lattice) {
  const auto& g = mesh.geometry(t);
  double m = 0.0;
  for (const auto& l : lattice) {
    const Vec2 x = g.point(l[0], l[1], l[2]);
    m = std::max(m, std::abs(residual_at(t, u_h, problem, x, l[0], l[1], l[2])));
  }
  return m;
}

double oscillation_impl(const Mesh& mesh, int t, const DiscreteField& u_h, const Problem& problem,
                        double alpha, const Lattice& lattice) {
  const auto& g = mesh.geometry(t);
  const double mean = integrate(g, tri_rule_degree4(), [&](const Vec2& x, double l0, double l1, double l2) {
                        return residual_at(t, u_h, problem, x, l0, l1, l2);
                      }) /
                      g.area;
  double m = 0.0;
  for (const auto& l : lattice) {
    const Vec2 x = g.point(l[0], l[1], l[2]);
    m = std::max(m, std::abs(residual_at(t, u_h, problem, x, l[0], l[1], l[2]) - mean));
  }
  return alpha * m;
}

}  // namespace

double element_residual_maxnorm(const Mesh& mesh, int t, const DiscreteField& u_h, const Problem& problem,
                                int sample_order) {
  return residual_maxnorm_impl(mesh, t, u_h, problem, barycentric_lattice(sample_order));
}

double jump_maxnorm(const Mesh& mesh, int t, const DiscreteField& u_h) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) {
    const auto& e = mesh.edge(mesh.triangle_edge(t, i));
    if (e.boundary) continue;
    const int other = e.tri[0] == t ? e.tri[1] : e.tri[0];
    const Vec2 n = mesh.geometry(t).edge_normal[i];
    m = std::max(m, std::abs((u_h.gradient(t) - u_h.gradient(other)).dot(n)));
  }
  return m;
}

double oscillation(const Mesh& mesh, int t, const DiscreteField& u_h, const Problem& problem, double alpha,
                   int sample_order) {
  return oscillation_impl(mesh, t, u_h, problem, alpha, barycentric_lattice(sample_order));
}

IndicatorReport indicator_report(const Mesh& mesh, const DiscreteField& u_h, const Problem& problem,
                                 const EstimatorConfig& config) {
  IndicatorReport report;
  report.h_min = mesh.min_diameter();
  report.ell_h = log_factor(problem.eps, report.h_min);
  report.elements.resize(mesh.num_triangles());
  const Lattice lattice = barycentric_lattice(config.sample_order);

  for (int t = 0; t < mesh.num_triangles(); ++t) {
    auto& el = report.elements[t];
    const auto [alpha, beta] = weights(problem.eps, mesh.geometry(t).diameter, report.ell_h, config);
    el.alpha = alpha;
    el.beta = beta;
    el.volume_part = alpha * residual_maxnorm_impl(mesh, t, u_h, problem, lattice);
    el.jump_part = beta * jump_maxnorm(mesh, t, u_h);
    el.eta = el.volume_part + el.jump_part;
    el.osc = oscillation_impl(mesh, t, u_h, problem, alpha, lattice);
    if (el.eta > report.eta_max) {
      report.eta_max = el.eta;
      report.argmax_element = t;
    }
    report.osc_max = std::max(report.osc_max, el.osc);
  }
  return report;
}

double patch_oscillation(const Mesh& mesh, const IndicatorReport& report, int t) {
  double m = 0.0;
  for (int s : mesh.patch(t)) m = std::max(m, report.elements[s].osc);
  return m;
}

void write_indicator_csv(const IndicatorReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_indicator_csv: cannot open " + path);
  out << "tri,eta,volume,jump,alpha,beta,osc\n";
  char buf[256];
  for (std::size_t t = 0; t < report.elements.size(); ++t) {
    const auto& el = report.elements[t];
    std::snprintf(buf, sizeof buf, "%zu,%.12e,%.12e,%.12e,%.12e,%.12e,%.12e\n", t, el.eta, el.volume_part,
                  el.jump_part, el.alpha, el.beta, el.osc);
    out << buf;
  }
}

}  // namespace cdafem
