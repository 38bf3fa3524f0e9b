#include "cdafem/adaptivity.hpp"

#include "cdafem/field.hpp"
#include "cdafem/linsolve.hpp"
#include "cdafem/seminorms.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace cdafem {

MarkList mark(const IndicatorReport& report, int kmax) {
  if (kmax < 1) throw std::invalid_argument("mark: kmax must be >= 1");
  if (report.elements.empty()) throw std::invalid_argument("mark: empty report");
  if (!(report.eta_max > 0.0))
    throw std::runtime_error("mark: all indicators vanish (converged or degenerate state)");

  MarkList marks;
  for (std::size_t t = 0; t < report.elements.size(); ++t) {
    const double eta = report.elements[t].eta;
    for (int j = 0; j < kmax; ++j) {
      if (eta >= std::ldexp(report.eta_max, -(j + 1))) {
        marks.set(static_cast<int>(t), kmax - j);
        break;
      }
    }
  }
  return marks;
}

std::vector<AdaptRecord> adapt_loop(const AdaptConfig& config, const StepCallback& on_step) {
  if (config.kmax < 1) throw std::invalid_argument("adapt_loop: kmax must be >= 1");
  if (config.initial_n < 1) throw std::invalid_argument("adapt_loop: initial_n must be >= 1");

  std::vector<AdaptRecord> records;
  Mesh mesh = structured_unit_square(config.initial_n);

  for (int step = 0;; ++step) {
    const auto t0 = std::chrono::steady_clock::now();

    const SparseSystem system = assemble(mesh, config.problem, config.stab);
    const SolveReport sol = solve(system, config.lin_tol);

    Eigen::VectorXd nodal = Eigen::VectorXd::Zero(mesh.num_vertices());
    for (std::size_t d = 0; d < system.vertex_of_dof.size(); ++d)
      nodal[system.vertex_of_dof[d]] = sol.solution[static_cast<int>(d)];
    const DiscreteField u_h(mesh, nodal);

    const IndicatorReport report = indicator_report(mesh, u_h, config.problem, config.estimator);

    AdaptRecord rec;
    rec.step = step;
    rec.dof = static_cast<int>(system.vertex_of_dof.size());
    rec.eta_max = report.eta_max;
    rec.osc = report.osc_max;
    rec.ell_h = report.ell_h;
    rec.h_min = mesh.min_diameter();
    rec.h_max = mesh.max_diameter();
    rec.num_triangles = mesh.num_triangles();

    if (config.problem.has_exact) {
      std::vector<double> alpha(report.elements.size());
      for (std::size_t t = 0; t < report.elements.size(); ++t) alpha[t] = report.elements[t].alpha;
      const ErrorField error = ErrorField::from(mesh, u_h, config.problem);
      rec.err_max = maxnorm_error(mesh, u_h, config.problem, config.estimator.sample_order);
      rec.star = star_global(mesh, error, config.problem, config.problem.eps, alpha).total;
      rec.starstar =
          starstar_global(mesh, error, config.problem, alpha, config.estimator.sample_order);
    } else {
      rec.err_max = rec.star = rec.starstar = std::nan("");
    }

    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    records.push_back(rec);
    if (on_step) on_step(rec, mesh, report);

    if (rec.dof >= config.max_dof) break;
    if (config.eta_stop > 0.0 && report.eta_max <= config.eta_stop) break;

    MarkList marks;
    if (config.mode == RefineMode::Uniform) {
      for (int t = 0; t < mesh.num_triangles(); ++t) marks.set(t, 2);
    } else {
      marks = mark(report, config.kmax);
    }
    mesh = bisect(mesh, marks);
  }
  return records;
}

}  // namespace cdafem
