// Experiment driver: runs one solve->estimate->mark->refine campaign on the
// unit-square convection-diffusion test problems and writes per-step CSV
// records plus empirical convergence rates.

#include "cdafem/driver.hpp"
#include "cdafem/linsolve.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  cdafem::RunSpec spec;
  spec.out_csv = "run.csv";

  CLI::App app{"cdafem: adaptive P1 FEM for singularly perturbed convection-diffusion problems"};
  app.add_option("--problem", spec.problem_id, "test problem id: u1 | u2 | u3")
      ->check(CLI::IsMember({"u1", "u2", "u3"}));
  app.add_option("--eps", spec.eps, "diffusion coefficient in (0,1]")->check(CLI::Range(1e-300, 1.0));
  std::map<std::string, cdafem::StabilizationKind> stab_map{
      {"none", cdafem::StabilizationKind::None},
      {"supg", cdafem::StabilizationKind::SUPG},
      {"cip", cdafem::StabilizationKind::CIP}};
  app.add_option("--stab", spec.stab, "stabilization: none | supg | cip")
      ->transform(CLI::CheckedTransformer(stab_map, CLI::ignore_case));
  std::map<std::string, cdafem::RefineMode> mode_map{{"uniform", cdafem::RefineMode::Uniform},
                                                     {"adaptive", cdafem::RefineMode::Adaptive}};
  app.add_option("--refine", spec.mode, "refinement mode: uniform | adaptive")
      ->transform(CLI::CheckedTransformer(mode_map, CLI::ignore_case));
  app.add_option("--max-dof", spec.max_dof, "stop once the DOF count reaches this cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--kmax", spec.kmax, "maximum bisection count per marked element")
      ->check(CLI::PositiveNumber);
  app.add_option("--n0", spec.initial_n, "initial structured mesh subdivisions per side")
      ->check(CLI::PositiveNumber);
  app.add_option("--c-vol", spec.estimator.c_vol, "volume-term estimator constant")
      ->check(CLI::PositiveNumber);
  app.add_option("--c-jump", spec.estimator.c_jump, "jump-term estimator constant")
      ->check(CLI::PositiveNumber);
  app.add_option("--c-cip", spec.c_cip, "interior-penalty constant (tau_E = c h_E^2)")
      ->check(CLI::PositiveNumber);
  app.add_option("--supg-scale", spec.supg_scale, "scale applied to the streamline diffusion delta_T")
      ->check(CLI::PositiveNumber);
  app.add_option("--lin-tol", spec.lin_tol, "relative residual tolerance of the linear solver")
      ->check(CLI::PositiveNumber);
  app.add_option("--sample-order", spec.estimator.sample_order,
                 "barycentric lattice order for max-norm sampling")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", spec.out_csv, "output CSV path (rates written next to it)");
  app.add_option("--export-mesh-every", spec.export_mesh_every,
                 "write mesh + indicator files every N steps (0 = never)")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const auto result = cdafem::run(spec);
    const auto& last = result.records.back();
    std::cout << "finished after " << result.records.size() << " steps, dof=" << last.dof
              << ", eta_max=" << last.eta_max << ", err_max=" << last.err_max << "\n";
    if (!spec.out_csv.empty()) std::cout << "records: " << spec.out_csv << "\n";
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const cdafem::SolveFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
}
