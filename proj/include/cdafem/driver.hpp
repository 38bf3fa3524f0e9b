#pragma once

#include "cdafem/adaptivity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cdafem {

/// One experiment campaign; fully determines the run (no hidden state), so
/// two identical specs produce byte-identical CSV apart from the seconds
/// column.
struct RunSpec {
  std::string problem_id = "u1";
  double eps = 1.0;
  StabilizationKind stab = StabilizationKind::None;
  double supg_scale = 1.0;
  double c_cip = 0.01;
  RefineMode mode = RefineMode::Uniform;
  int max_dof = 10000;
  int kmax = 4;
  int initial_n = 4;
  EstimatorConfig estimator;
  double lin_tol = 1e-10;
  std::string out_csv;        // empty: no file output
  int export_mesh_every = 0;  // every N steps write mesh txt/vtk + indicator CSV
};

struct RunResult {
  std::vector<AdaptRecord> records;
};

/// Runs the campaign, streaming one CSV row per adaptive step (flushed
/// immediately, so partial output survives failures) and writing a companion
/// rates file next to it. Throws std::invalid_argument for bad specs and
/// SolveFailure for numerical breakdown.
RunResult run(const RunSpec& spec);

/// Empirical convergence orders: log-log slope of each quantity against DOF
/// for consecutive record pairs plus a least-squares fit over the tail
/// (last 4 records). Nonpositive or non-finite values are skipped with a note.
struct RatesReport {
  static constexpr int kQuantities = 5;
  static const std::array<const char*, kQuantities> names;  // err_max, star, starstar, eta_max, osc
  struct Row {
    int step = 0;  // later step of the pair
    int dof = 0;
    std::array<double, kQuantities> slope;  // NaN when skipped
  };
  std::vector<Row> pairs;
  std::array<double, kQuantities> tail_fit;  // NaN when not enough data
  std::vector<std::string> notes;
};

RatesReport rates(const std::vector<AdaptRecord>& records);

/// Least-squares slope of log(y) against log(x); pairs with nonpositive
/// entries are skipped. Returns NaN with fewer than two usable points.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

void write_records_csv(const std::vector<AdaptRecord>& records, const std::string& path);
void write_rates_csv(const RatesReport& report, const std::string& path);

std::string format_record_csv_row(const AdaptRecord& rec);
inline const char* records_csv_header() { return "step,dof,err_max,star,starstar,eta_max,osc,ell_h,seconds"; }

}  // namespace cdafem
