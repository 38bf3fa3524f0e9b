#include "cdafem/driver.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace cdafem {

const std::array<const char*, RatesReport::kQuantities> RatesReport::names = {
    "err_max", "star", "starstar", "eta_max", "osc"};

namespace {

std::array<double, RatesReport::kQuantities> record_quantities(const AdaptRecord& r) {
  return {r.err_max, r.star, r.starstar, r.eta_max, r.osc};
}

std::string stem_of(const std::string& path) {
  const auto dot = path.rfind('.');
  const auto slash = path.find_last_of("/\\");
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
  return path.substr(0, dot);
}

}  // namespace

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0) || !std::isfinite(y[i])) continue;
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) return std::nan("");
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

RatesReport rates(const std::vector<AdaptRecord>& records) {
  if (records.size() < 2) throw std::invalid_argument("rates: need at least 2 records");
  RatesReport report;
  report.tail_fit.fill(std::nan(""));

  for (std::size_t i = 1; i < records.size(); ++i) {
    RatesReport::Row row;
    row.step = records[i].step;
    row.dof = records[i].dof;
    const auto q0 = record_quantities(records[i - 1]);
    const auto q1 = record_quantities(records[i]);
    const double dlog = std::log(static_cast<double>(records[i].dof) / records[i - 1].dof);
    for (int k = 0; k < RatesReport::kQuantities; ++k) {
      if (q0[k] > 0.0 && q1[k] > 0.0 && std::isfinite(q0[k]) && std::isfinite(q1[k]) && dlog != 0.0) {
        row.slope[k] = std::log(q1[k] / q0[k]) / dlog;
      } else {
        row.slope[k] = std::nan("");
        report.notes.push_back(std::string(RatesReport::names[k]) + ": nonpositive value at step " +
                               std::to_string(records[i].step) + ", slope skipped");
      }
    }
    report.pairs.push_back(row);
  }

  const std::size_t tail = std::min<std::size_t>(records.size(), 4);
  std::vector<double> dofs, vals;
  for (int k = 0; k < RatesReport::kQuantities; ++k) {
    dofs.clear();
    vals.clear();
    for (std::size_t i = records.size() - tail; i < records.size(); ++i) {
      dofs.push_back(records[i].dof);
      vals.push_back(record_quantities(records[i])[k]);
    }
    report.tail_fit[k] = loglog_slope(dofs, vals);
  }
  return report;
}

std::string format_record_csv_row(const AdaptRecord& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%d,%d,%.12e,%.12e,%.12e,%.12e,%.12e,%.12e,%.3f", r.step, r.dof, r.err_max,
                r.star, r.starstar, r.eta_max, r.osc, r.ell_h, r.seconds);
  return buf;
}

void write_records_csv(const std::vector<AdaptRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_records_csv: cannot open " + path);
  out << records_csv_header() << "\n";
  for (const auto& r : records) out << format_record_csv_row(r) << "\n";
}

void write_rates_csv(const RatesReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_rates_csv: cannot open " + path);
  out << "step,dof";
  for (const auto* name : RatesReport::names) out << ',' << name << "_rate";
  out << "\n";
  char buf[64];
  auto put = [&](double v) {
    if (std::isnan(v)) {
      out << ",nan";
    } else {
      std::snprintf(buf, sizeof buf, ",%.6f", v);
      out << buf;
    }
  };
  for (const auto& row : report.pairs) {
    out << row.step << ',' << row.dof;
    for (double s : row.slope) put(s);
    out << "\n";
  }
  out << "tail,-";
  for (double s : report.tail_fit) put(s);
  out << "\n";
  for (const auto& note : report.notes) out << "# " << note << "\n";
}

RunResult run(const RunSpec& spec) {
  AdaptConfig config;
  config.kmax = spec.kmax;
  config.max_dof = spec.max_dof;
  config.mode = spec.mode;
  config.initial_n = spec.initial_n;
  config.stab.kind = spec.stab;
  config.stab.supg_scale = spec.supg_scale;
  config.stab.c_cip = spec.c_cip;
  config.estimator = spec.estimator;
  config.lin_tol = spec.lin_tol;
  config.problem = problem_by_name(spec.problem_id, spec.eps);

  std::ofstream csv;
  if (!spec.out_csv.empty()) {
    csv.open(spec.out_csv);
    if (!csv) throw std::invalid_argument("run: cannot open output file " + spec.out_csv);
    csv << records_csv_header() << "\n";
    csv.flush();
  }

  const std::string stem = spec.out_csv.empty() ? std::string() : stem_of(spec.out_csv);
  StepCallback on_step = [&](const AdaptRecord& rec, const Mesh& mesh, const IndicatorReport& report) {
    if (csv.is_open()) {
      csv << format_record_csv_row(rec) << "\n";
      csv.flush();
    }
    if (spec.export_mesh_every > 0 && rec.step % spec.export_mesh_every == 0 && !stem.empty()) {
      const std::string tag = stem + "_step" + std::to_string(rec.step);
      write_mesh_txt(mesh, tag + "_mesh.txt");
      std::vector<double> eta(report.elements.size());
      for (std::size_t t = 0; t < eta.size(); ++t) eta[t] = report.elements[t].eta;
      write_mesh_vtk(mesh, tag + "_mesh.vtk", &eta, "eta");
      write_indicator_csv(report, tag + "_indicators.csv");
    }
  };

  RunResult result;
  result.records = adapt_loop(config, on_step);

  if (!spec.out_csv.empty() && result.records.size() >= 2)
    write_rates_csv(rates(result.records), stem + "_rates.csv");
  return result;
}

}  // namespace cdafem
