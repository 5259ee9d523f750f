#include "ls/report.hpp"

#include <cmath>
#include <cstdio>

#include "ls/capacities.hpp"
#include "ls/degradability.hpp"
#include "ls/entanglement.hpp"
#include "ls/extremes.hpp"
#include "ls/spectral.hpp"

namespace ls {

using nlohmann::json;

namespace {

json base_doc(const char* command, TwoJ j, const ReportOptions& opt) {
  json doc;
  doc["schema_version"] = "1";
  doc["command"] = command;
  doc["two_j"] = j.two_j;
  doc["seed"] = opt.seed;
  doc["tolerances"] = {{"tol", opt.tol}};
  return doc;
}

void add_row(Report& report, const std::string& quantity, double closed,
             double numeric, double tol) {
  const double dev = std::abs(closed - numeric);
  report.csv_rows.push_back({quantity, closed, numeric, dev});
  if (dev > tol && !report.tolerance_breach) {
    report.tolerance_breach = true;
    report.breach_quantity = quantity;
  }
}

void merge(Report& into, const Report& part, const char* key) {
  into.doc["payload"][key] = part.doc["payload"];
  for (const CsvRow& row : part.csv_rows) into.csv_rows.push_back(row);
  if (part.tolerance_breach && !into.tolerance_breach) {
    into.tolerance_breach = true;
    into.breach_quantity = part.breach_quantity;
  }
}

}  // namespace

Report cmd_spectrum(TwoJ j, const ReportOptions& opt) {
  Report report;
  report.doc = base_doc("spectrum", j, opt);
  KrausChannel phi = landau_streater(j);

  MapSpectrum closed = ls_spectrum_closed(j);
  Spectrum numeric = map_spectrum_numeric(phi);
  Spectrum flat = closed.flatten();
  const double deviation = Spectrum::multiset_distance(flat, numeric);

  json levels = json::array();
  for (const auto& level : closed.levels) {
    levels.push_back({{"L", level.L},
                      {"lambda", level.lambda},
                      {"multiplicity", level.multiplicity}});
  }
  double det_closed = 1.0;
  for (double v : flat.values) det_closed *= v;
  const double det_numeric = determinant(phi);

  double max_residual = 0.0;
  json residuals = json::array();
  for (const auto& row : verify_eigenoperators(j, opt.seed + 1)) {
    residuals.push_back({{"L", row.L},
                         {"residual", row.residual},
                         {"rotated_residual", row.rotated_residual}});
    max_residual =
        std::max(max_residual, std::max(row.residual, row.rotated_residual));
  }

  report.doc["payload"] = {{"levels", levels},
                           {"numeric_multiset", numeric.values},
                           {"max_deviation", deviation},
                           {"determinant_closed", det_closed},
                           {"determinant_numeric", det_numeric},
                           {"eigenoperator_residuals", residuals}};
  add_row(report, "map_spectrum_max_deviation", 0.0, deviation, opt.tol);
  add_row(report, "determinant", det_closed, det_numeric, opt.tol);
  add_row(report, "eigenoperator_max_residual", 0.0, max_residual, 1e-10);
  return report;
}

Report cmd_capacities(TwoJ j, const ReportOptions& opt) {
  Report report;
  report.doc = base_doc("capacities", j, opt);
  CapacityReport caps = capacity_report(j);

  KrausChannel phi = landau_streater(j);
  const int d = j.dim();
  Mat mm = Mat::Identity(d, d) / static_cast<double>(d);
  const double ea_numeric = von_neumann_entropy(mm) +
                            von_neumann_entropy(apply_channel(phi, mm)) -
                            von_neumann_entropy(apply_channel(complementary(phi), mm));

  report.doc["payload"] = {
      {"chi_capacity", caps.chi_capacity},
      {"chi_equals_classical", caps.chi_equals_classical},
      {"ea_capacity", caps.ea_capacity},
      {"ea_capacity_numeric", ea_numeric},
      {"s_min", caps.s_min},
      {"q_exact_zero", caps.q_exact_zero},
      {"q_lower_bound", caps.q_lower_bound},
      {"coherent_info_mm", caps.coherent_info_mm}};
  add_row(report, "ea_capacity", caps.ea_capacity, ea_numeric, 1e-10);
  if (!caps.q_exact_zero) {
    add_row(report, "q_lower_bound_vs_Ic", caps.q_lower_bound,
            caps.coherent_info_mm, 1e-10);
  }
  return report;
}

Report cmd_degradability(TwoJ j, const ReportOptions& opt) {
  Report report;
  report.doc = base_doc("degradability", j, opt);
  DegradabilityVerdict deg = is_degradable(j);
  DegradabilityVerdict anti = is_antidegradable(j);

  report.doc["payload"] = {
      {"degradable", deg.degradable},
      {"antidegradable", anti.antidegradable},
      {"factoring_residual", deg.factoring_residual},
      {"factoring_choi_min_eig", deg.factoring_choi_min_eig},
      {"closed_form_diag", deg.closed_form_diag},
      {"choi_ppt_min_eig", anti.choi_ppt_min_eig},
      {"choi_rank_complementary", anti.choi_rank_complementary}};

  const bool expect_deg = (j.two_j == 2);
  const bool expect_anti = (j.two_j <= 2);
  if (deg.degradable != expect_deg || anti.antidegradable != expect_anti) {
    report.tolerance_breach = true;
    report.breach_quantity = "degradability_verdict";
  }
  add_row(report, "choi_rank_complementary", j.dim(),
          anti.choi_rank_complementary, 0.5);
  return report;
}

Report cmd_entanglement(TwoJ j, const ReportOptions& opt) {
  Report report;
  report.doc = base_doc("entanglement", j, opt);
  PptReport witness = annihilation_witness(j);
  EbVerdict eb = eb_verdict(j);

  report.doc["payload"] = {{"witness_min_pt_eigenvalue",
                            witness.min_pt_eigenvalue},
                           {"witness_entangled", witness.entangled},
                           {"entanglement_breaking", eb.entanglement_breaking},
                           {"eb_certificate", eb.certificate}};
  if (j.two_j >= 2) {
    const double jd = j.j();
    const double closed = -jd * jd / (2.0 * (jd + 1.0) * (jd + 1.0));
    add_row(report, "witness_min_pt_eigenvalue", closed,
            witness.min_pt_eigenvalue, opt.tol);
    if (!witness.entangled) {
      report.tolerance_breach = true;
      report.breach_quantity = "witness_entangled";
    }
  } else if (witness.entangled || !eb.entanglement_breaking) {
    report.tolerance_breach = true;
    report.breach_quantity = "entanglement_breaking_verdict";
  }
  return report;
}

Report cmd_extremes(TwoJ j, const ReportOptions& opt) {
  Report report;
  report.doc = base_doc("extremes", j, opt);
  KrausChannel phi = landau_streater(j);
  OptimizerConfig cfg;
  cfg.restarts = opt.restarts;
  cfg.seed = opt.seed;

  const double nu_closed = max_p_norm_closed(j, opt.p);
  ExtremeResult nu = optimize_output_norm(phi, opt.p, cfg);
  const double smin_closed = min_output_entropy_closed(j);
  ExtremeResult purity = optimize_output_norm(phi, 2.0, cfg);
  const double smin_numeric = von_neumann_entropy(
      apply_channel(phi, purity.argmax_state * purity.argmax_state.adjoint()));

  report.doc["payload"] = {{"p", std::isinf(opt.p) ? json("inf") : json(opt.p)},
                           {"nu_p_closed", nu_closed},
                           {"nu_p_numeric", nu.value},
                           {"converged_restarts", nu.converged_restarts},
                           {"s_min_closed", smin_closed},
                           {"s_min_numeric", smin_numeric}};
  add_row(report, "nu_p", nu_closed, nu.value, 1e-6);
  add_row(report, "s_min", smin_closed, smin_numeric, 1e-6);
  return report;
}

Report cmd_multiplicativity(TwoJ j, const ReportOptions& opt) {
  Report report;
  report.doc = base_doc("multiplicativity", j, opt);
  OptimizerConfig cfg;
  cfg.restarts = opt.restarts;
  cfg.seed = opt.seed;
  MultiplicativityResult result = multiplicativity_experiment(j, cfg);

  report.doc["payload"] = {{"nu2_single", result.nu2_single},
                           {"nu2_double", result.nu2_double},
                           {"gap", result.gap},
                           {"converged", result.converged}};
  add_row(report, "multiplicativity_gap", 0.0, result.gap, 1e-4);
  return report;
}

Report cmd_report(TwoJ j, const ReportOptions& opt) {
  Report report;
  report.doc = base_doc("report", j, opt);
  report.doc["payload"] = json::object();
  merge(report, cmd_spectrum(j, opt), "spectrum");
  merge(report, cmd_capacities(j, opt), "capacities");
  merge(report, cmd_degradability(j, opt), "degradability");
  merge(report, cmd_entanglement(j, opt), "entanglement");
  merge(report, cmd_extremes(j, opt), "extremes");
  merge(report, cmd_multiplicativity(j, opt), "multiplicativity");
  return report;
}

std::string to_csv(const Report& report) {
  std::string out = "quantity,closed_form,numeric,deviation\n";
  char buf[128];
  for (const CsvRow& row : report.csv_rows) {
    std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g,%.17g\n",
                  row.quantity.c_str(), row.closed_form, row.numeric,
                  row.deviation);
    out += buf;
  }
  return out;
}

}  // namespace ls
