#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ls/angular.hpp"

namespace ls {

/// Plot-ready CSV row: quantity, closed-form value, numeric value, deviation.
struct CsvRow {
  std::string quantity;
  double closed_form;
  double numeric;
  double deviation;
};

struct Report {
  nlohmann::json doc;
  std::vector<CsvRow> csv_rows;
  bool tolerance_breach = false;
  std::string breach_quantity;
};

struct ReportOptions {
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int restarts = 64;
  double p = 2.0;  // for the extremes command
};

Report cmd_spectrum(TwoJ j, const ReportOptions& opt);
Report cmd_capacities(TwoJ j, const ReportOptions& opt);
Report cmd_degradability(TwoJ j, const ReportOptions& opt);
Report cmd_entanglement(TwoJ j, const ReportOptions& opt);
Report cmd_extremes(TwoJ j, const ReportOptions& opt);
Report cmd_multiplicativity(TwoJ j, const ReportOptions& opt);
Report cmd_report(TwoJ j, const ReportOptions& opt);

std::string to_csv(const Report& report);

}  // namespace ls
