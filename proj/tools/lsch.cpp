// Command-line front end: machine-readable reports for the Landau-Streater
// channel analyses. JSON to stdout by default, CSV with --format csv.
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ls/report.hpp"

namespace {

struct CommonFlags {
  int two_j = -1;
  double j_sugar = -1.0;
  std::string format = "json";
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int restarts = 64;
  std::string p = "2";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--two-j", flags.two_j, "Spin as the integer 2j");
  cmd->add_option("--j", flags.j_sugar, "Spin j (must be a half-integer)");
  cmd->add_option("--format", flags.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--seed", flags.seed, "RNG seed");
  cmd->add_option("--tol", flags.tol, "Comparison tolerance");
  cmd->add_option("--restarts", flags.restarts, "Optimizer restarts");
}

// Resolves --two-j / --j, validating half-integer exactness. Returns -1 on error.
int resolve_two_j(const CommonFlags& flags) {
  if (flags.two_j >= 0 && flags.j_sugar >= 0.0) {
    std::cerr << "error: pass either --two-j or --j, not both\n";
    return -1;
  }
  if (flags.two_j >= 0) {
    return flags.two_j >= 1 ? flags.two_j : -1;
  }
  if (flags.j_sugar >= 0.0) {
    const double doubled = 2.0 * flags.j_sugar;
    if (std::abs(doubled - std::round(doubled)) > 1e-12) {
      std::cerr << "error: --j must be an exact half-integer\n";
      return -1;
    }
    const int two_j = static_cast<int>(std::round(doubled));
    return two_j >= 1 ? two_j : -1;
  }
  std::cerr << "error: --two-j (or --j) is required\n";
  return -1;
}

int emit(const ls::Report& report, const std::string& format) {
  if (format == "csv") {
    std::cout << ls::to_csv(report);
  } else {
    std::cout << report.doc.dump(2) << "\n";
  }
  if (report.tolerance_breach) {
    std::cerr << "tolerance breach in quantity: " << report.breach_quantity
              << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-Streater channel analysis"};
  app.require_subcommand(1);

  struct Entry {
    const char* name;
    const char* help;
    ls::Report (*fn)(ls::TwoJ, const ls::ReportOptions&);
  };
  const Entry entries[] = {
      {"spectrum", "Map spectrum, determinant, eigenoperator residuals",
       ls::cmd_spectrum},
      {"capacities", "Chi / entanglement-assisted / quantum capacities",
       ls::cmd_capacities},
      {"degradability", "Degradability and antidegradability verdicts",
       ls::cmd_degradability},
      {"entanglement", "Entanglement annihilation and breaking",
       ls::cmd_entanglement},
      {"extremes", "Maximal output p-norm and minimal output entropy",
       ls::cmd_extremes},
      {"multiplicativity", "2-norm multiplicativity gap for Phi (x) Phi",
       ls::cmd_multiplicativity},
      {"report", "Run every analysis", ls::cmd_report},
  };

  CommonFlags flags[std::size(entries)];
  for (size_t i = 0; i < std::size(entries); ++i) {
    CLI::App* cmd = app.add_subcommand(entries[i].name, entries[i].help);
    add_common(cmd, flags[i]);
    if (std::string(entries[i].name) == "extremes") {
      cmd->add_option("--p", flags[i].p, "Schatten exponent (>= 1 or inf)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (size_t i = 0; i < std::size(entries); ++i) {
    if (!app.get_subcommand(entries[i].name)->parsed()) continue;
    const CommonFlags& f = flags[i];
    const int two_j = resolve_two_j(f);
    if (two_j < 1) return 2;

    ls::ReportOptions opt;
    opt.seed = f.seed;
    opt.tol = f.tol;
    opt.restarts = f.restarts;
    if (f.p == "inf") {
      opt.p = ls::kInfiniteP;
    } else {
      try {
        opt.p = std::stod(f.p);
      } catch (...) {
        std::cerr << "error: --p must be a number or 'inf'\n";
        return 2;
      }
      if (opt.p < 1.0) {
        std::cerr << "error: --p must be >= 1\n";
        return 2;
      }
    }
    try {
      return emit(entries[i].fn(ls::TwoJ(two_j), opt), f.format);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return 2;
}
