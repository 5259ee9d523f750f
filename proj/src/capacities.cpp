#include "ls/capacities.hpp"

#include <cmath>

#include "ls/extremes.hpp"

namespace ls {

double chi_capacity(TwoJ j) {
  return std::log2(static_cast<double>(j.dim())) - min_output_entropy_closed(j);
}

double ea_capacity(TwoJ j) {
  return 2.0 * std::log2(static_cast<double>(j.dim())) - std::log2(3.0);
}

double coherent_information(const KrausChannel& ch, const Mat& rho) {
  return von_neumann_entropy(apply_channel(ch, rho)) -
         von_neumann_entropy(apply_channel(complementary(ch), rho));
}

QuantumCapacityVerdict quantum_capacity_verdict(TwoJ j) {
  if (j.two_j <= 2) {
    // Antidegradable for j = 1/2 and j = 1, hence Q = 0.
    return {true, 0.0};
  }
  return {false, std::log2(static_cast<double>(j.dim())) - std::log2(3.0)};
}

CapacityReport capacity_report(TwoJ j) {
  CapacityReport report;
  report.two_j = j.two_j;
  report.chi_capacity = chi_capacity(j);
  report.chi_equals_classical = (j.two_j == 1);  // additivity known for qubits
  report.ea_capacity = ea_capacity(j);
  report.s_min = min_output_entropy_closed(j);
  auto verdict = quantum_capacity_verdict(j);
  report.q_exact_zero = verdict.q_zero;
  report.q_lower_bound = verdict.lower_bound;
  KrausChannel phi = landau_streater(j);
  Mat mm = Mat::Identity(j.dim(), j.dim()) / static_cast<double>(j.dim());
  report.coherent_info_mm = coherent_information(phi, mm);
  return report;
}

}  // namespace ls
