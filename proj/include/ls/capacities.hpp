#pragma once

#include "ls/channel.hpp"

namespace ls {

struct CapacityReport {
  int two_j = 0;
  double chi_capacity = 0.0;     // bits; exact classical capacity for j = 1/2,
                                 // a lower bound on C for j >= 1
  bool chi_equals_classical = false;
  double ea_capacity = 0.0;      // bits
  double s_min = 0.0;            // bits
  bool q_exact_zero = false;
  double q_lower_bound = 0.0;    // bits; meaningful when !q_exact_zero
  double coherent_info_mm = 0.0; // I_c at the maximally mixed input
};

/// C_chi = log2(2j+1) - S_min = log2((2j+1)/(j+1)) + (j/(j+1)) log2 j.
double chi_capacity(TwoJ j);

/// C_ea = 2 log2(2j+1) - log2(3).
double ea_capacity(TwoJ j);

/// I_c(rho, Phi) = S(Phi[rho]) - S(Phi~[rho]) in bits.
double coherent_information(const KrausChannel& ch, const Mat& rho);

struct QuantumCapacityVerdict {
  bool q_zero;
  double lower_bound;  // log2(2j+1) - log2(3) when q_zero is false
};

QuantumCapacityVerdict quantum_capacity_verdict(TwoJ j);

CapacityReport capacity_report(TwoJ j);

}  // namespace ls
