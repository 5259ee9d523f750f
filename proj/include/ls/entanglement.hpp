#pragma once

#include "ls/channel.hpp"

namespace ls {

struct PptReport {
  double min_pt_eigenvalue = 0.0;
  bool entangled = false;  // min_pt_eigenvalue < -tol
};

/// Schmidt-rank-2 witness state (|j,j>|j,j> + |j,-j>|j,-j|) / sqrt(2).
Vec schmidt2_state(TwoJ j);

/// Peres-Horodecki check: minimal eigenvalue of the partial transpose over
/// subsystem B.
PptReport ppt_check(const Mat& rho, int dim_a, int dim_b, double tol = 1e-9);

/// Applies Phi (x) Phi to the Schmidt-rank-2 state and runs the PPT check.
/// Entangled output for j >= 1; separable (PPT) for j = 1/2.
PptReport annihilation_witness(TwoJ j);

struct EbVerdict {
  bool entanglement_breaking = false;
  double certificate = 0.0;  // Choi PT min eigenvalue (j=1/2) or witness value
};

EbVerdict eb_verdict(TwoJ j);

}  // namespace ls
