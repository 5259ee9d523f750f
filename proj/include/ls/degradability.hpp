#pragma once

#include "ls/channel.hpp"

namespace ls {

struct FactoringResult {
  SuperOperator t;      // least-squares solution of T o A = B
  double residual;      // ||T S_A - S_B||_F
};

/// Least-squares factoring map through pseudo-inversion of A's superoperator.
/// Singular values of S_A below sv_tol are truncated.
FactoringResult factoring_map(const KrausChannel& a, const KrausChannel& b,
                              double sv_tol = 1e-9);

struct DegradabilityVerdict {
  bool degradable = false;
  bool antidegradable = false;
  /// Certificates backing the verdict.
  double factoring_residual = 0.0;
  double factoring_choi_min_eig = 0.0;
  double closed_form_diag = 0.0;  // only set for the j >= 3/2 degradability case
  double choi_ppt_min_eig = 0.0;  // PPT certificate for the j = 1/2 case
  int choi_rank_complementary = 0;
};

DegradabilityVerdict is_degradable(TwoJ j, double tol = 1e-8);
DegradabilityVerdict is_antidegradable(TwoJ j, double tol = 1e-8);

/// Closed-form diagonal Choi element (m^2 - 1)/((2j+1)(j^2 + j - 3)) of the
/// factoring map at alpha = z. Requires j >= 3/2.
double degradability_diag_element(TwoJ j, int two_m);

/// Number of Choi eigenvalues above tol.
int choi_rank(const KrausChannel& ch, double tol = 1e-9);

/// Phi^{-1}[J_z^2] = (j(j+1)/(j(j+1)-3)) (J_z^2 - I).
Mat phi_inverse_on_jz2(TwoJ j);

}  // namespace ls
