#pragma once

#include "ls/linalg.hpp"

namespace ls {

/// Spin label carried exactly as the integer 2j. Basis order is always
/// m = j, j-1, ..., -j, so |j,m> sits at index (2j - 2m)/2.
struct TwoJ {
  int two_j;

  explicit TwoJ(int tj) : two_j(tj) {
    if (tj < 0) throw std::invalid_argument("TwoJ: 2j must be non-negative");
  }
  double j() const { return 0.5 * two_j; }
  int dim() const { return two_j + 1; }
  /// Basis index of |j,m> for doubled projection 2m.
  int index_of(int two_m) const { return (two_j - two_m) / 2; }
};

struct SpinTriple {
  Mat jx, jy, jz;
};

/// Spin projection operators in the m-descending basis. Requires 2j >= 1.
SpinTriple spin_operators(TwoJ j);

/// Raising (sign=+1) / lowering (sign=-1) ladder operator.
Mat ladder(TwoJ j, int sign);

/// Clebsch-Gordan coefficient <j1 m1 j2 m2 | J M> in the Condon-Shortley
/// convention. Arguments are doubled half-integers. Returns 0 outside the
/// selection rules; throws on malformed half-integers (|m| > j or parity).
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2,
                      int two_J, int two_M);

/// Polarization operator T_LM built from the Clebsch-Gordan expansion
/// T_LM = sum_{m1,m2} (-1)^{j-m1} C^{LM}_{j m2, j -m1} |j m2><j m1|.
Mat polarization_operator(TwoJ j, int L, int M);

}  // namespace ls
