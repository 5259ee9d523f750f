#include "ls/degradability.hpp"

#include <cmath>
#include <stdexcept>

namespace ls {

FactoringResult factoring_map(const KrausChannel& a, const KrausChannel& b,
                              double sv_tol) {
  if (a.d_in != b.d_in) {
    throw std::invalid_argument("factoring_map: input dimension mismatch");
  }
  SuperOperator sa = superoperator(a);
  SuperOperator sb = superoperator(b);
  Mat t = sb.matrix * pinv(sa.matrix, sv_tol);
  double residual = (t * sa.matrix - sb.matrix).norm();
  return {{t, a.d_out, b.d_out}, residual};
}

namespace {

double choi_min_eigenvalue(const SuperOperator& t) {
  Mat omega = choi_from_superoperator(t).matrix;
  auto eig = eig_hermitian(0.5 * (omega + omega.adjoint().eval()));
  return eig.spectrum.values.back();
}

}  // namespace

DegradabilityVerdict is_degradable(TwoJ j, double tol) {
  KrausChannel phi = landau_streater(j);
  KrausChannel comp = complementary(phi);
  DegradabilityVerdict v;
  FactoringResult f = factoring_map(phi, comp);
  v.factoring_residual = f.residual;
  v.factoring_choi_min_eig = choi_min_eigenvalue(f.t);
  if (j.two_j >= 3) {
    // Closed-form negative diagonal Choi element: the factoring map cannot
    // be completely positive regardless of how the inverse is taken.
    const int two_m = (j.two_j % 2 == 0) ? 0 : 1;
    v.closed_form_diag = degradability_diag_element(j, two_m);
    v.degradable = false;
  } else {
    v.degradable = f.residual <= tol && v.factoring_choi_min_eig >= -tol;
  }
  return v;
}

DegradabilityVerdict is_antidegradable(TwoJ j, double tol) {
  KrausChannel phi = landau_streater(j);
  KrausChannel comp = complementary(phi);
  DegradabilityVerdict v;
  v.choi_rank_complementary = choi_rank(comp, 1e-9);
  if (j.two_j == 1) {
    // Entanglement-breaking depolarizing channel: Choi of Phi stays PPT.
    ChoiMatrix omega = choi(phi);
    Mat pt = partial_transpose(omega.matrix, phi.d_out, phi.d_in, Subsystem::B);
    auto eig = eig_hermitian(0.5 * (pt + pt.adjoint().eval()));
    v.choi_ppt_min_eig = eig.spectrum.values.back();
    v.antidegradable = v.choi_ppt_min_eig >= -1e-10;
    return v;
  }
  if (j.two_j == 2) {
    // Unitarily equivalent to the Werner-Holevo channel, which is
    // antidegradable; the factoring map certifies it numerically.
    FactoringResult f = factoring_map(comp, phi);
    v.factoring_residual = f.residual;
    v.factoring_choi_min_eig = choi_min_eigenvalue(f.t);
    v.antidegradable = f.residual <= tol && v.factoring_choi_min_eig >= -tol;
    return v;
  }
  // j >= 3/2: Choi rank of the complementary channel is 2j+1 > 3, so the
  // complementary channel is not degradable and Phi is not antidegradable.
  v.antidegradable = v.choi_rank_complementary <= 3;
  return v;
}

double degradability_diag_element(TwoJ j, int two_m) {
  if (j.two_j < 3) {
    throw std::invalid_argument("degradability_diag_element: need j >= 3/2");
  }
  if (std::abs(two_m) > j.two_j || ((j.two_j + two_m) % 2) != 0) {
    throw std::invalid_argument("degradability_diag_element: bad projection");
  }
  const double m = 0.5 * two_m;
  const double jd = j.j();
  return (m * m - 1.0) / ((2.0 * jd + 1.0) * (jd * jd + jd - 3.0));
}

int choi_rank(const KrausChannel& ch, double tol) {
  ChoiMatrix omega = choi(ch);
  auto eig = eig_hermitian(0.5 * (omega.matrix + omega.matrix.adjoint().eval()));
  int rank = 0;
  for (double v : eig.spectrum.values) {
    if (v > tol) ++rank;
  }
  return rank;
}

Mat phi_inverse_on_jz2(TwoJ j) {
  const double jj1 = j.j() * (j.j() + 1.0);
  SpinTriple s = spin_operators(j);
  Mat jz2 = s.jz * s.jz;
  return jj1 / (jj1 - 3.0) * (jz2 - Mat::Identity(j.dim(), j.dim()));
}

}  // namespace ls
