#include "ls/entanglement.hpp"

#include <cmath>
#include <stdexcept>

namespace ls {

Vec schmidt2_state(TwoJ j) {
  const int d = j.dim();
  Vec phi = Vec::Zero(static_cast<long>(d) * d);
  const int top = j.index_of(j.two_j);
  const int bottom = j.index_of(-j.two_j);
  phi(top * d + top) = 1.0 / std::sqrt(2.0);
  phi(bottom * d + bottom) = 1.0 / std::sqrt(2.0);
  return phi;
}

PptReport ppt_check(const Mat& rho, int dim_a, int dim_b, double tol) {
  if (!is_hermitian(rho, 1e-10) ||
      std::abs(rho.trace().real() - 1.0) > 1e-8) {
    throw std::invalid_argument("ppt_check: rho must be a density operator");
  }
  Mat pt = partial_transpose(rho, dim_a, dim_b, Subsystem::B);
  auto eig = eig_hermitian(0.5 * (pt + pt.adjoint().eval()));
  PptReport report;
  report.min_pt_eigenvalue = eig.spectrum.values.back();
  report.entangled = report.min_pt_eigenvalue < -tol;
  return report;
}

PptReport annihilation_witness(TwoJ j) {
  KrausChannel phi2 = tensor(landau_streater(j), landau_streater(j));
  Vec witness = schmidt2_state(j);
  Mat out = apply_channel(phi2, witness * witness.adjoint());
  return ppt_check(out, j.dim(), j.dim());
}

EbVerdict eb_verdict(TwoJ j) {
  EbVerdict verdict;
  if (j.two_j == 1) {
    // Depolarizing channel with q = -1/3 is entanglement breaking;
    // certificate: its Choi state is PPT.
    KrausChannel phi = landau_streater(j);
    ChoiMatrix omega = choi(phi);
    Mat pt = partial_transpose(omega.matrix, phi.d_out, phi.d_in, Subsystem::B);
    auto eig = eig_hermitian(0.5 * (pt + pt.adjoint().eval()));
    verdict.certificate = eig.spectrum.values.back();
    verdict.entanglement_breaking = verdict.certificate >= -1e-10;
    return verdict;
  }
  // The Schmidt-rank-2 state survives Phi (x) Phi, so Phi cannot be
  // entanglement breaking.
  PptReport witness = annihilation_witness(j);
  verdict.certificate = witness.min_pt_eigenvalue;
  verdict.entanglement_breaking = !witness.entangled;
  return verdict;
}

}  // namespace ls
