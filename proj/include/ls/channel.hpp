#pragma once

#include <vector>

#include "ls/angular.hpp"
#include "ls/linalg.hpp"

namespace ls {

/// Vectorization is row-major throughout: vec(|a><b|) has a single 1 at
/// index a*cols + b, and vec(K X K^dag) = (K (x) conj(K)) vec(X).
Vec vec(const Mat& x);
Mat unvec(const Vec& v, int rows, int cols);

struct KrausChannel {
  std::vector<Mat> kraus;  // each d_out x d_in
  int d_in = 0;
  int d_out = 0;
};

/// Choi state on H_out (x) H_in, normalized to unit trace.
struct ChoiMatrix {
  Mat matrix;
  int d_in = 0;
  int d_out = 0;
};

/// Natural (Liouville) representation, d_out^2 x d_in^2.
struct SuperOperator {
  Mat matrix;
  int d_in = 0;
  int d_out = 0;
};

KrausChannel identity_channel(int d);

/// Landau-Streater channel: Kraus operators J_alpha / sqrt(j(j+1)).
KrausChannel landau_streater(TwoJ j);

Mat apply_channel(const KrausChannel& ch, const Mat& x);

ChoiMatrix choi(const KrausChannel& ch);
SuperOperator superoperator(const KrausChannel& ch);
ChoiMatrix choi_from_superoperator(const SuperOperator& s);
SuperOperator superoperator_from_choi(const ChoiMatrix& omega);

/// Kraus decomposition from Choi eigenvectors with eigenvalue > rank_tol.
/// Throws if the Choi matrix has an eigenvalue below -rank_tol.
KrausChannel kraus_from_choi(const ChoiMatrix& omega, double rank_tol = 1e-9);

/// Complementary channel: for a channel with r Kraus operators and
/// d_in = d_out = d, returns d Kraus operators of size r x d,
/// (V~_i)_{alpha,b} = (V_alpha)_{i,b}.
KrausChannel complementary(const KrausChannel& ch);

/// Stinespring isometry V: H_d -> H_d (x) H_3 with system first,
/// V|psi> = sum_alpha (V_alpha |psi>) (x) |alpha>_env. Shape 3d x d.
Mat stinespring_isometry(TwoJ j);

/// Werner-Holevo channel Phi_WH[X] = (tr[X] I - X^T) / (d - 1).
KrausChannel werner_holevo(int d);
/// The 3x3 unitary W with Phi[X] = Phi_WH[W X W^dag] at j=1.
Mat ls_wh_unitary();

/// (a o b)[X] = a[b[X]].
KrausChannel compose(const KrausChannel& a, const KrausChannel& b);
KrausChannel tensor(const KrausChannel& a, const KrausChannel& b);
/// Dual (adjoint) map: Kraus operators conjugate-transposed.
KrausChannel dual(const KrausChannel& ch);

struct ChannelCheck {
  bool ok = false;
  double tp_residual = 0.0;
  double unital_residual = 0.0;
  double choi_min_eigenvalue = 0.0;
};

ChannelCheck is_cptp(const KrausChannel& ch, double tol = 1e-10);
ChannelCheck is_unital(const KrausChannel& ch, double tol = 1e-10);

}  // namespace ls
