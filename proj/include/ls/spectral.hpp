#pragma once

#include <utility>
#include <vector>

#include "ls/channel.hpp"
#include "ls/random.hpp"

namespace ls {

/// Map spectrum as (eigenvalue, multiplicity) pairs, L ascending.
struct MapSpectrum {
  struct Level {
    int L;
    double lambda;
    int multiplicity;  // 2L + 1
  };
  std::vector<Level> levels;

  Spectrum flatten() const;  // descending multiset of size (2j+1)^2
};

/// Closed form lambda_L = 1 - L(L+1)/(2 j (j+1)), multiplicity 2L+1.
MapSpectrum ls_spectrum_closed(TwoJ j);

/// Eigenvalues of the superoperator matrix, asserted real within imag_tol,
/// sorted descending.
Spectrum map_spectrum_numeric(const KrausChannel& ch, double imag_tol = 1e-9);

/// Product of all map eigenvalues.
double determinant(const KrausChannel& ch);

struct EigenoperatorResidual {
  int L;
  double residual;          // ||Phi[T_L0] - lambda_L T_L0||_max
  double rotated_residual;  // same for U_g T_L0 U_g^dag, random g
};

std::vector<EigenoperatorResidual> verify_eigenoperators(TwoJ j,
                                                         std::uint64_t seed = 1);

/// Output spectrum of Phi[|j,m><j,m|], zeros padded to dimension 2j+1.
Spectrum output_spectrum_jm(TwoJ j, int two_m);

/// j = 1: the output spectrum is the set of pairwise means of the input one.
Spectrum output_spectrum_qutrit(double x1, double x2, double x3);

/// Rotation unitary exp(-i theta n.J) via the spectral decomposition of n.J.
Mat su2_rotation(TwoJ j, const Eigen::Vector3d& axis, double angle);

/// ||Phi[U X U^dag] - U Phi[X] U^dag||_max for U = exp(-i theta n.J).
double check_su2_covariance(TwoJ j, const Eigen::Vector3d& axis, double angle,
                            const Mat& x);

/// j = 1 global unitary covariance partner V of U (signed conjugates of the
/// anti-transposed U) and the worst residual over random inputs.
std::pair<Mat, double> u3_partner(const Mat& u, int num_checks = 20,
                                  std::uint64_t seed = 2);

struct CounterexampleResult {
  Spectrum spec_jj;        // Spec(Phi[|j,j><j,j|])
  Spectrum spec_jjm1;      // Spec(Phi[|j,j-1><j,j-1|])
  bool equal;
};

/// Prop. 3 check: the two spectra coincide iff j <= 1.
CounterexampleResult global_covariance_counterexample(TwoJ j,
                                                      double tol = 1e-9);

}  // namespace ls
