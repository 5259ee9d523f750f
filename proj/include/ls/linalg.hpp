#pragma once

#include <complex>
#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace ls {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kClosedFormTol = 1e-10;
inline constexpr double kOptimizerTol = 1e-6;
inline constexpr double kInfiniteP = std::numeric_limits<double>::infinity();

/// Real eigenvalues sorted descending, multiplicity-resolved.
struct Spectrum {
  std::vector<double> values;

  double sum() const;
  /// All values >= -tol and sum == 1 within tol.
  bool is_density_spectrum(double tol = 1e-10) const;
  /// Max pointwise distance after sorting both descending. Sizes must match.
  static double multiset_distance(const Spectrum& a, const Spectrum& b);
};

struct EigResult {
  Spectrum spectrum;    // descending
  Mat eigenvectors;     // columns, ordered to match spectrum.values
};

double max_abs(const Mat& m);
bool is_hermitian(const Mat& m, double tol = kHermitianTol);

/// Hermitian eigendecomposition, H = U diag(values) U^dag.
/// Throws std::invalid_argument for non-square or non-Hermitian input.
EigResult eig_hermitian(const Mat& h);

/// General (possibly non-Hermitian) eigenvalues, unsorted.
std::vector<cplx> eig_general(const Mat& m);

/// Schatten p-norm from singular values; p = kInfiniteP gives the operator norm.
/// Throws for p < 1.
double schatten_norm(const Mat& a, double p);

/// Von Neumann entropy in bits. rho must be PSD and unit trace within tol.
/// Eigenvalues in [-tol, 0) are clamped to 0.
double von_neumann_entropy(const Mat& rho, double tol = 1e-10);

Mat kron(const Mat& a, const Mat& b);

enum class Subsystem { A, B };

/// Partial trace of an operator on H_A (x) H_B; `traced_out` is removed.
Mat partial_trace(const Mat& m, int dim_a, int dim_b, Subsystem traced_out);

/// Partial transpose over the given subsystem.
Mat partial_transpose(const Mat& m, int dim_a, int dim_b, Subsystem transposed);

/// Moore-Penrose pseudo-inverse, singular values below tol truncated.
Mat pinv(const Mat& m, double tol = 1e-9);

/// Hermitian matrix power via spectral decomposition; negative eigenvalues
/// within clamp_tol are clamped to zero first.
Mat hermitian_power(const Mat& h, double p, double clamp_tol = 1e-10);

}  // namespace ls
