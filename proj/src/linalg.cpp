#include "ls/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ls {

double Spectrum::sum() const {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

bool Spectrum::is_density_spectrum(double tol) const {
  for (double v : values) {
    if (v < -tol) return false;
  }
  return std::abs(sum() - 1.0) <= tol;
}

double Spectrum::multiset_distance(const Spectrum& a, const Spectrum& b) {
  if (a.values.size() != b.values.size()) {
    throw std::invalid_argument("multiset_distance: size mismatch");
  }
  std::vector<double> x = a.values;
  std::vector<double> y = b.values;
  std::sort(x.begin(), x.end(), std::greater<double>());
  std::sort(y.begin(), y.end(), std::greater<double>());
  double d = 0.0;
  for (size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

double max_abs(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

EigResult eig_hermitian(const Mat& h) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("eig_hermitian: matrix must be square");
  }
  if (!is_hermitian(h)) {
    throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_hermitian: solver failed");
  }
  // Eigen sorts ascending; flip to descending.
  const int n = static_cast<int>(h.rows());
  EigResult result;
  result.spectrum.values.resize(n);
  result.eigenvectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    result.spectrum.values[i] = solver.eigenvalues()(n - 1 - i);
    result.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return result;
}

std::vector<cplx> eig_general(const Mat& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("eig_general: matrix must be square");
  }
  Eigen::ComplexEigenSolver<Mat> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_general: solver failed");
  }
  std::vector<cplx> values(m.rows());
  for (int i = 0; i < m.rows(); ++i) values[i] = solver.eigenvalues()(i);
  return values;
}

double schatten_norm(const Mat& a, double p) {
  if (p < 1.0) {
    throw std::invalid_argument("schatten_norm: p must be >= 1");
  }
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& s = svd.singularValues();
  if (std::isinf(p)) {
    return s.size() == 0 ? 0.0 : s.maxCoeff();
  }
  double acc = 0.0;
  for (int i = 0; i < s.size(); ++i) acc += std::pow(s(i), p);
  return std::pow(acc, 1.0 / p);
}

double von_neumann_entropy(const Mat& rho, double tol) {
  if (std::abs(rho.trace().real() - 1.0) > tol ||
      std::abs(rho.trace().imag()) > tol) {
    throw std::invalid_argument("von_neumann_entropy: trace must be 1");
  }
  auto eig = eig_hermitian(rho);
  double entropy = 0.0;
  for (double x : eig.spectrum.values) {
    if (x < -tol) {
      throw std::invalid_argument("von_neumann_entropy: negative eigenvalue");
    }
    if (x <= 0.0) continue;  // 0 log 0 := 0
    entropy -= x * std::log2(x);
  }
  return entropy;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
    }
  }
  return out;
}

static void check_bipartite(const Mat& m, int dim_a, int dim_b) {
  const long d = static_cast<long>(dim_a) * dim_b;
  if (m.rows() != d || m.cols() != d) {
    throw std::invalid_argument("bipartite operation: dimension mismatch");
  }
}

Mat partial_trace(const Mat& m, int dim_a, int dim_b, Subsystem traced_out) {
  check_bipartite(m, dim_a, dim_b);
  if (traced_out == Subsystem::B) {
    Mat out = Mat::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
      for (int k = 0; k < dim_a; ++k)
        for (int b = 0; b < dim_b; ++b)
          out(i, k) += m(i * dim_b + b, k * dim_b + b);
    return out;
  }
  Mat out = Mat::Zero(dim_b, dim_b);
  for (int i = 0; i < dim_b; ++i)
    for (int k = 0; k < dim_b; ++k)
      for (int a = 0; a < dim_a; ++a)
        out(i, k) += m(a * dim_b + i, a * dim_b + k);
  return out;
}

Mat partial_transpose(const Mat& m, int dim_a, int dim_b, Subsystem transposed) {
  check_bipartite(m, dim_a, dim_b);
  Mat out(m.rows(), m.cols());
  for (int a1 = 0; a1 < dim_a; ++a1)
    for (int b1 = 0; b1 < dim_b; ++b1)
      for (int a2 = 0; a2 < dim_a; ++a2)
        for (int b2 = 0; b2 < dim_b; ++b2) {
          if (transposed == Subsystem::B) {
            out(a1 * dim_b + b1, a2 * dim_b + b2) =
                m(a1 * dim_b + b2, a2 * dim_b + b1);
          } else {
            out(a1 * dim_b + b1, a2 * dim_b + b2) =
                m(a2 * dim_b + b1, a1 * dim_b + b2);
          }
        }
  return out;
}

Mat pinv(const Mat& m, double tol) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > tol) inv(i) = 1.0 / s(i);
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

Mat hermitian_power(const Mat& h, double p, double clamp_tol) {
  auto eig = eig_hermitian(h);
  const int n = static_cast<int>(h.rows());
  Mat out = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    double x = eig.spectrum.values[i];
    if (x < 0.0 && x >= -clamp_tol) x = 0.0;
    if (x == 0.0 && p <= 0.0) continue;
    const double xp = (x == 0.0) ? 0.0 : std::pow(x, p);
    out += xp * eig.eigenvectors.col(i) * eig.eigenvectors.col(i).adjoint();
  }
  return out;
}

}  // namespace ls
