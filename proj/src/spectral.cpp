#include "ls/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ls {

Spectrum MapSpectrum::flatten() const {
  Spectrum s;
  for (const Level& level : levels) {
    for (int i = 0; i < level.multiplicity; ++i) {
      s.values.push_back(level.lambda);
    }
  }
  std::sort(s.values.begin(), s.values.end(), std::greater<double>());
  return s;
}

MapSpectrum ls_spectrum_closed(TwoJ j) {
  const double jj1 = j.j() * (j.j() + 1.0);
  MapSpectrum spec;
  for (int L = 0; L <= j.two_j; ++L) {
    spec.levels.push_back({L, 1.0 - L * (L + 1) / (2.0 * jj1), 2 * L + 1});
  }
  return spec;
}

Spectrum map_spectrum_numeric(const KrausChannel& ch, double imag_tol) {
  if (ch.d_in != ch.d_out) {
    throw std::invalid_argument("map_spectrum_numeric: channel must be square");
  }
  auto values = eig_general(superoperator(ch).matrix);
  Spectrum s;
  for (cplx v : values) {
    if (std::abs(v.imag()) > imag_tol) {
      throw std::runtime_error(
          "map_spectrum_numeric: complex eigenvalue beyond tolerance");
    }
    s.values.push_back(v.real());
  }
  std::sort(s.values.begin(), s.values.end(), std::greater<double>());
  return s;
}

double determinant(const KrausChannel& ch) {
  double det = 1.0;
  for (double v : map_spectrum_numeric(ch).values) det *= v;
  return det;
}

std::vector<EigenoperatorResidual> verify_eigenoperators(TwoJ j,
                                                         std::uint64_t seed) {
  KrausChannel phi = landau_streater(j);
  MapSpectrum closed = ls_spectrum_closed(j);
  Rng rng(seed);
  std::vector<EigenoperatorResidual> table;
  for (const auto& level : closed.levels) {
    Mat t = polarization_operator(j, level.L, 0);
    double res = max_abs(apply_channel(phi, t) - level.lambda * t);
    Mat u = su2_rotation(j, rng.random_unit3(), 2.0 * M_PI * rng.uniform());
    Mat tr = u * t * u.adjoint();
    double rot = max_abs(apply_channel(phi, tr) - level.lambda * tr);
    table.push_back({level.L, res, rot});
  }
  return table;
}

Spectrum output_spectrum_jm(TwoJ j, int two_m) {
  if (std::abs(two_m) > j.two_j || ((j.two_j + two_m) % 2) != 0) {
    throw std::invalid_argument("output_spectrum_jm: bad projection");
  }
  const double jj1 = j.j() * (j.j() + 1.0);
  const double m = 0.5 * two_m;
  Spectrum s;
  s.values = {(jj1 - m * (m + 1.0)) / (2.0 * jj1),
              (jj1 - m * (m - 1.0)) / (2.0 * jj1), m * m / jj1};
  while (static_cast<int>(s.values.size()) < j.dim()) s.values.push_back(0.0);
  std::sort(s.values.begin(), s.values.end(), std::greater<double>());
  // For j = 1/2 the three-term formula carries one structural zero beyond
  // the qubit dimension; drop it so the multiset matches the output space.
  s.values.resize(j.dim());
  return s;
}

Spectrum output_spectrum_qutrit(double x1, double x2, double x3) {
  Spectrum s;
  s.values = {0.5 * (x1 + x2), 0.5 * (x1 + x3), 0.5 * (x2 + x3)};
  std::sort(s.values.begin(), s.values.end(), std::greater<double>());
  return s;
}

Mat su2_rotation(TwoJ j, const Eigen::Vector3d& axis, double angle) {
  if (std::abs(axis.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("su2_rotation: axis must be a unit vector");
  }
  SpinTriple s = spin_operators(j);
  Mat nj = axis(0) * s.jx + axis(1) * s.jy + axis(2) * s.jz;
  auto eig = eig_hermitian(nj);
  Mat u = Mat::Zero(j.dim(), j.dim());
  for (int i = 0; i < j.dim(); ++i) {
    u += std::exp(cplx(0.0, -angle * eig.spectrum.values[i])) *
         eig.eigenvectors.col(i) * eig.eigenvectors.col(i).adjoint();
  }
  return u;
}

double check_su2_covariance(TwoJ j, const Eigen::Vector3d& axis, double angle,
                            const Mat& x) {
  KrausChannel phi = landau_streater(j);
  Mat u = su2_rotation(j, axis, angle);
  return max_abs(apply_channel(phi, u * x * u.adjoint()) -
                 u * apply_channel(phi, x) * u.adjoint());
}

std::pair<Mat, double> u3_partner(const Mat& u, int num_checks,
                                  std::uint64_t seed) {
  if (u.rows() != 3 || u.cols() != 3) {
    throw std::invalid_argument("u3_partner: U must be 3x3");
  }
  if (max_abs(u * u.adjoint() - Mat::Identity(3, 3)) > 1e-10) {
    throw std::invalid_argument("u3_partner: U must be unitary");
  }
  // V_{ab} = (-1)^{a+b} conj(U_{4-a, 4-b}) in 1-based indices.
  Mat v(3, 3);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const double sign = ((a + b) % 2) ? -1.0 : 1.0;
      v(a, b) = sign * std::conj(u(2 - a, 2 - b));
    }
  }
  KrausChannel phi = landau_streater(TwoJ(2));
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < num_checks; ++i) {
    Mat x = rng.random_hermitian(3);
    double res = max_abs(apply_channel(phi, u * x * u.adjoint()) -
                         v * apply_channel(phi, x) * v.adjoint());
    worst = std::max(worst, res);
  }
  return {v, worst};
}

CounterexampleResult global_covariance_counterexample(TwoJ j, double tol) {
  CounterexampleResult result;
  result.spec_jj = output_spectrum_jm(j, j.two_j);
  result.spec_jjm1 = output_spectrum_jm(j, j.two_j - 2);
  result.equal =
      Spectrum::multiset_distance(result.spec_jj, result.spec_jjm1) <= tol;
  return result;
}

}  // namespace ls
