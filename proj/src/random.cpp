#include "ls/random.hpp"

#include <cmath>

namespace ls {

Vec Rng::random_state(int dim) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = complex_normal();
  return v / v.norm();
}

Mat Rng::random_matrix(int rows, int cols) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) m(i, k) = complex_normal();
  return m;
}

Mat Rng::random_hermitian(int dim) {
  Mat g = random_matrix(dim, dim);
  return 0.5 * (g + g.adjoint().eval());
}

Mat Rng::random_density(int dim) {
  Mat g = random_matrix(dim, dim);
  Mat rho = g * g.adjoint();
  return rho / rho.trace();
}

Mat Rng::haar_unitary(int dim) {
  Mat g = random_matrix(dim, dim);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    cplx d = r(i, i);
    q.col(i) *= (std::abs(d) > 0.0) ? d / std::abs(d) : cplx(1.0, 0.0);
  }
  return q;
}

Eigen::Vector3d Rng::random_unit3() {
  Eigen::Vector3d n;
  do {
    n << normal(), normal(), normal();
  } while (n.norm() < 1e-8);
  return n / n.norm();
}

}  // namespace ls
