#pragma once

#include <cstdint>
#include <random>

#include "ls/linalg.hpp"

namespace ls {

/// Seeded source of random test objects. Deterministic for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double normal() { return normal_(gen_); }
  double uniform() { return uniform_(gen_); }

  cplx complex_normal() { return {normal(), normal()}; }

  /// Unit-norm complex vector with i.i.d. Gaussian entries.
  Vec random_state(int dim);

  Mat random_matrix(int rows, int cols);
  Mat random_hermitian(int dim);
  /// Random density operator (normalized G G^dag).
  Mat random_density(int dim);
  /// Haar-distributed unitary: QR of a complex Gaussian matrix with the
  /// diagonal phases of R normalized away.
  Mat haar_unitary(int dim);

  Eigen::Vector3d random_unit3();

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace ls
