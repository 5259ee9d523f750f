#include "ls/angular.hpp"

#include <cmath>

namespace ls {

SpinTriple spin_operators(TwoJ j) {
  if (j.two_j < 1) {
    throw std::invalid_argument("spin_operators: need 2j >= 1");
  }
  Mat jp = ladder(j, +1);
  Mat jm = ladder(j, -1);
  SpinTriple s;
  s.jx = 0.5 * (jp + jm);
  s.jy = cplx(0.0, -0.5) * (jp - jm);
  s.jz = Mat::Zero(j.dim(), j.dim());
  for (int two_m = j.two_j; two_m >= -j.two_j; two_m -= 2) {
    s.jz(j.index_of(two_m), j.index_of(two_m)) = 0.5 * two_m;
  }
  return s;
}

Mat ladder(TwoJ j, int sign) {
  const int d = j.dim();
  Mat op = Mat::Zero(d, d);
  for (int two_m = j.two_j; two_m >= -j.two_j; two_m -= 2) {
    const int two_mt = two_m + 2 * sign;
    if (std::abs(two_mt) > j.two_j) continue;
    // J_pm |j,m> = sqrt((j -+ m)(j +- m + 1)) |j, m +- 1>
    const double jd = j.j(), md = 0.5 * two_m;
    const double amp = (sign > 0) ? std::sqrt((jd - md) * (jd + md + 1.0))
                                  : std::sqrt((jd + md) * (jd - md + 1.0));
    op(j.index_of(two_mt), j.index_of(two_m)) = amp;
  }
  return op;
}

namespace {

long double factorial(int n) {
  static std::vector<long double> table = [] {
    std::vector<long double> t(261);
    t[0] = 1.0L;
    for (int i = 1; i <= 260; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table.at(n);
}

void check_half_integer_pair(int two_j, int two_m) {
  if (two_j < 0 || std::abs(two_m) > two_j || ((two_j + two_m) % 2) != 0) {
    throw std::invalid_argument("clebsch_gordan: malformed (j, m) pair");
  }
}

}  // namespace

double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2,
                      int two_J, int two_M) {
  check_half_integer_pair(two_j1, two_m1);
  check_half_integer_pair(two_j2, two_m2);
  check_half_integer_pair(two_J, two_M);

  if (two_M != two_m1 + two_m2) return 0.0;
  // Triangle rule; j1 + j2 + J must also be an integer.
  if (two_J < std::abs(two_j1 - two_j2) || two_J > two_j1 + two_j2) return 0.0;
  if (((two_j1 + two_j2 + two_J) % 2) != 0) return 0.0;

  // Racah closed-form sum; every factorial argument below is an integer.
  const int a = (two_j1 + two_j2 - two_J) / 2;
  const int b = (two_j1 - two_j2 + two_J) / 2;
  const int c = (-two_j1 + two_j2 + two_J) / 2;
  const int jpm1 = (two_j1 + two_m1) / 2, jmm1 = (two_j1 - two_m1) / 2;
  const int jpm2 = (two_j2 + two_m2) / 2, jmm2 = (two_j2 - two_m2) / 2;
  const int JpM = (two_J + two_M) / 2, JmM = (two_J - two_M) / 2;

  const long double norm2 =
      (two_J + 1) * factorial(a) * factorial(b) * factorial(c) /
      factorial((two_j1 + two_j2 + two_J) / 2 + 1) * factorial(JpM) *
      factorial(JmM) * factorial(jmm1) * factorial(jpm1) * factorial(jmm2) *
      factorial(jpm2);

  const int t1 = (two_J - two_j2 + two_m1) / 2;  // J - j2 + m1
  const int t2 = (two_J - two_j1 - two_m2) / 2;  // J - j1 - m2
  const int k_min = std::max(0, std::max(-t1, -t2));
  const int k_max = std::min(a, std::min(jmm1, jpm2));

  long double sum = 0.0L;
  for (int k = k_min; k <= k_max; ++k) {
    const long double term =
        factorial(k) * factorial(a - k) * factorial(jmm1 - k) *
        factorial(jpm2 - k) * factorial(t1 + k) * factorial(t2 + k);
    sum += ((k % 2) ? -1.0L : 1.0L) / term;
  }
  return static_cast<double>(std::sqrt(norm2) * sum);
}

Mat polarization_operator(TwoJ j, int L, int M) {
  if (L < 0 || L > j.two_j || std::abs(M) > L) {
    throw std::invalid_argument("polarization_operator: L or M out of range");
  }
  const int d = j.dim();
  Mat t = Mat::Zero(d, d);
  for (int two_m1 = j.two_j; two_m1 >= -j.two_j; two_m1 -= 2) {
    for (int two_m2 = j.two_j; two_m2 >= -j.two_j; two_m2 -= 2) {
      const double cg =
          clebsch_gordan(j.two_j, two_m2, j.two_j, -two_m1, 2 * L, 2 * M);
      if (cg == 0.0) continue;
      const int phase = ((j.two_j - two_m1) / 2) % 2 ? -1 : 1;
      t(j.index_of(two_m2), j.index_of(two_m1)) += phase * cg;
    }
  }
  return t;
}

}  // namespace ls
