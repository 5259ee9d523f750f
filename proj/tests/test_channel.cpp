#include "test_util.hpp"

#include "ls/spectral.hpp"

using namespace ls;
using namespace ls::test;

TEST_CASE("vec/unvec row-major round trip") {
  Mat e01 = Mat::Zero(2, 3);
  e01(0, 1) = 1.0;
  Vec v = vec(e01);
  CHECK(v.size() == 6);
  CHECK(v(1) == cplx(1.0));
  CHECK(v.cwiseAbs().sum() == doctest::Approx(1.0));
  Rng rng(1);
  Mat m = rng.random_matrix(3, 4);
  check_close(unvec(vec(m), 3, 4), m, 0.0);
}

TEST_CASE("vec intertwines matrix multiplication") {
  Rng rng(2);
  Mat k = rng.random_matrix(3, 3);
  Mat x = rng.random_matrix(3, 3);
  Vec lhs = vec(k * x * k.adjoint());
  Vec rhs = kron(k, k.conjugate()) * vec(x);
  CHECK((lhs - rhs).norm() <= 1e-12);
}

TEST_CASE("landau_streater is CPTP and unital for 2j in 1..8") {
  for (int tj = 1; tj <= 8; ++tj) {
    auto ch = landau_streater(TwoJ(tj));
    CHECK(ch.kraus.size() == 3);
    CHECK(ch.d_in == tj + 1);
    auto cp = is_cptp(ch);
    CHECK(cp.ok);
    CHECK(cp.tp_residual <= 1e-12);
    CHECK(cp.choi_min_eigenvalue >= -1e-12);
    auto un = is_unital(ch);
    CHECK(un.ok);
    CHECK(un.unital_residual <= 1e-12);
  }
}

TEST_CASE("apply: j=1/2 reduces to depolarizing with q = -1/3") {
  auto ch = landau_streater(TwoJ(1));
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Mat rho = rng.random_density(2);
    Mat expect = -rho / 3.0 + (2.0 / 3.0) * Mat::Identity(2, 2);
    check_close(apply_channel(ch, rho), expect, 1e-13);
  }
}

TEST_CASE("apply preserves trace and hermiticity, and is self-dual") {
  Rng rng(4);
  for (int tj : {1, 2, 3, 5}) {
    auto ch = landau_streater(TwoJ(tj));
    Mat x = rng.random_hermitian(tj + 1);
    Mat y = apply_channel(ch, x);
    CHECK(std::abs(y.trace() - x.trace()) <= 1e-12);
    CHECK(is_hermitian(y, 1e-12));
    // Self-duality: tr[A Phi[B]] = tr[Phi[A] B].
    Mat a = rng.random_hermitian(tj + 1);
    CHECK(std::abs((a * apply_channel(ch, x)).trace() - (apply_channel(ch, a) * x).trace()) <=
          1e-11);
    check_close(apply_channel(dual(ch), x), apply_channel(ch, x), 1e-13);
  }
}

TEST_CASE("representation coherence: Kraus, Choi, superoperator agree") {
  Rng rng(5);
  for (int tj : {1, 2, 3}) {
    auto ch = landau_streater(TwoJ(tj));
    const int d = tj + 1;
    auto om = choi(ch);
    auto so = superoperator(ch);
    CHECK(std::abs(om.matrix.trace() - 1.0) <= 1e-12);
    check_close(choi_from_superoperator(so).matrix, om.matrix, 1e-12);
    check_close(superoperator_from_choi(om).matrix, so.matrix, 1e-12);
    Mat x = rng.random_hermitian(d);
    check_close(unvec(so.matrix * vec(x), d, d), apply_channel(ch, x), 1e-12);
    // Choi reproduces the channel: Phi[X] = d tr_in[Omega (I (x) X^T)].
    Mat via_choi =
        d * partial_trace(om.matrix * kron(Mat::Identity(d, d), x.transpose()),
                          d, d, Subsystem::B);
    check_close(via_choi, apply_channel(ch, x), 1e-12);
    // Round trip through the Choi eigenbasis.
    auto ch2 = kraus_from_choi(om);
    Mat y1 = apply_channel(ch, x);
    Mat y2 = apply_channel(ch2, x);
    check_close(y1, y2, 1e-11);
  }
}

TEST_CASE("choi of the identity channel is the maximally entangled state") {
  auto id = identity_channel(3);
  Vec psi = Vec::Zero(9);
  for (int i = 0; i < 3; ++i) psi(i * 3 + i) = 1.0 / std::sqrt(3.0);
  check_close(choi(id).matrix, projector(psi), 1e-14);
}

TEST_CASE("kraus_from_choi rejects non-PSD input") {
  ChoiMatrix bad;
  bad.d_in = bad.d_out = 2;
  bad.matrix = Mat::Identity(4, 4) / 4.0;
  bad.matrix(3, 3) = -0.1;
  CHECK_THROWS_AS(kraus_from_choi(bad), std::invalid_argument);
}

TEST_CASE("complementary: printed j=1/2 Kraus operators") {
  auto comp = complementary(landau_streater(TwoJ(1)));
  REQUIRE(comp.kraus.size() == 2);
  const double r3 = 1.0 / std::sqrt(3.0);
  const cplx i(0, 1);
  Mat v1(3, 2), v2(3, 2);
  v1 << 0, 1, 0, -i, 1, 0;
  v2 << 1, 0, i, 0, 0, -1;
  check_close(comp.kraus[0], r3 * v1, 1e-14);
  check_close(comp.kraus[1], r3 * v2, 1e-14);
}

TEST_CASE("complementary: printed j=1 Kraus operators") {
  auto comp = complementary(landau_streater(TwoJ(2)));
  REQUIRE(comp.kraus.size() == 3);
  const double h = 0.5;
  const double r = 1.0 / std::sqrt(2.0);
  const cplx i(0, 1);
  Mat v1(3, 3), v2(3, 3), v3(3, 3);
  v1 << 0, h, 0, 0, -i * h, 0, r, 0, 0;
  v2 << h, 0, h, i * h, 0, -i * h, 0, 0, 0;
  v3 << 0, h, 0, 0, i * h, 0, 0, 0, -r;
  check_close(comp.kraus[0], v1, 1e-14);
  check_close(comp.kraus[1], v2, 1e-14);
  check_close(comp.kraus[2], v3, 1e-14);
}

TEST_CASE("complementary channel is CPTP and maps I/d to I/3") {
  for (int tj = 1; tj <= 6; ++tj) {
    const int d = tj + 1;
    auto comp = complementary(landau_streater(TwoJ(tj)));
    CHECK(is_cptp(comp).ok);
    Mat out = apply_channel(comp, Mat::Identity(d, d) / d);
    check_close(out, Mat::Identity(3, 3) / 3.0, 1e-12);
  }
}

TEST_CASE("double complement has the same output spectra as the channel") {
  for (int tj : {1, 2, 3}) {
    const int d = tj + 1;
    auto ch = landau_streater(TwoJ(tj));
    auto dd = complementary(complementary(ch));
    CHECK(dd.d_in == d);
    CHECK(dd.d_out == d);
    Rng rng(6);
    for (int trial = 0; trial < 5; ++trial) {
      Mat rho = rng.random_density(d);
      auto s1 = eig_hermitian(apply_channel(ch, rho)).spectrum;
      auto s2 = eig_hermitian(apply_channel(dd, rho)).spectrum;
      CHECK(Spectrum::multiset_distance(s1, s2) <= 1e-10);
    }
  }
}

TEST_CASE("stinespring isometry realizes the channel and its complement") {
  for (int tj : {1, 2, 3}) {
    const int d = tj + 1;
    TwoJ j(tj);
    Mat v = stinespring_isometry(j);
    CHECK(v.rows() == 3 * d);
    CHECK(v.cols() == d);
    check_close(v.adjoint() * v, Mat::Identity(d, d), 1e-12);
    auto ch = landau_streater(j);
    auto comp = complementary(ch);
    Rng rng(7);
    Mat rho = rng.random_density(d);
    Mat big = v * rho * v.adjoint();  // on H_d (x) H_3
    check_close(partial_trace(big, d, 3, Subsystem::B), apply_channel(ch, rho), 1e-12);
    check_close(partial_trace(big, d, 3, Subsystem::A), apply_channel(comp, rho),
                1e-12);
  }
}

TEST_CASE("werner_holevo channel and the j=1 unitary equivalence") {
  const int d = 3;
  auto wh = werner_holevo(d);
  CHECK(is_cptp(wh).ok);
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    Mat x = rng.random_matrix(d, d);
    Mat expect = (x.trace() * Mat::Identity(d, d) - x.transpose()) / (d - 1.0);
    check_close(apply_channel(wh, x), expect, 1e-13);
  }
  Mat w = ls_wh_unitary();
  check_close(w * w.adjoint(), Mat::Identity(3, 3), 1e-15);
  check_close(w, w.transpose(), 1e-15);
  auto ls = landau_streater(TwoJ(2));
  for (int trial = 0; trial < 100; ++trial) {
    Mat x = rng.random_matrix(3, 3);
    check_close(apply_channel(ls, x), apply_channel(wh, w * x * w.adjoint()), 1e-12);
  }
}

TEST_CASE("compose and tensor") {
  auto ch = landau_streater(TwoJ(1));
  Rng rng(9);
  Mat rho = rng.random_density(2);
  check_close(apply_channel(compose(ch, ch), rho), apply_channel(ch, apply_channel(ch, rho)), 1e-13);
  auto tt = tensor(ch, ch);
  CHECK(tt.d_in == 4);
  CHECK(tt.kraus.size() == 9);
  Mat sig = rng.random_density(2);
  check_close(apply_channel(tt, kron(rho, sig)), kron(apply_channel(ch, rho), apply_channel(ch, sig)),
              1e-13);
  CHECK(is_cptp(tt).ok);
}
