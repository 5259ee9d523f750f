#include "test_util.hpp"

#include "ls/spectral.hpp"

using namespace ls;
using namespace ls::test;

TEST_CASE("closed-form map spectrum: j=1/2 and determinant") {
  auto ms = ls_spectrum_closed(TwoJ(1));
  REQUIRE(ms.levels.size() == 2);
  CHECK(ms.levels[0].lambda == doctest::Approx(1.0));
  CHECK(ms.levels[0].multiplicity == 1);
  CHECK(ms.levels[1].lambda == doctest::Approx(-1.0 / 3.0));
  CHECK(ms.levels[1].multiplicity == 3);
  CHECK(determinant(landau_streater(TwoJ(1))) ==
        doctest::Approx(-1.0 / 27.0).epsilon(1e-12));
}

TEST_CASE("numeric map spectrum matches the closed form, 2j in 1..6") {
  for (int tj = 1; tj <= 6; ++tj) {
    TwoJ j(tj);
    auto closed = ls_spectrum_closed(j).flatten();
    auto numeric = map_spectrum_numeric(landau_streater(j));
    REQUIRE(closed.values.size() == numeric.values.size());
    CHECK(Spectrum::multiset_distance(closed, numeric) <= 1e-9);
  }
}

TEST_CASE("closed-form determinant product oracle") {
  // Oracle: determinant of the superoperator matrix itself.
  for (int tj : {1, 2, 3}) {
    auto ch = landau_streater(TwoJ(tj));
    const cplx det = superoperator(ch).matrix.determinant();
    CHECK(std::abs(det.imag()) <= 1e-10);
    CHECK(det.real() == doctest::Approx(determinant(ch)).epsilon(1e-8));
  }
}

TEST_CASE("eigenoperators T_L0 with residuals, plus rotated copies") {
  for (int tj : {1, 2, 3, 4, 5}) {
    auto res = verify_eigenoperators(TwoJ(tj), 17);
    REQUIRE(static_cast<int>(res.size()) == tj + 1);
    for (const auto& r : res) {
      CHECK(r.residual <= 1e-10);
      CHECK(r.rotated_residual <= 1e-10);
    }
  }
}

TEST_CASE("output spectrum of |j,m><j,m|: closed form cases") {
  // j=1/2, m=1/2: depolarizing output {2/3, 1/3}.
  auto s = output_spectrum_jm(TwoJ(1), 1);
  CHECK(s.values[0] == doctest::Approx(2.0 / 3.0));
  CHECK(s.values[1] == doctest::Approx(1.0 / 3.0));

  // j=3/2, m=1/2: {8/15, 2/5, 1/15, 0}.
  auto t = output_spectrum_jm(TwoJ(3), 1);
  REQUIRE(t.values.size() == 4);
  CHECK(t.values[0] == doctest::Approx(8.0 / 15.0));
  CHECK(t.values[1] == doctest::Approx(2.0 / 5.0));
  CHECK(t.values[2] == doctest::Approx(1.0 / 15.0));
  CHECK(t.values[3] == doctest::Approx(0.0));
  CHECK(t.sum() == doctest::Approx(1.0));

  // m = j gives {j/(j+1), 1/(j+1), 0, ...} (descending order flips at j=1/2).
  for (int tj : {1, 2, 3, 4, 6}) {
    const double j = 0.5 * tj;
    const double hi = std::max(j, 1.0) / (j + 1.0);
    const double lo = std::min(j, 1.0) / (j + 1.0);
    auto u = output_spectrum_jm(TwoJ(tj), tj);
    CHECK(u.values[0] == doctest::Approx(hi));
    CHECK(u.values[1] == doctest::Approx(lo));
    for (size_t k = 2; k < u.values.size(); ++k) {
      CHECK(std::abs(u.values[k]) <= 1e-14);
    }
  }
}

TEST_CASE("output spectrum closed form matches the numeric spectrum") {
  for (int tj = 1; tj <= 6; ++tj) {
    TwoJ j(tj);
    auto ch = landau_streater(j);
    for (int tm = -tj; tm <= tj; tm += 2) {
      Vec e = basis_vector(j.dim(), j.index_of(tm));
      auto numeric = eig_hermitian(apply_channel(ch, projector(e))).spectrum;
      auto closed = output_spectrum_jm(j, tm);
      CHECK(Spectrum::multiset_distance(closed, numeric) <= 1e-11);
      CHECK(closed.is_density_spectrum());
    }
  }
}

TEST_CASE("qutrit pairwise-mean rule for diagonal inputs") {
  auto ch = landau_streater(TwoJ(2));
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    double x1 = rng.uniform(), x2 = rng.uniform(), x3 = rng.uniform();
    const double n = x1 + x2 + x3;
    x1 /= n;
    x2 /= n;
    x3 /= n;
    Mat rho = Mat::Zero(3, 3);
    rho(0, 0) = x1;
    rho(1, 1) = x2;
    rho(2, 2) = x3;
    auto numeric = eig_hermitian(apply_channel(ch, rho)).spectrum;
    auto closed = output_spectrum_qutrit(x1, x2, x3);
    CHECK(Spectrum::multiset_distance(closed, numeric) <= 1e-11);
  }
}

TEST_CASE("su2_rotation is unitary and rotates J_z into n.J") {
  Rng rng(12);
  for (int tj : {1, 2, 3}) {
    TwoJ j(tj);
    Eigen::Vector3d axis = rng.random_unit3();
    const double theta = 2.0 * rng.uniform();
    Mat u = su2_rotation(j, axis, theta);
    check_close(u * u.adjoint(), Mat::Identity(j.dim(), j.dim()), 1e-12);
    // theta = 0 gives the identity.
    check_close(su2_rotation(j, axis, 0.0), Mat::Identity(j.dim(), j.dim()),
                1e-14);
    // Rotation about z by theta multiplies |j,m> by exp(-i m theta).
    Mat uz = su2_rotation(j, Eigen::Vector3d(0, 0, 1), theta);
    for (int tm = -tj; tm <= tj; tm += 2) {
      const cplx phase = std::exp(cplx(0, -0.5 * tm * theta));
      Vec e = basis_vector(j.dim(), j.index_of(tm));
      CHECK((uz * e - phase * e).norm() <= 1e-12);
    }
  }
}

TEST_CASE("SU(2) covariance residual vanishes") {
  Rng rng(13);
  for (int tj = 1; tj <= 5; ++tj) {
    TwoJ j(tj);
    for (int trial = 0; trial < 10; ++trial) {
      Mat x = rng.random_hermitian(j.dim());
      const double r = check_su2_covariance(j, rng.random_unit3(),
                                            6.28 * rng.uniform(), x);
      CHECK(r <= 1e-10);
    }
  }
}

TEST_CASE("u3_partner: j=1 global unitary covariance") {
  Rng rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    Mat u = rng.haar_unitary(3);
    auto [v, residual] = u3_partner(u, 10, 99 + trial);
    check_close(v * v.adjoint(), Mat::Identity(3, 3), 1e-12);
    CHECK(residual <= 1e-10);
  }
}

TEST_CASE("global covariance counterexample appears only for j >= 3/2") {
  for (int tj : {1, 2}) {
    auto res = global_covariance_counterexample(TwoJ(tj));
    CHECK(res.equal);
  }
  for (int tj : {3, 4, 5}) {
    auto res = global_covariance_counterexample(TwoJ(tj));
    CHECK_FALSE(res.equal);
    CHECK(Spectrum::multiset_distance(res.spec_jj, res.spec_jjm1) >= 0.05);
  }
}
