#include <doctest.h>

#include <cmath>

#include "nchydro/errors.hpp"
#include "nchydro/nc_model.hpp"

using namespace nchydro;

TEST_CASE("NcParameters: commutative limit") {
  const auto p = nc::NcParameters::from_alpha(0.0);
  CHECK(p.t() == 0.0);
  CHECK(p.beta() == 0.0);
  CHECK(p.hbar_sqrt_theta2_m2() == 0.0);
}

TEST_CASE("NcParameters: alpha = 1 moment scale") {
  const double lp = 1.616255e-35;
  const auto p = nc::NcParameters::from_alpha(1.0, lp, 5.29177210903e-11);
  // hbar sqrt(<theta^2>) = sqrt(3/2) l_p^2
  CHECK(p.hbar_sqrt_theta2_m2() ==
        doctest::Approx(std::sqrt(1.5) * lp * lp).epsilon(1e-12));
  CHECK(p.hbar_sqrt_theta2_m2() == doctest::Approx(3.199e-70).epsilon(1e-3));
}

TEST_CASE("NcParameters: beta ties to t2 exactly") {
  const auto p = nc::NcParameters::from_t(0.37);
  CHECK(std::pow(p.beta(), 4) * 6.0 == doctest::Approx(p.t2).epsilon(1e-14));
}

TEST_CASE("NcParameters: t scales linearly in alpha") {
  const auto p1 = nc::NcParameters::from_alpha(1.0);
  const auto p2 = nc::NcParameters::from_alpha(2.0);
  CHECK(p2.t() == doctest::Approx(2.0 * p1.t()).epsilon(1e-14));
  CHECK(p2.t2 == doctest::Approx(4.0 * p1.t2).epsilon(1e-14));
}

TEST_CASE("NcParameters: from_t round-trips through alpha") {
  const auto p = nc::NcParameters::from_t(3.3e-15);
  const auto q = nc::NcParameters::from_alpha(p.alpha, p.planck_length_m, p.bohr_radius_m);
  CHECK(q.t() == doctest::Approx(3.3e-15).epsilon(1e-13));
}

TEST_CASE("moments_from_alpha: exact tensor ties to t2") {
  const auto both = nc::moments_from_alpha(2.0, 1.616255e-35, 5.29177210903e-11);
  CHECK(both.moments.trace() == both.params.t2);
  for (int i = 0; i < 3; ++i) {
    CHECK(both.moments.first[i] == 0.0);
    for (int j = 0; j < 3; ++j) {
      const double expected = (i == j) ? both.params.t2 / 3.0 : 0.0;
      CHECK(both.moments.second[i][j] == expected);
    }
  }
  // structural agreement with the oscillator-unit oracle (trace 3/2 there)
  const auto oracle = nc::moment_tensor_quadrature(6);
  CHECK(oracle.second[0][0] / oracle.trace() ==
        doctest::Approx(both.moments.second[0][0] / both.moments.trace()).epsilon(1e-12));
}

TEST_CASE("NcParameters: domain errors") {
  CHECK_THROWS_AS(nc::NcParameters::from_alpha(-1.0), DomainError);
  CHECK_THROWS_AS(nc::NcParameters::from_t(-0.1), DomainError);
}

TEST_CASE("moment_tensor_quadrature: isotropic second moment, zero first moment") {
  const auto m = nc::moment_tensor_quadrature(8);
  const double third = m.trace() / 3.0;

  // <theta_i> = 0 (odd Gaussian moment)
  for (int i = 0; i < 3; ++i) CHECK(std::abs(m.first[i]) <= 1e-12);

  // symmetry and isotropy
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(m.second[i][j] == doctest::Approx(m.second[j][i]).epsilon(1e-12));
      const double expected = (i == j) ? third : 0.0;
      CHECK(std::abs(m.second[i][j] - expected) <= 1e-3 * third);
    }

  // exact trace 3/2 in oscillator units; quadrature is exact for degree-2
  CHECK(m.trace() == doctest::Approx(1.5).epsilon(1e-12));
  // <theta^2> / (3 <theta_3 theta_3>) -> 1
  CHECK(m.trace() / (3.0 * m.second[2][2]) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("moment_tensor_monte_carlo: seeded reproducibility and convergence") {
  const auto a = nc::moment_tensor_monte_carlo(20000, 777);
  const auto b = nc::moment_tensor_monte_carlo(20000, 777);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(a.second[i][j] == b.second[i][j]);

  // trace estimates <theta^2> = 3/2; var(theta^2) is O(1), so 2e4 samples
  // put the sampling error near 1.5/sqrt(2e4) ~ 1e-2.
  CHECK(a.trace() == doctest::Approx(1.5).epsilon(5e-2));
  CHECK(std::abs(a.first[0]) + std::abs(a.first[1]) + std::abs(a.first[2]) <= 0.1);

  const auto c = nc::moment_tensor_monte_carlo(20000, 778);
  CHECK(a.second[0][0] != c.second[0][0]);  // seed actually matters
}

TEST_CASE("moment_tensor_monte_carlo: sample floor enforced") {
  CHECK_THROWS_AS(nc::moment_tensor_monte_carlo(100, 1), DomainError);
}
