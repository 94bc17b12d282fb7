#include <doctest.h>

#include <cmath>

#include "nchydro/errors.hpp"
#include "nchydro/quadrature.hpp"
#include "oracles.hpp"

using namespace nchydro;
namespace sf = nchydro::specfun;

TEST_CASE("integrate_semiinfinite: named examples") {
  sf::QuadratureSpec spec;
  auto r1 = sf::integrate_semiinfinite([](double r) { return std::exp(-r); }, spec);
  CHECK(r1.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r1.converged);

  auto r2 = sf::integrate_semiinfinite(
      [](double r) { return r * r * std::exp(-0.5 * r * r); }, spec);
  CHECK(r2.value == doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-12));

  auto r3 = sf::integrate_semiinfinite([](double r) { return r * std::exp(-2.0 * r); }, spec);
  CHECK(r3.value == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("integrate_semiinfinite: twenty analytic gaussian-exponential moments") {
  sf::QuadratureSpec spec;
  spec.rel_tol = 1e-12;
  spec.abs_tol = 1e-14;
  int cases = 0;
  for (double a : {0.5, 1.0, 2.0}) {
    for (double b : {0.0, 1.0, 3.0}) {
      for (int m : {0, 1, 2, 4}) {
        if (cases >= 20) break;
        ++cases;
        const double expected = test_oracles::gaussian_exp_moment(m, a, b);
        const auto got = sf::integrate_semiinfinite(
            [=](double r) { return std::pow(r, m) * std::exp(-a * r * r - b * r); }, spec);
        CHECK(std::abs(got.value - expected) <=
              std::max(spec.abs_tol, 20.0 * spec.rel_tol * std::abs(expected)));
      }
    }
  }
  CHECK(cases == 20);
}

TEST_CASE("integrate_semiinfinite: exponential-only moments against m!/b^(m+1)") {
  sf::QuadratureSpec spec;
  for (int m : {0, 1, 3}) {
    const double expected = test_oracles::exponential_moment(m, 1.5);
    const auto got = sf::integrate_semiinfinite(
        [=](double r) { return std::pow(r, m) * std::exp(-1.5 * r); }, spec);
    CHECK(got.value == doctest::Approx(expected).epsilon(1e-11));
  }
}

TEST_CASE("integrate_semiinfinite: non-convergence carries the best estimate") {
  // 1/(1+r) diverges logarithmically; the tail cannot settle.
  sf::QuadratureSpec spec;
  spec.max_depth = 8;
  bool threw = false;
  try {
    sf::integrate_semiinfinite([](double r) { return 1.0 / (1.0 + r); }, spec);
  } catch (const ConvergenceError& e) {
    threw = true;
    CHECK(e.best_estimate() > 1.0);
    CHECK(e.error_estimate() > 0.0);
  }
  CHECK(threw);

  const auto flagged =
      sf::try_integrate_semiinfinite([](double r) { return 1.0 / (1.0 + r); }, spec);
  CHECK_FALSE(flagged.converged);
}

TEST_CASE("integrate_semiinfinite: non-finite integrand is rejected") {
  sf::QuadratureSpec spec;
  CHECK_THROWS_AS(sf::integrate_semiinfinite([](double r) { return 1.0 / (r - r); }, spec),
                  DomainError);
}

TEST_CASE("QuadratureSpec validation") {
  sf::QuadratureSpec spec;
  spec.nodes = 1;
  CHECK_THROWS_AS(spec.validate(), DomainError);
  spec = {};
  spec.split = 0.0;
  CHECK_THROWS_AS(spec.validate(), DomainError);
  spec = {};
  spec.abs_tol = 0.0;
  CHECK_THROWS_AS(spec.validate(), DomainError);
  spec = {};
  CHECK_NOTHROW(spec.validate());
}

TEST_CASE("gauss_legendre_rule: nodes symmetric, weights sum to 2") {
  for (int order : {2, 5, 21, 40}) {
    const auto& rule = sf::gauss_legendre_rule(order);
    double wsum = 0.0;
    for (int i = 0; i < order; ++i) {
      wsum += rule.weights[i];
      CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[order - 1 - i]).epsilon(1e-14));
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  }
}
