#include <doctest.h>

#include <cmath>
#include <random>

#include "nchydro/errors.hpp"
#include "nchydro/specfun.hpp"
#include "oracles.hpp"

using namespace nchydro;
namespace sf = nchydro::specfun;

TEST_CASE("gamma: known values") {
  CHECK(sf::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  // Gamma(3/2) = sqrt(pi)/2
  CHECK(sf::gamma(1.5) == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-14));
  CHECK(sf::gamma(6.0) == doctest::Approx(120.0).epsilon(1e-14));
  CHECK(sf::gamma(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
}

TEST_CASE("gamma: domain errors") {
  CHECK_THROWS_AS(sf::gamma(0.0), DomainError);
  CHECK_THROWS_AS(sf::gamma(-2.5), DomainError);
  CHECK_THROWS_AS(sf::gamma(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST_CASE("gamma: functional equation on a log-spaced grid") {
  for (int i = 0; i <= 60; ++i) {
    const double x = 0.1 * std::pow(300.0, i / 60.0);  // 0.1 .. 30
    const double lhs = sf::gamma(x + 1.0);
    const double rhs = x * sf::gamma(x);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
  }
}

TEST_CASE("gamma: relative accuracy against lgamma over (0, 50]") {
  for (int i = 1; i <= 200; ++i) {
    const double x = 0.25 * i;  // 0.25 .. 50
    const double reference = std::exp(std::lgamma(x));
    CHECK(std::abs(sf::gamma(x) - reference) <= 1e-13 * reference);
  }
}

TEST_CASE("laguerre: closed low-order values") {
  CHECK(sf::laguerre(0, 0.7, 3.1) == 1.0);
  CHECK(sf::laguerre(0, -0.5, 100.0) == 1.0);
  // L_1^1(x) = 2 - x
  CHECK(sf::laguerre(1, 1.0, 0.25) == doctest::Approx(1.75).epsilon(1e-15));
  CHECK(sf::laguerre(1, 1.0, 2.0) == doctest::Approx(0.0).epsilon(1e-15));
  // L_2^{1/2}(1) from the explicit expansion (a+1)(a+2)/2 - (a+2)x + x^2/2
  const double expected = test_oracles::laguerre_explicit(2, 0.5, 1.0);
  CHECK(expected == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(sf::laguerre(2, 0.5, 1.0) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("laguerre: recurrence equals explicit polynomials, n <= 4") {
  std::mt19937 rng(321);
  std::uniform_real_distribution<double> xdist(0.0, 25.0);
  std::uniform_real_distribution<double> adist(-0.9, 4.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = xdist(rng);
    const double a = adist(rng);
    for (int n = 0; n <= 4; ++n) {
      const double expected = test_oracles::laguerre_explicit(n, a, x);
      const double got = sf::laguerre(n, a, x);
      CHECK(std::abs(got - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("laguerre: derivative identities") {
  // d/dx L_n^a = -L_{n-1}^{a+1}; checked against a central difference.
  const double x = 1.7, a = 1.0, h = 1e-6;
  for (int n : {1, 2, 3, 5}) {
    const double numeric = (sf::laguerre(n, a, x + h) - sf::laguerre(n, a, x - h)) / (2 * h);
    CHECK(sf::laguerre_derivative(n, a, x) == doctest::Approx(numeric).epsilon(1e-8));
  }
  CHECK(sf::laguerre_derivative(0, 2.0, 0.3) == 0.0);
  CHECK(sf::laguerre_second_derivative(1, 2.0, 0.3) == 0.0);
}

TEST_CASE("hyp2f1_terminating: exact small-k rationals") {
  using sf::BigRational;
  CHECK(sf::hyp2f1_terminating(0) == BigRational(1));
  CHECK(sf::hyp2f1_terminating(1) == BigRational(1, 3));
  CHECK(sf::hyp2f1_terminating(2) == BigRational(7, 15));
}

TEST_CASE("hyp2f1_terminating: reduced form with positive denominator") {
  for (int k : {0, 1, 5, 17, 40}) {
    const sf::BigRational q = sf::hyp2f1_terminating(k);
    const sf::BigInt num = boost::multiprecision::numerator(q);
    const sf::BigInt den = boost::multiprecision::denominator(q);
    CHECK(den > 0);
    CHECK(boost::multiprecision::gcd(num, den) == 1);
  }
}

TEST_CASE("hyp2f1_terminating: float summation matches within its rounding bound") {
  for (int k = 0; k <= 30; ++k) {
    double max_term = 0.0;
    const double float_sum = test_oracles::hyp2f1_float_sum(k, &max_term);
    const double exact = sf::to_double(sf::hyp2f1_terminating(k));
    const double bound = (k + 2) * 4.0e-16 * std::max(1.0, max_term);
    CHECK(std::abs(float_sum - exact) <= bound);
  }
}

TEST_CASE("hyp2f1_terminating: float summation collapses at large k") {
  // The cancellation the exact-rational route exists to avoid.
  const double exact = sf::to_double(sf::hyp2f1_terminating(60));
  const double float_sum = test_oracles::hyp2f1_float_sum(60);
  CHECK(exact > 0.0);
  CHECK(exact < 1.0);
  CHECK(std::abs(float_sum - exact) > 1.0);
}

TEST_CASE("to_double: wide dynamic range") {
  using sf::BigInt;
  using sf::BigRational;
  BigInt big = 1;
  for (int i = 0; i < 40; ++i) big *= 1000;  // 10^120
  CHECK(sf::to_double(BigRational(big * 3, big * 4)) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(sf::to_double(BigRational(-1, big)) == doctest::Approx(-1e-120).epsilon(1e-12));
  CHECK(sf::to_double(BigRational(0)) == 0.0);
}
