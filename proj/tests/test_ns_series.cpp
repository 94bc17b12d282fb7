#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "nchydro/errors.hpp"
#include "nchydro/ns_series.hpp"
#include "nchydro/quadrature.hpp"
#include "nchydro/serialize.hpp"
#include "nchydro/specfun.hpp"

using namespace nchydro;
namespace ns = nchydro::ns_series;

TEST_CASE("OscillatorBasis: orthonormality under the rho^2 measure, k <= 30") {
  specfun::QuadratureSpec spec;
  spec.split = std::sqrt(4.0 * 30 + 3.0) + 10.0;
  spec.abs_tol = 1e-12;
  spec.rel_tol = 1e-11;
  for (int j = 0; j <= 30; ++j) {
    for (int k = j; k <= 30; ++k) {
      const auto overlap = specfun::integrate_semiinfinite(
          [&](double rho) {
            return rho * rho * ns::OscillatorBasis::phi(j, rho) *
                   ns::OscillatorBasis::phi(k, rho);
          },
          spec);
      const double expected = (j == k) ? 1.0 : 0.0;
      CHECK(std::abs(overlap.value - expected) <= 1e-10);
    }
  }
}

TEST_CASE("OscillatorBasis: eigenvalues 4k+3") {
  CHECK(ns::OscillatorBasis::eigenvalue(0) == 3.0);
  CHECK(ns::OscillatorBasis::eigenvalue(7) == 31.0);
}

TEST_CASE("coeff_C and coeff_I at beta = 0: analytic values") {
  // C_0 = sqrt(2/Gamma(3/2)) * sqrt(pi/2), I_0 = sqrt(2/Gamma(3/2))
  const double g32 = std::sqrt(M_PI) / 2.0;
  const double c0 = std::sqrt(2.0 / g32) * std::sqrt(M_PI / 2.0);
  const double i0 = std::sqrt(2.0 / g32);
  CHECK(ns::coeff_C(0, 0.0, 1) == doctest::Approx(c0).epsilon(1e-11));
  CHECK(c0 == doctest::Approx(1.88279).epsilon(1e-5));
  CHECK(ns::coeff_I(0, 0.0, 1) == doctest::Approx(i0).epsilon(1e-11));
  CHECK(i0 == doctest::Approx(1.50225).epsilon(1e-5));

  // C_k(0) = (-1)^k 2 sqrt(Gamma(k+3/2)/k!) via the Laguerre Laplace
  // transform; spot-check k = 1 and k = 6.
  for (int k : {1, 6}) {
    const double expected = (k % 2 ? -2.0 : 2.0) *
                            std::exp(0.5 * (std::lgamma(k + 1.5) - std::lgamma(k + 1.0)));
    CHECK(ns::coeff_C(k, 0.0, 1) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("coeff_I: sign alternates in k at beta = 0") {
  for (int k = 0; k < 10; ++k) {
    const double a = ns::coeff_I(k, 0.0, 1);
    const double b = ns::coeff_I(k + 1, 0.0, 1);
    CHECK(a * b < 0.0);
  }
}

TEST_CASE("coeff_I: suppressed at large beta") {
  // I_k(beta) ~ 1/beta^2 for large beta
  for (int k : {0, 3}) {
    const double at40 = std::abs(ns::coeff_I(k, 40.0, 1));
    const double at80 = std::abs(ns::coeff_I(k, 80.0, 1));
    CHECK(at40 < 5e-3);
    CHECK(at80 < 0.5 * at40);
  }
}

TEST_CASE("coeff_C: Parseval against the norm integral at beta = 1") {
  // sum C_k^2 -> integral rho^2 e^{-2 rho} = 1/(4 beta^3) = 1/4
  double sum = 0.0;
  for (int k = 0; k <= 200; ++k) {
    const double c = ns::coeff_C(k, 1.0, 1);
    sum += c * c;
  }
  CHECK(std::abs(sum - 0.25) <= 1e-4 * 0.25);
}

TEST_CASE("radial_factor: beta = 0 gives the constant n") {
  for (int n : {1, 2, 5}) {
    CHECK(ns::radial_factor(n, 0.0, 0.7) == doctest::Approx(n).epsilon(1e-15));
    CHECK(ns::radial_factor(n, 0.0, 13.0) == doctest::Approx(n).epsilon(1e-15));
  }
}

TEST_CASE("s_ns: S_1s(0) reproduces the series limit") {
  const auto report = ns::s_ns(0.0, 1, 200);
  CHECK(std::abs(report.value - 1.72006) <= 1e-4);
  CHECK(report.alternating_tail);
  CHECK(report.consistent);
  CHECK(std::abs(report.value - report.cross_check) <= report.error);
  CHECK(static_cast<int>(report.terms.size()) == 201);
  // raw truncation is visibly off: acceleration is doing real work
  CHECK(std::abs(report.raw_partial_sum - report.value) > 1e-2);
}

TEST_CASE("s_ns: n^2 scaling at beta = 0") {
  const double base = ns::s_ns(0.0, 1, 160).value;
  for (int n : {2, 3}) {
    const double scaled = ns::s_ns(0.0, n, 160).value;
    CHECK(scaled / (n * n) == doctest::Approx(base).epsilon(1e-6));
  }
}

TEST_CASE("s_ns: positivity over the beta grid") {
  for (int n = 1; n <= 3; ++n)
    for (double beta : {0.0, 0.25, 0.5, 1.0})
      CHECK(ns::s_ns(beta, n, 120).value > 0.0);
}

TEST_CASE("s_ns: small-beta continuity toward the beta = 0 limit") {
  const double s0 = ns::s_ns(0.0, 1, 160).value;
  const double d1 = ns::s_ns(0.05, 1, 160).value - s0;
  const double d2 = ns::s_ns(0.025, 1, 160).value - s0;
  CHECK(std::abs(d1) < 0.2);
  // leading correction is O(beta): halving beta roughly halves the defect
  CHECK(d1 / d2 == doctest::Approx(2.0).epsilon(0.35));
}

TEST_CASE("s_ns: truncation self-consistency at beta = 0.2") {
  // doubling K must land within the two error estimates
  const auto a = ns::s_ns(0.2, 1, 200);
  const auto b = ns::s_ns(0.2, 1, 400);
  CHECK(std::abs(a.value - b.value) <= a.error + b.error);
  CHECK(b.error <= a.error * 1.5);  // more terms cannot make it much worse
}

TEST_CASE("s_ns: preconditions") {
  CHECK_THROWS_AS(ns::s_ns(0.0, 1, 5), DomainError);
  CHECK_THROWS_AS(ns::s_ns(-0.1, 1, 50), DomainError);
  CHECK_THROWS_AS(ns::s_ns(0.1, 0, 50), DomainError);
}

TEST_CASE("s_1s0_closed: k = 0 term is 8 sqrt(2) (1 - sqrt(pi/6))") {
  const auto report = ns::s_1s0_closed(20);
  const double expected = 8.0 * std::sqrt(2.0) * (1.0 - std::sqrt(M_PI / 6.0));
  CHECK(report.terms[0].contribution == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(3.127).epsilon(1e-3));
}

TEST_CASE("s_1s0_closed: reproduces the limit and matches the quadrature route") {
  const auto closed = ns::s_1s0_closed(200);
  CHECK(std::abs(closed.value - 1.72006) <= 1e-4);
  const auto series = ns::s_ns(0.0, 1, 200);
  CHECK(std::abs(closed.value - series.value) <= closed.error + series.error);
}

TEST_CASE("SeriesReport: JSON and CSV serialization") {
  const auto report = ns::s_ns(0.0, 1, 40);
  const std::string json = nchydro::series_report_json(report);
  CHECK(json.find("\"schema_version\":1") != std::string::npos);
  CHECK(json.find("\"K\":40") != std::string::npos);
  CHECK(json.find("\"terms\":[{\"k\":0,") != std::string::npos);

  const std::string csv = nchydro::series_report_csv(report);
  CHECK(csv.rfind("k,c_k,i_k,term\n", 0) == 0);
  // header plus one row per term
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 41);
}

TEST_CASE("NcParameters: JSON serialization") {
  const auto p = nchydro::nc::NcParameters::from_t(0.5);
  const std::string json = nchydro::nc_parameters_json(p);
  CHECK(json.find("\"t2\":0.25") != std::string::npos);
  CHECK(json.find("\"beta\":") != std::string::npos);
  CHECK(json.find("\"alpha\":") != std::string::npos);
}

TEST_CASE("delta_e_ns: scale and scaling laws") {
  CHECK(ns::delta_e_ns(1, nc::NcParameters::from_t(0.0)) == 0.0);

  const auto unit = nc::NcParameters::from_t(1.0);
  const double d1 = ns::delta_e_ns(1, unit);
  CHECK(d1 == doctest::Approx(ns::s_1s0_reference() / std::sqrt(6.0)).epsilon(1e-14));
  CHECK(d1 == doctest::Approx(0.70221).epsilon(2e-5));
  CHECK(d1 > 0.0);

  // 1/n^3 scaling
  CHECK(d1 / ns::delta_e_ns(2, unit) == doctest::Approx(8.0).epsilon(1e-14));
}
