#include "nchydro/hydrogen.hpp"

#include <cmath>
#include <string>

#include "nchydro/errors.hpp"
#include "nchydro/specfun.hpp"

namespace nchydro::hydrogen {

QuantumState::QuantumState(int n_, int l_, int m_) : n(n_), l(l_), m(m_) {
  if (n < 1) throw DomainError("QuantumState: n must be >= 1");
  if (l < 0 || l > n - 1)
    throw DomainError("QuantumState: l must satisfy 0 <= l <= n-1 (got l=" +
                      std::to_string(l) + ", n=" + std::to_string(n) + ")");
  if (std::abs(m) > l) throw DomainError("QuantumState: |m| must be <= l");
}

double energy0(int n) {
  if (n < 1) throw DomainError("energy0: n must be >= 1");
  return -0.5 / (static_cast<double>(n) * n);
}

RadialFunction::RadialFunction(QuantumState state) : state_(state) {
  const int n = state_.n, l = state_.l;
  // (2/n^2) sqrt((n-l-1)!/(n+l)!) via log-gamma, exact to rounding.
  norm_ = (2.0 / (static_cast<double>(n) * n)) *
          std::exp(0.5 * (std::lgamma(n - l) - std::lgamma(n + l + 1)));
}

double RadialFunction::operator()(double r) const {
  const int n = state_.n, l = state_.l, q = n - l - 1;
  const double x = 2.0 * r / n;
  return norm_ * std::pow(x, l) * std::exp(-0.5 * x) * specfun::laguerre(q, 2 * l + 1, x);
}

double RadialFunction::derivative(double r) const {
  const int n = state_.n, l = state_.l, q = n - l - 1;
  const double x = 2.0 * r / n;
  const double a = 2.0 * l + 1.0;
  const double L = specfun::laguerre(q, a, x);
  const double Lp = specfun::laguerre_derivative(q, a, x);
  const double A = std::pow(x, l);
  const double Ap = (l > 0) ? l * std::pow(x, l - 1) : 0.0;
  const double B = std::exp(-0.5 * x);
  // d/dr = (2/n) d/dx
  return norm_ * (2.0 / n) * B * (Ap * L - 0.5 * A * L + A * Lp);
}

double RadialFunction::second_derivative(double r) const {
  const int n = state_.n, l = state_.l, q = n - l - 1;
  const double x = 2.0 * r / n;
  const double a = 2.0 * l + 1.0;
  const double L = specfun::laguerre(q, a, x);
  const double Lp = specfun::laguerre_derivative(q, a, x);
  const double Lpp = specfun::laguerre_second_derivative(q, a, x);
  const double A = std::pow(x, l);
  const double Ap = (l > 0) ? l * std::pow(x, l - 1) : 0.0;
  const double App = (l > 1) ? l * (l - 1.0) * std::pow(x, l - 2) : 0.0;
  const double B = std::exp(-0.5 * x);
  const double P = App * L + 0.25 * A * L + A * Lpp - Ap * L + 2.0 * Ap * Lp - A * Lp;
  return norm_ * (4.0 / (static_cast<double>(n) * n)) * B * P;
}

RadialFunction radial(QuantumState state) { return RadialFunction(state); }

double inv_r_moment_closed(const QuantumState& state, int k) {
  const double n = state.n;
  const double l = state.l;
  switch (k) {
    case 3:
      if (state.l < 1)
        throw DivergentMoment("<r^-3> diverges at l=0: denominator factor l vanishes");
      return 2.0 / (n * n * n * l * (l + 1.0) * (2.0 * l + 1.0));
    case 4:
      if (state.l < 1)
        throw DivergentMoment("<r^-4> diverges at l=0: denominator factor l vanishes");
      return 4.0 * (3.0 * n * n - l * (l + 1.0)) /
             (std::pow(n, 5) * l * (l + 1.0) * (2.0 * l + 1.0) * (2.0 * l + 3.0) *
              (2.0 * l - 1.0));
    case 5:
      if (state.l < 2)
        throw DivergentMoment(
            "<r^-5> diverges at l<=1: denominator factors (l-1), (2l-1), l vanish");
      return 4.0 * (5.0 * n * n - 3.0 * l * (l + 1.0) + 1.0) /
             (std::pow(n, 5) * l * (l + 1.0) * (l + 2.0) * (2.0 * l + 1.0) *
              (2.0 * l + 3.0) * (l - 1.0) * (2.0 * l - 1.0));
    default:
      throw DomainError("inv_r_moment_closed: k must be 3, 4, or 5");
  }
}

specfun::QuadratureSpec radial_quadrature_spec(int n) {
  specfun::QuadratureSpec spec;
  spec.split = std::max(40.0, 4.0 * n * n + 20.0 * n);
  spec.tail_scale = std::max(8.0, static_cast<double>(n));
  // Relative-driven: inverse-power moments range over many decades, so a
  // fixed absolute target would swamp the small ones.
  spec.abs_tol = 1e-280;
  spec.rel_tol = 2e-13;
  return spec;
}

double expectation_quadrature(const QuantumState& state,
                              const std::function<double(double)>& weight,
                              const specfun::QuadratureSpec& spec) {
  const RadialFunction R(state);
  auto integrand = [&](double r) {
    const double v = R(r);
    return v * v * weight(r) * r * r;
  };
  return specfun::integrate_semiinfinite(integrand, spec).value;
}

double expectation_quadrature(const QuantumState& state,
                              const std::function<double(double)>& weight) {
  return expectation_quadrature(state, weight, radial_quadrature_spec(state.n));
}

}  // namespace nchydro::hydrogen
