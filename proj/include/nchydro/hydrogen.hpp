#pragma once

#include <functional>

#include "nchydro/quadrature.hpp"

namespace nchydro::hydrogen {

/// Bound-state quantum numbers with 1 <= n, 0 <= l <= n-1, |m| <= l.
struct QuantumState {
  int n;
  int l;
  int m;

  QuantumState(int n_, int l_, int m_ = 0);  // validates, throws DomainError
};

/// Unperturbed level energy -1/(2 n^2) hartree.
double energy0(int n);

/// Radial function R_{n,l}(r) in Bohr-radius units, normalized so that
/// integral of R^2 r^2 dr over [0, inf) is 1. Immutable and cheap to copy.
class RadialFunction {
 public:
  explicit RadialFunction(QuantumState state);

  const QuantumState& state() const { return state_; }
  double operator()(double r) const;
  double derivative(double r) const;
  double second_derivative(double r) const;

 private:
  QuantumState state_;
  double norm_;
};

RadialFunction radial(QuantumState state);

/// Closed-form <r^-k> for k in {3,4,5} in Bohr units. The expectation
/// exists only for l >= 1 (k = 3, 4) and l >= 2 (k = 5); below that a
/// DivergentMoment is thrown naming the vanishing denominator factors.
double inv_r_moment_closed(const QuantumState& state, int k);

/// Quadrature route for integral of R^2 w(r) r^2 dr: the independent
/// oracle for every closed-form radial expectation.
double expectation_quadrature(const QuantumState& state,
                              const std::function<double(double)>& weight);
double expectation_quadrature(const QuantumState& state,
                              const std::function<double(double)>& weight,
                              const specfun::QuadratureSpec& spec);

/// Quadrature spec sized for R_{n,l}^2-weighted integrands (split past the
/// classical turning region, tail scale matching the e^{-2r/n} decay).
specfun::QuadratureSpec radial_quadrature_spec(int n);

}  // namespace nchydro::hydrogen
