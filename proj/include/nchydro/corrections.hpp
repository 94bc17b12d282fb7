#pragma once

#include "nchydro/hydrogen.hpp"
#include "nchydro/nc_model.hpp"

namespace nchydro::corrections {

enum class Method { closed_form, assembled, effective_hamiltonian };

/// First-order level shift per unit t^2 (hartree), decomposed into the
/// three operator pieces it comes from. The pieces always sum to `value`.
struct CorrectionResult {
  hydrogen::QuantumState state;
  Method method;
  double value;          // hartree per unit t^2
  double spin_orbit_sq;  // -(1/8) l(l+1) <r^-5>
  double kinetic_cross;  // (1/24) (-2/n^2 <r^-3> + 4 <r^-4>)
  double r5;             // (5/24) <r^-5>

  double sum_terms() const { return spin_orbit_sq + kinetic_cross + r5; }
  double value_at(double t2) const { return value * t2; }
};

/// Dimensionless bracket B(n, l) with value = -B/n^5 per unit t^2.
/// Requires l >= 2; throws DivergentCorrection below that.
double bracket(int n, int l);

CorrectionResult delta_e1_closed(const hydrogen::QuantumState& state);

/// Independent assembly from the closed <r^-k> moments and the isotropic
/// angular average <(theta.L)^2> -> (t^2/3) l(l+1).
CorrectionResult delta_e1_assembled(const hydrogen::QuantumState& state);

/// Expectation of the effective-Hamiltonian shift in psi_{n,l,m} by
/// quadrature, with the L_i^2 content taken per m (the m dependence cancels
/// against the isotropic moment tensor).
CorrectionResult delta_e1_effective(const hydrogen::QuantumState& state);

/// Fixed-hydrogen-state, single-oscillator-excitation channel of the
/// second-order shift from the linear term: -(t^2/3)(m <r^-3>/2)^2 / (2 w),
/// hartree with omega in hartree/hbar. A lower-bound channel only, not the
/// full second-order sum; identically zero for s states.
double second_order_oscillator_channel(const hydrogen::QuantumState& state, double omega,
                                       const nc::NcParameters& params);

}  // namespace nchydro::corrections
