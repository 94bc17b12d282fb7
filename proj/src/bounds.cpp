#include "nchydro/bounds.hpp"

#include <cmath>

#include "nchydro/errors.hpp"
#include "nchydro/ns_series.hpp"

namespace nchydro::bounds {

double relative_shift_coefficient(double s_1s_at_zero) {
  return 7.0 / (3.0 * std::sqrt(6.0)) * s_1s_at_zero;
}

double relative_shift_coefficient() {
  return relative_shift_coefficient(ns_series::s_1s0_reference());
}

BoundResult bound_from_uncertainty(const ExperimentInput& input,
                                   const ConstantsTable& constants) {
  if (!(input.rel_uncertainty > 0.0))
    throw DomainError("bound_from_uncertainty: rel_uncertainty must be > 0");

  BoundResult out;
  out.rel_uncertainty = input.rel_uncertainty;
  out.frequency_hz = input.frequency_hz;
  out.source = input.source;
  out.bohr_radius_m = constants.bohr_radius_m;
  out.planck_length_m = constants.planck_length_m;

  out.t_bound = input.rel_uncertainty / relative_shift_coefficient();
  const double a_b2 = constants.bohr_radius_m * constants.bohr_radius_m;
  out.hbar_sqrt_theta2_bound_m2 = out.t_bound * a_b2;
  const double lp2 = constants.planck_length_m * constants.planck_length_m;
  out.alpha_bound = out.hbar_sqrt_theta2_bound_m2 / (std::sqrt(1.5) * lp2);
  return out;
}

}  // namespace nchydro::bounds
