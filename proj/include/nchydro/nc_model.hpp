#pragma once

#include <array>
#include <cstdint>

#include "nchydro/constants.hpp"

namespace nchydro::nc {

/// Noncommutativity strength model. The auxiliary-oscillator scale enters
/// only through the Planck length (the oscillator frequency and mass never
/// appear separately), so (alpha, l_p) fixes everything:
///
///   hbar*sqrt(<theta^2>) = sqrt(3/2) * alpha * l_p^2          [SI m^2]
///   t  = hbar*sqrt(<theta^2>) / a_B^2                         [dimensionless]
///   beta = (t^2/6)^(1/4)                                      [dimensionless]
struct NcParameters {
  double alpha = 0.0;
  double planck_length_m = 0.0;
  double bohr_radius_m = 0.0;
  double t2 = 0.0;  // t^2

  static NcParameters from_alpha(double alpha, double planck_length_m,
                                 double bohr_radius_m);
  static NcParameters from_alpha(double alpha,
                                 const ConstantsTable& c = ConstantsTable::codata2018());
  static NcParameters from_t(double t,
                             const ConstantsTable& c = ConstantsTable::codata2018());

  double t() const;
  double beta() const;                  // recomputed from t2, never stored
  double hbar_sqrt_theta2_m2() const;   // t * a_B^2, SI
};

/// Ground-state moments of theta_i = eps_ijk a_j b_k in oscillator units
/// (alpha = l_p = hbar = 1): exact values are <theta_i> = 0 and
/// <theta_i theta_j> = (1/2) delta_ij, i.e. <theta^2> = 3/2.
struct ThetaMoments {
  std::array<double, 3> first{};                 // <theta_i>
  std::array<std::array<double, 3>, 3> second{}; // <theta_i theta_j>

  double trace() const;
};

/// Parameters plus the exact ground-state moment tensor they imply, with
/// the tensor in dimensionless t-units (hbar theta / a_B^2), so
/// moments.trace() == params.t2 identically.
struct ParametersWithMoments {
  NcParameters params;
  ThetaMoments moments;
};
ParametersWithMoments moments_from_alpha(double alpha, double planck_length_m,
                                         double bohr_radius_m);

/// Deterministic Gaussian-quadrature evaluation of the moments (tensor
/// Gauss-Hermite over the two oscillator ground states), oscillator units.
ThetaMoments moment_tensor_quadrature(int nodes_per_dim = 8);

/// Monte Carlo cross-check; requires samples >= 10^4. Sampling is a
/// hand-rolled Box-Muller on a seeded mt19937_64 so runs are reproducible
/// across library implementations.
ThetaMoments moment_tensor_monte_carlo(std::size_t samples, std::uint64_t seed);

}  // namespace nchydro::nc
