#pragma once

#include <string>

#include "nchydro/constants.hpp"

namespace nchydro::bounds {

/// Measured 1s-2s transition data. Only the relative uncertainty enters
/// the bound; the absolute frequency is carried for provenance.
struct ExperimentInput {
  double frequency_hz = 2466061413187018.0;
  double rel_uncertainty = 4.5e-15;
  std::string source = "hydrogen 1s-2s two-photon spectroscopy";
};

struct BoundResult {
  double t_bound = 0.0;                    // dimensionless strength
  double hbar_sqrt_theta2_bound_m2 = 0.0;  // t_bound * a_B^2
  double alpha_bound = 0.0;                // .. / (sqrt(3/2) l_p^2)
  double bohr_radius_m = 0.0;
  double planck_length_m = 0.0;
  double rel_uncertainty = 0.0;
  double frequency_hz = 0.0;
  std::string source;
};

/// Dimensionless magnitude multiplying t in the relative 1s-2s shift:
/// (7/(3 sqrt(6))) * S_1s(0).
double relative_shift_coefficient();
double relative_shift_coefficient(double s_1s_at_zero);

/// Upper bounds from |shift| / (E2 - E1) <= rel_uncertainty.
BoundResult bound_from_uncertainty(
    const ExperimentInput& input,
    const ConstantsTable& constants = ConstantsTable::codata2018());

}  // namespace nchydro::bounds
