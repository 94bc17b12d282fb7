#pragma once

#include <vector>

#include "nchydro/nc_model.hpp"
#include "nchydro/quadrature.hpp"

namespace nchydro::ns_series {

/// s-wave eigenbasis of rho^2 + p_rho^2:
///   phi_k(rho) = sqrt(2 k! / Gamma(k+3/2)) e^{-rho^2/2} L_k^{1/2}(rho^2),
///   lambda_k   = 4k + 3,
/// orthonormal under the rho^2 measure on [0, inf).
struct OscillatorBasis {
  int max_index = 200;

  /// Stable for large k: the Gaussian factor is carried through the
  /// Laguerre recurrence so no overflow/underflow product ever forms.
  static double phi(int k, double rho);
  static double eigenvalue(int k) { return 4.0 * k + 3.0; }
};

struct SeriesTerm {
  int k;
  double c;             // C_k  (closed route: the exact 2F1 value)
  double i;             // I_k  (closed route: sqrt(pi/(8k+6)))
  double contribution;  // term added to the series
};

struct SeriesReport {
  double value = 0.0;          // accelerated estimate (Euler)
  double cross_check = 0.0;    // iterated-Aitken estimate
  double raw_partial_sum = 0.0;
  double error = 0.0;          // |value - cross_check| <= error always holds
  int truncation = 0;          // K
  bool alternating_tail = false;
  bool consistent = false;     // acceleration diagnostics agreed
  std::vector<SeriesTerm> terms;
};

/// Dimensionless ns radial factor g_n(rho) = e^{-beta rho/n} L^1_{n-1}(2 beta rho/n);
/// constant n at beta = 0.
double radial_factor(int n, double beta, double rho);

/// Expansion coefficient of g_n over phi_k under the rho^2 measure.
double coeff_C(int k, double beta, int n);
/// Same integrand with weight rho instead of rho^2.
double coeff_I(int k, double beta, int n);

/// S_ns(beta) = 4 sum_k (C_k I_k - C_k^2/sqrt(lambda_k)), Euler-accelerated
/// with Aitken cross-check. A non-alternating tail flags the report instead
/// of throwing.
SeriesReport s_ns(double beta, int n, int K = 200);

/// The beta = 0 1s series in closed form:
///   16 sqrt(2/pi) sum_k Gamma(k+3/2)/k! (2F1(-k,1/2;3/2;2) - sqrt(pi/(8k+6))),
/// with the 2F1 factor from exact rational arithmetic.
SeriesReport s_1s0_closed(int K = 200);

/// Cached headline value of s_1s0_closed(200).
double s_1s0_reference();

/// Level shift of the ns state, hartree: (t/sqrt(6)) * S_1s(0) / n^3.
double delta_e_ns(int n, const nc::NcParameters& params);

}  // namespace nchydro::ns_series
