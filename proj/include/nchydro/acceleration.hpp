#pragma once

#include <span>

namespace nchydro::specfun {

struct AccelerationResult {
  double value = 0.0;        // Euler-transform estimate
  double cross_check = 0.0;  // iterated-Aitken estimate
  double error = 0.0;        // internal consistency estimate
  double raw_sum = 0.0;      // untransformed partial sum
  bool alternating = false;  // a strictly alternating tail was found
  bool consistent = false;   // the two transforms agree within `error`
  int terms_used = 0;
};

/// Limit estimate for sum(terms) where the terms eventually alternate in
/// sign with decaying magnitude. The Euler transform of the alternating
/// tail is the headline value; iterated Aitken extrapolation is the
/// cross-check, and the two must agree within the reported error or the
/// result is flagged inconsistent.
///
/// Throws DomainError when no alternating tail exists or the tail grows.
AccelerationResult accelerate_alternating(std::span<const double> terms);

/// Limit estimate for terms of the form (-1)^k u(k) + v(k) with u(k) an
/// algebraically decaying amplitude and v(k) a small smooth drift (the
/// shape of the level-shift series: u ~ k^{-1/2}, v ~ k^{-2}). Pairwise
/// averaging of the partial sums suppresses the alternating component by
/// ~1/(4N) per round, after which the remainder is an integer-power 1/N
/// tail that iterated Richardson extrapolation removes. A plain Euler
/// transform mis-sums the v part by its un-accelerated tail, which is why
/// this exists as a separate estimator.
///
/// value: 4 averaging rounds; cross_check: 3 rounds.
AccelerationResult accelerate_alternating_drift(std::span<const double> terms);

}  // namespace nchydro::specfun
