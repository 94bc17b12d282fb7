#include "nchydro/acceleration.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nchydro/errors.hpp"

namespace nchydro::specfun {

namespace {

// Euler transform via repeated pairwise averaging of the partial sums.
// Returns the fully reduced value and the change at the last level.
std::pair<double, double> euler_transform(const std::vector<double>& partial) {
  std::vector<double> s = partial;
  double previous = s.back();
  while (s.size() > 1) {
    previous = s[0];
    for (size_t i = 0; i + 1 < s.size(); ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
    s.pop_back();
  }
  return {s[0], std::abs(s[0] - previous)};
}

// Iterated Aitken delta-squared on the partial sums.
std::pair<double, double> aitken_iterated(const std::vector<double>& partial) {
  std::vector<double> x = partial;
  double last = x.back();
  double change = 0.0;
  while (x.size() >= 3) {
    std::vector<double> y(x.size() - 2);
    for (size_t i = 0; i + 2 < x.size(); ++i) {
      const double d1 = x[i + 1] - x[i];
      const double d2 = x[i + 2] - 2.0 * x[i + 1] + x[i];
      const double scale = std::abs(x[i]) + std::abs(x[i + 1]) + std::abs(x[i + 2]);
      if (std::abs(d2) < 1e-15 * std::max(scale, 1e-300)) {
        // Flat second difference: the sequence has converged here.
        return {x[i + 2], change};
      }
      y[i] = x[i] - d1 * d1 / d2;
    }
    change = std::abs(y.back() - last);
    last = y.back();
    x = std::move(y);
  }
  return {last, change};
}

}  // namespace

namespace {

// One averaged-Richardson pass: `rounds` pairwise averagings of the partial
// sums, then iterated Richardson (integer powers of 1/N) over samples at
// N/8, N/4, N/2, N. Returns {value, internal spread}.
struct AveragedRichardson {
  double value;
  double spread;    // change at the last Richardson level
  double tail_step; // residual step size at the end of the averaged sums
};

AveragedRichardson averaged_richardson(const std::vector<double>& partial, int rounds) {
  std::vector<double> s = partial;
  for (int l = 0; l < rounds && s.size() > 9; ++l) {
    for (size_t i = 0; i + 1 < s.size(); ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
    s.pop_back();
  }
  const int n = static_cast<int>(s.size());

  // Leftover oscillation (and drift magnitude) where the samples are taken.
  double tail_step = 0.0;
  for (int i = std::max(0, n - 4); i + 1 < n; ++i)
    tail_step = std::max(tail_step, 0.5 * std::abs(s[i + 1] - s[i]));

  std::vector<double> value, index;
  for (int d = 8; d >= 1; d /= 2) {
    value.push_back(s[n / d - 1]);
    index.push_back(n / d);
  }
  double previous = value.back();
  for (int level = 1; level <= 3 && value.size() > 1; ++level) {
    std::vector<double> next(value.size() - 1);
    for (size_t i = 0; i + 1 < value.size(); ++i) {
      const double ratio = std::pow(index[i + 1] / index[i], level);
      next[i] = (ratio * value[i + 1] - value[i]) / (ratio - 1.0);
    }
    if (level < 3) previous = next.back();
    value = std::move(next);
    index.erase(index.begin());
  }
  return {value.back(), std::abs(value.back() - previous), tail_step};
}

}  // namespace

AccelerationResult accelerate_alternating_drift(std::span<const double> terms) {
  if (terms.size() < 16)
    throw DomainError("accelerate_alternating_drift: too few terms");
  for (double t : terms)
    if (!std::isfinite(t)) throw DomainError("accelerate_alternating_drift: non-finite term");

  AccelerationResult out;
  out.terms_used = static_cast<int>(terms.size());

  std::vector<double> partial(terms.size());
  double acc = 0.0;
  for (size_t i = 0; i < terms.size(); ++i) {
    acc += terms[i];
    partial[i] = acc;
  }
  out.raw_sum = acc;

  // Tail alternation diagnostic (an exactly-zero tail counts as converged).
  size_t end = terms.size();
  while (end > 0 && terms[end - 1] == 0.0) --end;
  if (end == 0) {
    out.value = out.cross_check = 0.0;
    out.alternating = out.consistent = true;
    return out;
  }
  size_t start = end;
  for (size_t i = end; i-- > 0;) {
    if (terms[i] == 0.0) break;
    if (i + 1 < end && terms[i] * terms[i + 1] >= 0.0) break;
    start = i;
  }
  out.alternating = (end - start) >= std::min<size_t>(8, end);

  const AveragedRichardson main = averaged_richardson(partial, 4);
  const AveragedRichardson cross = averaged_richardson(partial, 3);
  out.value = main.value;
  out.cross_check = cross.value;

  const double scale = std::max({std::abs(main.value), std::abs(cross.value), 1e-300});
  const double internal = 4.0 * std::max(main.spread, cross.spread) + main.tail_step +
                          32.0 * 1e-16 * scale;
  const double disagreement = std::abs(main.value - cross.value);
  out.consistent = disagreement <= std::max(internal, 1e-12 * scale);
  out.error = std::max(internal, disagreement);
  return out;
}

AccelerationResult accelerate_alternating(std::span<const double> terms) {
  if (terms.size() < 4) throw DomainError("accelerate_alternating: too few terms");
  for (double t : terms)
    if (!std::isfinite(t)) throw DomainError("accelerate_alternating: non-finite term");

  AccelerationResult out;
  out.terms_used = static_cast<int>(terms.size());

  double raw = 0.0;
  for (double t : terms) raw += t;
  out.raw_sum = raw;

  // Ignore an exactly-zero tail (e.g. the commutative limit).
  size_t end = terms.size();
  while (end > 0 && terms[end - 1] == 0.0) --end;
  if (end == 0) {
    out.value = out.cross_check = 0.0;
    out.alternating = out.consistent = true;
    return out;
  }

  // First index from which signs strictly alternate through the tail.
  size_t start = end;
  for (size_t i = end; i-- > 0;) {
    if (terms[i] == 0.0) break;
    if (i + 1 < end && terms[i] * terms[i + 1] >= 0.0) break;
    start = i;
  }
  if (end - start < 4)
    throw DomainError("accelerate_alternating: tail does not alternate in sign");

  // Decaying-magnitude check over the trailing window.
  const size_t window = std::min<size_t>(8, end - start);
  for (size_t i = end - window; i + 1 < end; ++i) {
    if (std::abs(terms[i + 1]) > std::abs(terms[i]) * (1.0 + 1e-12))
      throw DomainError("accelerate_alternating: tail magnitude grows");
  }

  double head = 0.0;
  for (size_t i = 0; i < start; ++i) head += terms[i];

  std::vector<double> partial(end - start);
  double acc = 0.0;
  for (size_t i = start; i < end; ++i) {
    acc += terms[i];
    partial[i - start] = acc;
  }

  const auto [euler, euler_change] = euler_transform(partial);
  const auto [aitken, aitken_change] = aitken_iterated(partial);

  out.value = head + euler;
  out.cross_check = head + aitken;
  out.alternating = true;

  const double scale = std::max({std::abs(out.value), std::abs(out.cross_check), 1e-300});
  const double internal = 4.0 * std::max(euler_change, aitken_change) + 8.0 * 1e-16 * scale;
  const double disagreement = std::abs(out.value - out.cross_check);
  out.consistent = disagreement <= std::max(internal, 1e-13 * scale);
  out.error = std::max(internal, disagreement);
  return out;
}

}  // namespace nchydro::specfun
