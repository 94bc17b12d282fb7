#include "nchydro/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "nchydro/errors.hpp"

namespace nchydro::specfun {

void QuadratureSpec::validate() const {
  if (nodes < 2) throw DomainError("quadrature: node count must be >= 2");
  if (!(split > 0.0)) throw DomainError("quadrature: split point must be > 0");
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw DomainError("quadrature: tolerances must be > 0");
  if (!(tail_scale > 0.0)) throw DomainError("quadrature: tail scale must be > 0");
  if (max_depth < 1) throw DomainError("quadrature: max depth must be >= 1");
}

const GaussLegendreRule& gauss_legendre_rule(int order) {
  if (order < 2) throw DomainError("gauss_legendre_rule: order must be >= 2");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it != cache.end()) return *it->second;

  auto rule = std::make_unique<GaussLegendreRule>();
  rule->nodes.resize(order);
  rule->weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton on P_n from the Chebyshev-like initial guess.
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule->nodes[i] = -x;
    rule->nodes[order - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule->weights[i] = w;
    rule->weights[order - 1 - i] = w;
  }
  auto [pos, inserted] = cache.emplace(order, std::move(rule));
  (void)inserted;
  return *pos->second;
}

namespace {

// Globally adaptive segment bookkeeping: refine the worst segment until the
// summed error defect is below the target. A segment's value is the two-half
// refinement of its parent estimate; err is the refinement defect.
struct Segment {
  double a, b;
  double value;       // left_half + right_half
  double left_half;   // Gauss-Legendre over [a, mid]
  double right_half;  // Gauss-Legendre over [mid, b]
  double err;         // |value - parent_estimate|
  double mass;        // integral of |f|, sets the rounding floor
  int depth;
  int stall;          // consecutive splits that failed to shrink the defect
  bool tail;          // integrate the tail-substituted function
};

constexpr int kMaxSegments = 8192;

}  // namespace

QuadratureResult try_integrate_semiinfinite(const std::function<double(double)>& f,
                                            const QuadratureSpec& spec) {
  spec.validate();
  const GaussLegendreRule& rule = gauss_legendre_rule(spec.nodes);

  const double s = spec.split;
  const double T = spec.tail_scale;
  auto tail_value = [&](double u) -> double {
    // rho = split + T*log(1/(1-u)) maps [0,1) onto [split, inf).
    const double one_minus = 1.0 - u;
    if (one_minus <= 0.0) return 0.0;
    const double rho = s - T * std::log(one_minus);
    return f(rho) * T / one_minus;
  };

  long evaluations = 0;
  auto panel = [&](bool tail, double a, double b, double& mass) -> double {
    const double mid = 0.5 * (a + b);
    const double halfwidth = 0.5 * (b - a);
    double acc = 0.0, unsigned_acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = mid + halfwidth * rule.nodes[i];
      const double v = tail ? tail_value(x) : f(x);
      if (!std::isfinite(v)) throw DomainError("quadrature: non-finite integrand value");
      acc += rule.weights[i] * v;
      unsigned_acc += rule.weights[i] * std::abs(v);
    }
    evaluations += static_cast<long>(rule.nodes.size());
    mass += unsigned_acc * halfwidth;
    return acc * halfwidth;
  };

  auto make_segment = [&](bool tail, double a, double b, double parent_estimate,
                          int depth) -> Segment {
    const double mid = 0.5 * (a + b);
    Segment seg;
    seg.a = a;
    seg.b = b;
    seg.mass = 0.0;
    seg.left_half = panel(tail, a, mid, seg.mass);
    seg.right_half = panel(tail, mid, b, seg.mass);
    seg.value = seg.left_half + seg.right_half;
    seg.err = std::abs(seg.value - parent_estimate);
    seg.depth = depth;
    seg.stall = 0;
    seg.tail = tail;
    return seg;
  };

  std::vector<Segment> segments;
  segments.reserve(256);
  constexpr int kFinitePanels = 8;
  constexpr int kTailPanels = 4;
  double scratch_mass = 0.0;
  for (int i = 0; i < kFinitePanels; ++i) {
    const double a = s * i / kFinitePanels;
    const double b = s * (i + 1) / kFinitePanels;
    segments.push_back(make_segment(false, a, b, panel(false, a, b, scratch_mass), 0));
  }
  for (int i = 0; i < kTailPanels; ++i) {
    const double a = i / double(kTailPanels);
    const double b = (i + 1) / double(kTailPanels);
    segments.push_back(make_segment(true, a, b, panel(true, a, b, scratch_mass), 0));
  }

  auto totals = [&segments]() {
    double value = 0.0, err = 0.0;
    for (const Segment& seg : segments) {
      value += seg.value;
      err += seg.err;
    }
    return std::pair<double, double>(value, err);
  };

  auto [total_value, total_err] = totals();
  auto target = [&](double value) {
    return std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
  };

  // A segment whose defect is at the evaluation rounding floor (relative to
  // its unsigned mass) cannot improve; splitting it only multiplies noise.
  const double noise_scale = 512.0 * std::numeric_limits<double>::epsilon();
  auto at_noise_floor = [&](const Segment& seg) {
    return seg.err <= noise_scale * seg.mass;
  };

  while (total_err > target(total_value) &&
         static_cast<int>(segments.size()) < kMaxSegments) {
    // Worst splittable segment; ties broken by position for determinism.
    int worst = -1;
    for (int i = 0; i < static_cast<int>(segments.size()); ++i) {
      const Segment& seg = segments[i];
      if (seg.depth >= spec.max_depth) continue;
      if (seg.stall >= 3) continue;
      if (at_noise_floor(seg)) continue;
      if (seg.b - seg.a <
          64.0 * std::numeric_limits<double>::epsilon() *
              std::max({std::abs(seg.a), std::abs(seg.b), 1.0}))
        continue;
      if (worst < 0 || seg.err > segments[worst].err ||
          (seg.err == segments[worst].err && seg.a < segments[worst].a))
        worst = i;
    }
    if (worst < 0) break;  // only noise and floors left

    Segment parent = segments[worst];
    const double mid = 0.5 * (parent.a + parent.b);
    Segment left = make_segment(parent.tail, parent.a, mid, parent.left_half,
                                parent.depth + 1);
    Segment right = make_segment(parent.tail, mid, parent.b, parent.right_half,
                                 parent.depth + 1);
    // Last-resort guard for defects that refuse to contract at all.
    const bool effective = left.err + right.err < 0.6 * parent.err;
    left.stall = right.stall = effective ? 0 : parent.stall + 1;
    segments[worst] = std::move(left);
    segments.push_back(std::move(right));

    std::tie(total_value, total_err) = totals();
  }

  QuadratureResult result;
  result.value = total_value;
  result.error = total_err;
  result.evaluations = evaluations;
  result.converged = total_err <= target(total_value);
  return result;
}

QuadratureResult integrate_semiinfinite(const std::function<double(double)>& f,
                                        const QuadratureSpec& spec) {
  QuadratureResult r = try_integrate_semiinfinite(f, spec);
  if (!r.converged)
    throw ConvergenceError("quadrature: refinement limit reached before tolerance", r.value,
                           r.error);
  return r;
}

}  // namespace nchydro::specfun
