#pragma once

#include <functional>
#include <vector>

namespace nchydro::specfun {

enum class QuadratureScheme { adaptive_gauss_legendre };

/// Controls integration over [0, inf): adaptive Gauss-Legendre panels on
/// [0, split], then the substitution rho = split + tail_scale*log(1/(1-u))
/// maps the remainder onto u in [0,1). Suitable for integrands with
/// exponential or Gaussian tails.
struct QuadratureSpec {
  QuadratureScheme scheme = QuadratureScheme::adaptive_gauss_legendre;
  int nodes = 21;           // Gauss-Legendre points per panel
  double split = 40.0;      // [0, inf) = [0, split] + tail
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  double tail_scale = 8.0;  // decay scale assumed by the tail substitution
  int max_depth = 32;       // panel bisection limit

  void validate() const;  // throws DomainError on bad fields
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  long evaluations = 0;
  bool converged = true;
};

/// Integral of f over [0, inf). Non-convergence leaves converged = false
/// with the best estimate in place.
QuadratureResult try_integrate_semiinfinite(const std::function<double(double)>& f,
                                            const QuadratureSpec& spec = {});

/// As above but throws ConvergenceError (carrying the best estimate) when
/// the refinement limit is hit before the tolerance target.
QuadratureResult integrate_semiinfinite(const std::function<double(double)>& f,
                                        const QuadratureSpec& spec = {});

/// Nodes and weights on [-1, 1]; cached per order, thread-safe.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre_rule(int order);

}  // namespace nchydro::specfun
