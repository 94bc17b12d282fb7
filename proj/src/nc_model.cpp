#include "nchydro/nc_model.hpp"

#include <cmath>
#include <random>

#include "nchydro/errors.hpp"
#include "tridiagonal_ql.hpp"

namespace nchydro::nc {

NcParameters NcParameters::from_alpha(double alpha, double planck_length_m,
                                      double bohr_radius_m) {
  if (alpha < 0.0) throw DomainError("NcParameters: alpha must be >= 0");
  if (!(planck_length_m > 0.0) || !(bohr_radius_m > 0.0))
    throw DomainError("NcParameters: lengths must be > 0");
  NcParameters p;
  p.alpha = alpha;
  p.planck_length_m = planck_length_m;
  p.bohr_radius_m = bohr_radius_m;
  const double ratio = planck_length_m / bohr_radius_m;
  const double t = std::sqrt(1.5) * alpha * ratio * ratio;
  p.t2 = t * t;
  return p;
}

NcParameters NcParameters::from_alpha(double alpha, const ConstantsTable& c) {
  return from_alpha(alpha, c.planck_length_m, c.bohr_radius_m);
}

NcParameters NcParameters::from_t(double t, const ConstantsTable& c) {
  if (t < 0.0) throw DomainError("NcParameters: t must be >= 0");
  const double ratio = c.planck_length_m / c.bohr_radius_m;
  return from_alpha(t / (std::sqrt(1.5) * ratio * ratio), c.planck_length_m,
                    c.bohr_radius_m);
}

double NcParameters::t() const { return std::sqrt(t2); }

double NcParameters::beta() const { return std::pow(t2 / 6.0, 0.25); }

double NcParameters::hbar_sqrt_theta2_m2() const {
  return t() * bohr_radius_m * bohr_radius_m;
}

double ThetaMoments::trace() const { return second[0][0] + second[1][1] + second[2][2]; }

ParametersWithMoments moments_from_alpha(double alpha, double planck_length_m,
                                         double bohr_radius_m) {
  ParametersWithMoments out;
  out.params = NcParameters::from_alpha(alpha, planck_length_m, bohr_radius_m);
  const double third = out.params.t2 / 3.0;
  for (int i = 0; i < 3; ++i) out.moments.second[i][i] = third;
  return out;
}

namespace {

// Gauss-Hermite nodes/weights for weight e^{-x^2} via the Golub-Welsch
// Jacobi matrix (diag 0, offdiag sqrt(i/2)).
void gauss_hermite(int n, std::vector<double>& x, std::vector<double>& w) {
  std::vector<double> d(n, 0.0), e(n - 1);
  for (int i = 1; i < n; ++i) e[i - 1] = std::sqrt(0.5 * i);
  std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) q[i][i] = 1.0;
  detail::tridiagonal_ql(d, e, &q);
  x = d;
  w.resize(n);
  const double sqrt_pi = std::sqrt(M_PI);
  for (int j = 0; j < n; ++j) w[j] = sqrt_pi * q[j][0] * q[j][0];
}

void cross(const std::array<double, 3>& u, const std::array<double, 3>& v,
           std::array<double, 3>& out) {
  out[0] = u[1] * v[2] - u[2] * v[1];
  out[1] = u[2] * v[0] - u[0] * v[2];
  out[2] = u[0] * v[1] - u[1] * v[0];
}

void accumulate(ThetaMoments& acc, const std::array<double, 3>& theta, double weight) {
  for (int i = 0; i < 3; ++i) {
    acc.first[i] += weight * theta[i];
    for (int j = 0; j < 3; ++j) acc.second[i][j] += weight * theta[i] * theta[j];
  }
}

}  // namespace

ThetaMoments moment_tensor_quadrature(int nodes_per_dim) {
  if (nodes_per_dim < 2) throw DomainError("moment_tensor_quadrature: need >= 2 nodes");
  std::vector<double> x, w;
  gauss_hermite(nodes_per_dim, x, w);

  // Each ground-state density is a product of e^{-x^2}/sqrt(pi) factors in
  // units where the oscillator length is 1, so the 6D integral factorizes
  // into a tensor Gauss-Hermite product.
  const double pi3 = std::pow(M_PI, 3);
  ThetaMoments acc;
  std::array<double, 3> a{}, b{}, theta{};
  for (int i0 = 0; i0 < nodes_per_dim; ++i0)
    for (int i1 = 0; i1 < nodes_per_dim; ++i1)
      for (int i2 = 0; i2 < nodes_per_dim; ++i2) {
        a = {x[i0], x[i1], x[i2]};
        const double wa = w[i0] * w[i1] * w[i2];
        for (int j0 = 0; j0 < nodes_per_dim; ++j0)
          for (int j1 = 0; j1 < nodes_per_dim; ++j1)
            for (int j2 = 0; j2 < nodes_per_dim; ++j2) {
              b = {x[j0], x[j1], x[j2]};
              cross(a, b, theta);
              accumulate(acc, theta, wa * w[j0] * w[j1] * w[j2] / pi3);
            }
      }
  return acc;
}

ThetaMoments moment_tensor_monte_carlo(std::size_t samples, std::uint64_t seed) {
  if (samples < 10000) throw DomainError("moment_tensor_monte_carlo: need >= 1e4 samples");
  std::mt19937_64 rng(seed);
  // Box-Muller with sigma = 1/sqrt(2), matching the e^{-x^2} density.
  const double sigma = std::sqrt(0.5);
  auto normal_pair = [&](double& g1, double& g2) {
    double u1 = 0.0;
    do {
      u1 = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    } while (u1 <= 1e-300);
    const double u2 = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const double radius = sigma * std::sqrt(-2.0 * std::log(u1));
    g1 = radius * std::cos(2.0 * M_PI * u2);
    g2 = radius * std::sin(2.0 * M_PI * u2);
  };

  ThetaMoments acc;
  const double weight = 1.0 / static_cast<double>(samples);
  std::array<double, 3> a{}, b{}, theta{};
  for (std::size_t s = 0; s < samples; ++s) {
    double g[6];
    normal_pair(g[0], g[1]);
    normal_pair(g[2], g[3]);
    normal_pair(g[4], g[5]);
    a = {g[0], g[1], g[2]};
    b = {g[3], g[4], g[5]};
    cross(a, b, theta);
    accumulate(acc, theta, weight);
  }
  return acc;
}

}  // namespace nchydro::nc
