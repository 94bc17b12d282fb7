#include "nchydro/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>

#include "nchydro/bounds.hpp"
#include "nchydro/corrections.hpp"
#include "nchydro/hydrogen.hpp"
#include "nchydro/nc_model.hpp"
#include "nchydro/ns_series.hpp"
#include "nchydro/operator_oracle.hpp"

namespace nchydro::verify {

namespace {

std::string fmt(const char* format, ...) {
  char buffer[512];
  va_list args;
  va_start(args, format);
  vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return buffer;
}

// Round to two significant figures; bounds are quoted at that precision.
double round_2sf(double x) {
  if (x == 0.0) return 0.0;
  const double exponent = std::floor(std::log10(std::abs(x)));
  const double scale = std::pow(10.0, exponent - 1.0);
  return std::round(x / scale) * scale;
}

class Runner {
 public:
  explicit Runner(const Options& options) : opt_(options) {}

  std::vector<CheckResult> run() {
    check("s1s0-reproduction", [this](CheckResult& r) { s1s0(r); });
    check("bound-reproduction", [this](CheckResult& r) { bound(r); });
    check("ns-n2-law", [this](CheckResult& r) { n2_law(r); });
    check("series-vs-grid-oracle", [this](CheckResult& r) { oracle(r); });
    check("correction-three-way", [this](CheckResult& r) { three_way(r); });
    check("inverse-moment-oracle", [this](CheckResult& r) { moments(r); });
    check("operator-spectrum", [this](CheckResult& r) { spectrum(r); });
    check("second-order-scaling", [this](CheckResult& r) { second_order(r); });
    check("moment-identity", [this](CheckResult& r) { moment_identity(r); });
    check("bounds-round-trip", [this](CheckResult& r) { round_trip(r); });
    return std::move(results_);
  }

 private:
  void check(const char* name, const std::function<void(CheckResult&)>& body) {
    CheckResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    check_start_ = start;
    try {
      body(r);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results_.push_back(std::move(r));
  }

  // Both series routes reproduce S_1s(0) = 1.72006 within 1e-4, under 60 s.
  void s1s0(CheckResult& r) {
    const double target = 1.72006;
    const auto series = ns_series::s_ns(0.0, 1, opt_.K);
    const auto closed = ns_series::s_1s0_closed(opt_.K);
    const double d_series = std::abs(series.value - target);
    const double d_closed = std::abs(closed.value - target);
    const double elapsed = partial_seconds();
    const bool in_budget = elapsed <= 60.0;
    r.passed = d_series <= 1e-4 && d_closed <= 1e-4 && series.consistent &&
               closed.consistent && in_budget;
    r.detail = fmt("series=%.6f closed=%.6f target=%.5f tol=1e-4 (dev %.1e, %.1e)",
                   series.value, closed.value, target, d_series, d_closed);
  }

  // hbar sqrt(<theta^2>) <= 7.7e-36 m^2 and alpha <= 2.4e34, two significant
  // figures with the pinned constants, under 1 s.
  void bound(CheckResult& r) {
    bounds::ExperimentInput input;
    const auto b = bounds::bound_from_uncertainty(input, opt_.constants);
    const double theta_2sf = round_2sf(b.hbar_sqrt_theta2_bound_m2);
    const double alpha_2sf = round_2sf(b.alpha_bound);
    const bool theta_ok = theta_2sf == 7.7e-36;
    const bool alpha_ok = alpha_2sf == 2.4e34;
    r.passed = theta_ok && alpha_ok && partial_seconds() <= 1.0;
    r.detail = fmt("hbar*sqrt(<theta^2>)<=%.4e m^2 (2sf %.1e), alpha<=%.4e (2sf %.1e)",
                   b.hbar_sqrt_theta2_bound_m2, theta_2sf, b.alpha_bound, alpha_2sf);
  }

  // S_ns(0)/n^2 stays at S_1s(0) within 1e-3 relative for n = 1..5.
  void n2_law(CheckResult& r) {
    const double base = ns_series::s_ns(0.0, 1, opt_.K).value;
    double worst = 0.0;
    int worst_n = 1;
    for (int n = 2; n <= 5; ++n) {
      const double scaled = ns_series::s_ns(0.0, n, opt_.K).value / (n * n);
      const double defect = std::abs(scaled - base) / base;
      if (defect > worst) {
        worst = defect;
        worst_n = n;
      }
    }
    r.passed = worst <= 1e-3;
    r.detail = fmt("max relative defect %.2e at n=%d (tol 1e-3), S_1s(0)=%.6f", worst,
                   worst_n, base);
  }

  // Basis-expansion series vs grid-discretized operator at finite beta.
  void oracle(CheckResult& r) {
    oracle::OracleWorkspace workspace;
    double worst_ratio = 0.0;
    std::string worst_case;
    for (int n : {1, 2}) {
      for (double beta : {0.05, 0.1, 0.2, 0.5}) {
        const auto series = ns_series::s_ns(beta, n, opt_.K);
        const oracle::RadialGrid grid(oracle::recommended_rho_max(beta, n),
                                      opt_.grid_points);
        const auto grid_value = workspace.s_ns(beta, n, grid);
        const double diff = std::abs(series.value - grid_value.value);
        const double combined =
            series.error + grid_value.error + 1e-9 * std::abs(series.value);
        const double ratio = diff / combined;
        if (ratio > worst_ratio) {
          worst_ratio = ratio;
          worst_case = fmt("beta=%.2f n=%d |diff|=%.2e combined=%.2e", beta, n, diff,
                           combined);
        }
      }
    }
    const double elapsed = partial_seconds();
    r.passed = worst_ratio <= 1.0 && elapsed <= 180.0;
    r.detail = fmt("worst %s (ratio %.2f, budget %.0fs<=180s)", worst_case.c_str(),
                   worst_ratio, elapsed);
  }

  // Closed, assembled, and effective routes agree to 1e-8 relative for all
  // 2 <= l <= n-1 <= 9.
  void three_way(CheckResult& r) {
    double worst = 0.0;
    std::string worst_case;
    for (int n = 3; n <= 10; ++n) {
      for (int l = 2; l <= n - 1; ++l) {
        const hydrogen::QuantumState state(n, l, 0);
        const double closed = corrections::delta_e1_closed(state).value;
        const double assembled = corrections::delta_e1_assembled(state).value;
        const double effective = corrections::delta_e1_effective(state).value;
        const double scale = std::abs(closed);
        const double dev =
            std::max(std::abs(closed - assembled), std::abs(closed - effective)) / scale;
        if (dev > worst) {
          worst = dev;
          worst_case = fmt("(n=%d,l=%d)", n, l);
        }
      }
    }
    r.passed = worst <= 1e-8;
    r.detail = fmt("max relative spread %.2e at %s (tol 1e-8)", worst, worst_case.c_str());
  }

  // Closed-form <r^-3>, <r^-4>, <r^-5> match quadrature to 1e-10 relative
  // over every valid state with n <= 10.
  void moments(CheckResult& r) {
    double worst = 0.0;
    std::string worst_case;
    for (int n = 1; n <= 10; ++n) {
      for (int l = 0; l <= n - 1; ++l) {
        for (int k : {3, 4, 5}) {
          if ((k <= 4 && l < 1) || (k == 5 && l < 2)) continue;
          const hydrogen::QuantumState state(n, l, 0);
          const double closed = hydrogen::inv_r_moment_closed(state, k);
          const double quad = hydrogen::expectation_quadrature(
              state, [k](double rr) { return std::pow(rr, -k); });
          const double dev = std::abs(closed - quad) / closed;
          if (dev > worst) {
            worst = dev;
            worst_case = fmt("(n=%d,l=%d,k=%d)", n, l, k);
          }
        }
      }
    }
    r.passed = worst <= 1e-10;
    r.detail = fmt("max relative deviation %.2e at %s (tol 1e-10)", worst,
                   worst_case.c_str());
  }

  // Lowest six grid eigenvalues of rho^2 + p_rho^2 hit 4k+3 within 1e-3.
  void spectrum(CheckResult& r) {
    const oracle::RadialGrid grid(12.0, opt_.grid_points);
    const auto eigenvalues = oracle::eigenvalues_only(oracle::build_operator(grid));
    double worst = 0.0;
    for (int k = 0; k < 6; ++k)
      worst = std::max(worst, std::abs(eigenvalues[k] - (4.0 * k + 3.0)));
    r.passed = worst <= 1e-3;
    r.detail = fmt("max |lambda_k - (4k+3)| = %.2e over k<6 at N=%d (tol 1e-3)", worst,
                   opt_.grid_points);
  }

  // The oscillator-excitation channel scales as 1/omega and vanishes for
  // s states.
  void second_order(CheckResult& r) {
    const auto params = nc::NcParameters::from_t(1.0, opt_.constants);
    bool ns_zero = true;
    for (int n = 1; n <= 3; ++n) {
      const hydrogen::QuantumState s(n, 0, 0);
      if (corrections::second_order_oscillator_channel(s, 1.0, params) != 0.0)
        ns_zero = false;
    }

    const hydrogen::QuantumState state(2, 1, 1);
    double sum_x = 0.0, sum_y = 0.0, sum_xx = 0.0, sum_xy = 0.0;
    const int points = 9;
    for (int i = 0; i < points; ++i) {
      const double omega = 0.5 * std::pow(100.0, i / (points - 1.0));
      const double value =
          corrections::second_order_oscillator_channel(state, omega, params);
      const double x = std::log(omega);
      const double y = std::log(std::abs(value));
      sum_x += x;
      sum_y += y;
      sum_xx += x * x;
      sum_xy += x * y;
    }
    const double slope =
        (points * sum_xy - sum_x * sum_y) / (points * sum_xx - sum_x * sum_x);
    r.passed = ns_zero && std::abs(slope + 1.0) <= 0.01;
    r.detail = fmt("fitted exponent %.4f (target -1.00 +/- 0.01), ns channel zero: %s",
                   slope, ns_zero ? "yes" : "no");
  }

  // <theta_i theta_j> = (<theta^2>/3) delta_ij from the Gaussian-quadrature
  // oracle, to 1e-3; in oscillator units the trace is exactly 3/2.
  void moment_identity(CheckResult& r) {
    const auto moments = nc::moment_tensor_quadrature(8);
    const double third = moments.trace() / 3.0;
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      worst = std::max(worst, std::abs(moments.first[i]));
      for (int j = 0; j < 3; ++j) {
        const double expected = (i == j) ? third : 0.0;
        worst = std::max(worst, std::abs(moments.second[i][j] - expected) / third);
      }
    }
    const double trace_dev = std::abs(moments.trace() - 1.5) / 1.5;
    bool mc_ok = true;
    std::string mc_note;
    if (opt_.with_monte_carlo) {
      const auto mc = nc::moment_tensor_monte_carlo(200000, opt_.seed);
      const double mc_dev = std::abs(mc.trace() - 1.5) / 1.5;
      mc_ok = mc_dev <= 2e-2;
      mc_note = fmt(", MC trace dev %.2e", mc_dev);
    }
    r.passed = worst <= 1e-3 && trace_dev <= 1e-3 && mc_ok;
    r.detail = fmt("max component deviation %.2e, trace dev %.2e (tol 1e-3)%s", worst,
                   trace_dev, mc_note.c_str());
  }

  // Feeding t_bound back through the level shifts reproduces the input
  // uncertainty, and the pinned constants reproduce the 1s-2s frequency
  // scale to the reduced-mass level.
  void round_trip(CheckResult& r) {
    bounds::ExperimentInput input;
    const auto b = bounds::bound_from_uncertainty(input, opt_.constants);
    const auto params = nc::NcParameters::from_t(b.t_bound, opt_.constants);
    const double shift =
        ns_series::delta_e_ns(2, params) - ns_series::delta_e_ns(1, params);
    const double ratio = std::abs(shift) / (3.0 / 8.0);
    const double rt_dev = std::abs(ratio - input.rel_uncertainty) / input.rel_uncertainty;

    const double h_Js = 2.0 * M_PI * opt_.constants.hbar_Js;
    const double predicted_hz = (3.0 / 8.0) * opt_.constants.hartree_J / h_Js;
    const double freq_dev = std::abs(predicted_hz - input.frequency_hz) / input.frequency_hz;

    r.passed = rt_dev <= 1e-12 && freq_dev <= 1e-3;
    r.detail = fmt("uncertainty round-trip dev %.2e (tol 1e-12), "
                   "(3/8)E_h/h vs f_1s2s dev %.2e (tol 1e-3)",
                   rt_dev, freq_dev);
  }

  double partial_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - check_start_)
        .count();
  }

  const Options& opt_;
  std::vector<CheckResult> results_;
  std::chrono::steady_clock::time_point check_start_;
};

}  // namespace

std::vector<CheckResult> run_all(const Options& options) {
  Runner runner(options);
  return runner.run();
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace nchydro::verify
