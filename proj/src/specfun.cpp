#include "nchydro/specfun.hpp"

#include <cmath>
#include <limits>

#include "nchydro/errors.hpp"

namespace nchydro::specfun {

double to_double(const BigRational& q) {
  using boost::multiprecision::msb;
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  if (num == 0) return 0.0;
  const bool negative = num < 0;
  if (negative) num = -num;

  // Shift so the integer quotient carries ~64 significant bits, then undo.
  const long shift = static_cast<long>(msb(den)) + 64 - static_cast<long>(msb(num));
  if (shift > 0)
    num <<= shift;
  else if (shift < 0)
    den <<= -shift;
  const BigInt quot = num / den;
  const double d = std::ldexp(quot.convert_to<double>(), static_cast<int>(-shift));
  return negative ? -d : d;
}

namespace {

// Lanczos, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double gamma_lanczos(double x) {
  // valid for x >= 0.5
  const double z = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

}  // namespace

double gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("gamma: requires finite x > 0");
  if (x < 0.5) return gamma_lanczos(x + 1.0) / x;
  return gamma_lanczos(x);
}

double laguerre(int n, double a, double x) {
  if (n < 0) throw DomainError("laguerre: requires n >= 0");
  if (n == 0) return 1.0;
  double lkm1 = 1.0;
  double lk = 1.0 + a - x;
  for (int k = 1; k < n; ++k) {
    const double lkp1 = ((2.0 * k + 1.0 + a - x) * lk - (k + a) * lkm1) / (k + 1.0);
    lkm1 = lk;
    lk = lkp1;
  }
  return lk;
}

double laguerre_derivative(int n, double a, double x) {
  if (n < 0) throw DomainError("laguerre_derivative: requires n >= 0");
  if (n == 0) return 0.0;
  return -laguerre(n - 1, a + 1.0, x);
}

double laguerre_second_derivative(int n, double a, double x) {
  if (n < 0) throw DomainError("laguerre_second_derivative: requires n >= 0");
  if (n < 2) return 0.0;
  return laguerre(n - 2, a + 2.0, x);
}

BigRational hyp2f1_terminating(int k) {
  if (k < 0) throw DomainError("hyp2f1_terminating: requires k >= 0");
  // (1/2)_j / (3/2)_j telescopes to 1/(2j+1), so the series is
  // sum_j (-1)^j C(k,j) 2^j / (2j+1), exact in rationals.
  BigRational sum = 0;
  BigInt binom = 1;  // C(k, j)
  BigInt pow2 = 1;   // 2^j
  for (int j = 0; j <= k; ++j) {
    BigInt numerator = binom * pow2;
    if (j % 2 == 1) numerator = -numerator;
    sum += BigRational(numerator, BigInt(2 * j + 1));
    binom = binom * (k - j) / (j + 1);
    pow2 <<= 1;
  }
  return sum;
}

}  // namespace nchydro::specfun
