#pragma once

// Symmetric tridiagonal eigensolver: implicit-shift QL in the classic
// EISPACK tql1/tql2 formulation, with optional eigenvector accumulation.
// Deterministic, no external linear-algebra dependency.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nchydro::detail {

// d: diagonal (size n); e: subdiagonal (size n-1). On return d holds the
// eigenvalues in ascending order. If z is non-null it must hold the n x n
// identity stored as columns (z[j] is column j); on return column j is the
// orthonormal eigenvector for d[j].
inline void tridiagonal_ql(std::vector<double>& d, std::vector<double> e,
                           std::vector<std::vector<double>>* z) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return;
  e.resize(n, 0.0);
  const double eps = std::numeric_limits<double>::epsilon();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd + 1e-300) break;
      }
      if (m != l) {
        if (iter++ == 50) throw std::runtime_error("tridiagonal_ql: too many iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z) {
            std::vector<double>& zi = (*z)[i];
            std::vector<double>& zi1 = (*z)[i + 1];
            for (int k = 0; k < n; ++k) {
              f = zi1[k];
              zi1[k] = s * zi[k] + c * f;
              zi[k] = c * zi[k] - s * f;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  // Ascending order, carrying eigenvector columns alongside.
  for (int i = 0; i < n - 1; ++i) {
    int k = i;
    for (int j = i + 1; j < n; ++j)
      if (d[j] < d[k]) k = j;
    if (k != i) {
      std::swap(d[i], d[k]);
      if (z) std::swap((*z)[i], (*z)[k]);
    }
  }
}

}  // namespace nchydro::detail
