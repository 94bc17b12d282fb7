#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace nchydro::oracle {

/// Uniform Dirichlet grid for u(rho) = rho f(rho): interior nodes
/// rho_i = (i+1) h with h = rho_max/(n_points+1), u(0) = u(rho_max) = 0.
struct RadialGrid {
  double rho_max;
  int n_points;

  RadialGrid(double rho_max_, int n_points_);  // validates (n >= 100)
  double spacing() const { return rho_max / (n_points + 1); }
  double node(int i) const { return (i + 1) * spacing(); }
};

/// Symmetric tridiagonal operator rho^2 - d^2/drho^2 acting on u.
struct TridiagonalMatrix {
  std::vector<double> diag;  // rho_i^2 + 2/h^2
  std::vector<double> off;   // -1/h^2, size n-1
};

TridiagonalMatrix build_operator(const RadialGrid& grid);

/// Full eigendecomposition A = Q diag(lambda) Q^T, eigenvalues ascending,
/// columns of Q orthonormal.
struct SymmetricSpectrum {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> vectors;  // vectors[k] = column k
};

SymmetricSpectrum eigendecompose(const TridiagonalMatrix& matrix);
std::vector<double> eigenvalues_only(const TridiagonalMatrix& matrix);

/// Frobenius residual |A - Q L Q^T| / |A|; diagnostic for the invariants.
double reconstruction_residual(const TridiagonalMatrix& matrix,
                               const SymmetricSpectrum& spectrum);

/// Q diag(lambda^{-1/2}) Q^T u. Throws DomainError on a nonpositive
/// eigenvalue (signals a broken discretization).
std::vector<double> inv_sqrt_apply(const SymmetricSpectrum& spectrum,
                                   std::span<const double> u);

struct OracleResult {
  double value = 0.0;
  double error = 0.0;       // Richardson estimate plus wall-leakage bound
  bool grid_warning = false;
  double rho_max = 0.0;
  int n_points = 0;
};

/// Domain size for the sandwich at (beta, n): starts at 12 and doubles
/// while the boundary leakage bound exceeds the target, capped at 768.
double recommended_rho_max(double beta, int n);

/// Caches eigendecompositions keyed by (rho_max, n_points) so sweeps over
/// (beta, n) on shared grids pay for each decomposition once.
class OracleWorkspace {
 public:
  const SymmetricSpectrum& spectrum(const RadialGrid& grid);

  /// Trapezoidal sandwich 4 <u| 1/rho - A^{-1/2} |u> on one grid.
  double sandwich(double beta, int n, const RadialGrid& grid);

  /// Richardson-extrapolated value over n_points, n_points/2, n_points/4
  /// at fixed rho_max, with an honest error estimate.
  OracleResult s_ns(double beta, int n, const RadialGrid& grid);

 private:
  std::map<std::pair<double, int>, SymmetricSpectrum> cache_;
};

/// One-shot version of OracleWorkspace::s_ns. Requires beta > 0 (the
/// beta = 0 limit is reached by extrapolation from small beta).
OracleResult s_ns_oracle(double beta, int n, const RadialGrid& grid);

}  // namespace nchydro::oracle
