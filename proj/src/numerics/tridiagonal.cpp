#include "pdm/numerics/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pdm::numerics {

namespace {

constexpr int kMaxIterPerEigenvalue = 50;

double sign_like(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

/// In-place implicit-shift QL on (d, e); d becomes the unordered eigenvalues.
/// e is a length-n work array whose first n-1 entries are the off-diagonal.
void tql1(std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = d.size();
  if (n == 0) return;
  e[n - 1] = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxIterPerEigenvalue)
          throw ConvergenceFailure("eigen_tridiagonal: QL iteration cap exceeded");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + sign_like(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t i1 = m; i1 > l; --i1) {
          const std::size_t i = i1 - 1;
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            // Deflate: a rotation annihilated prematurely.
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<double> eigen_tridiagonal(std::span<const double> diag,
                                      std::span<const double> offdiag,
                                      std::size_t n_lowest) {
  const std::size_t n = diag.size();
  if (n == 0) throw PreconditionError("eigen_tridiagonal: empty matrix");
  if (offdiag.size() + 1 != n)
    throw PreconditionError("eigen_tridiagonal: offdiag length must be diag length - 1");
  if (n_lowest > n)
    throw PreconditionError("eigen_tridiagonal: n_lowest exceeds matrix size");

  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(offdiag.begin(), offdiag.end());
  e.push_back(0.0);
  tql1(d, e);
  std::sort(d.begin(), d.end());
  d.resize(n_lowest);
  return d;
}

std::vector<double> tridiagonal_eigenvector(std::span<const double> diag,
                                            std::span<const double> offdiag,
                                            double eigenvalue) {
  const std::size_t n = diag.size();
  if (n == 0) throw PreconditionError("tridiagonal_eigenvector: empty matrix");
  if (offdiag.size() + 1 != n)
    throw PreconditionError("tridiagonal_eigenvector: offdiag length must be diag length - 1");

  // Scale-aware perturbation keeps (T - lambda I) factorable when lambda is
  // numerically exact.
  double scale = std::abs(eigenvalue);
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(diag[i]));
  const double nudge = scale * 1e-14 + 1e-300;

  std::vector<double> x(n, 1.0);
  for (std::size_t i = 1; i < n; i += 2) x[i] = 0.5;  // break symmetry
  std::vector<double> lo(n), di(n), up(n), up2(n), rhs(n);

  for (int sweep = 0; sweep < 3; ++sweep) {
    // Rebuild the factorization input each sweep (it is destroyed in place).
    for (std::size_t i = 0; i < n; ++i) {
      di[i] = diag[i] - eigenvalue;
      lo[i] = i > 0 ? offdiag[i - 1] : 0.0;
      up[i] = i + 1 < n ? offdiag[i] : 0.0;
      up2[i] = 0.0;
    }
    rhs = x;
    // Gaussian elimination with partial pivoting on the tridiagonal band.
    std::vector<bool> swapped(n, false);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(lo[i + 1]) > std::abs(di[i])) {
        std::swap(di[i], lo[i + 1]);
        std::swap(up[i], di[i + 1]);
        if (i + 2 < n) up2[i] = up[i + 1], up[i + 1] = 0.0;
        std::swap(rhs[i], rhs[i + 1]);
        swapped[i] = true;
      }
      if (di[i] == 0.0) di[i] = nudge;
      const double mult = lo[i + 1] / di[i];
      di[i + 1] -= mult * up[i];
      if (i + 2 < n) up[i + 1] -= mult * up2[i];
      rhs[i + 1] -= mult * rhs[i];
    }
    if (di[n - 1] == 0.0) di[n - 1] = nudge;
    // Back substitution.
    x[n - 1] = rhs[n - 1] / di[n - 1];
    if (n >= 2) x[n - 2] = (rhs[n - 2] - up[n - 2] * x[n - 1]) / di[n - 2];
    for (std::size_t i1 = n >= 2 ? n - 2 : 0; i1 > 0; --i1) {
      const std::size_t i = i1 - 1;
      x[i] = (rhs[i] - up[i] * x[i + 1] - up2[i] * x[i + 2]) / di[i];
    }
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0 || !std::isfinite(norm))
      throw ConvergenceFailure("tridiagonal_eigenvector: inverse iteration broke down");
    for (double& v : x) v /= norm;
  }
  return x;
}

}  // namespace pdm::numerics
