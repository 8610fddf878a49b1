// Householder reduction to tridiagonal form and implicitly shifted QL
// iterations (the tred2 / tql2 pair), in 0-based dense storage.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "igs/errors.hpp"
#include "igs/spectral.hpp"

namespace igs {

namespace {

constexpr int kMaxQlIterations = 100;
constexpr double kResidualTolerance = 1e-10;

// Row-major square scratch matrix.
struct Dense {
  std::size_t n;
  std::vector<double> a;
  double& operator()(std::size_t i, std::size_t j) noexcept { return a[i * n + j]; }
};

// On exit d holds the diagonal and e the subdiagonal (e[0] = 0) of T, and,
// when accumulate is set, V holds Q with H = Q T Q^T.
void tridiagonalize(Dense& V, std::vector<double>& d, std::vector<double>& e, bool accumulate) {
  const std::size_t n = V.n;
  for (std::size_t j = 0; j < n; ++j) d[j] = V(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
        V(j, i) = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;

      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        V(j, i) = f;
        g = e[j] + V(j, j) * f;
        for (std::size_t k = j + 1; k < i; ++k) {
          g += V(k, j) * d[k];
          e[k] += V(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t k = j; k < i; ++k) V(k, j) -= (f * e[k] + g * d[k]);
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  if (!accumulate) {
    for (std::size_t j = 0; j < n; ++j) d[j] = V(j, j);
    e[0] = 0.0;
    return;
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    V(n - 1, i) = V(i, i);
    V(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = V(k, i + 1) / h;
      for (std::size_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k <= i; ++k) g += V(k, i + 1) * V(k, j);
        for (std::size_t k = 0; k <= i; ++k) V(k, j) -= g * d[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) V(k, i + 1) = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = V(n - 1, j);
    V(n - 1, j) = 0.0;
  }
  V(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// QL with implicit shifts on (d, e). If W is non-null its rows are the
// current eigenvector estimates (W = Q^T on entry) and receive the rotations.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Dense* W) {
  const std::size_t n = d.size();
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m == n) m = n - 1;  // e[n-1] == 0 always terminates the scan

    if (m > l) {
      int iter = 0;
      do {
        if (++iter > kMaxQlIterations) {
          throw NumericalError("QL iteration did not converge for eigenvalue " + std::to_string(l));
        }
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0;
        double c2 = c;
        double c3 = c;
        const double el1 = e[l + 1];
        double s = 0.0;
        double s2 = 0.0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[ii];
          h = c * p;
          r = std::hypot(p, e[ii]);
          e[ii + 1] = s * r;
          s = e[ii] / r;
          c = p / r;
          p = c * d[ii] - s * g;
          d[ii + 1] = h + s * (c * g + s * d[ii]);
          if (W) {
            double* upper = &(*W)(ii + 1, 0);
            double* lower = &(*W)(ii, 0);
            for (std::size_t k = 0; k < n; ++k) {
              const double t = upper[k];
              upper[k] = s * lower[k] + c * t;
              lower[k] = c * lower[k] - s * t;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

Dense load(const SymmetricMatrix& h) {
  Dense V{h.dim(), std::vector<double>(h.data().begin(), h.data().end())};
  return V;
}

void fix_sign(std::span<double> v) {
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  for (double x : v) {
    if (std::abs(x) >= peak * (1.0 - 1e-9)) {
      if (x < 0) {
        for (double& y : v) y = -y;
      }
      return;
    }
  }
}

}  // namespace

Spectrum eig_sym(const SymmetricMatrix& h) {
  const std::size_t n = h.dim();
  if (n == 0) throw ValidationError("eig_sym requires dim >= 1");

  Dense V = load(h);
  std::vector<double> d(n), e(n);
  tridiagonalize(V, d, e, true);

  Dense W{n, std::vector<double>(n * n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) W(j, i) = V(i, j);
  ql_implicit(d, e, &W);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  Spectrum s;
  s.dim = n;
  s.eigenvalues.resize(n);
  s.eigenvectors.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    s.eigenvalues[k] = d[order[k]];
    std::copy_n(&W(order[k], 0), n, s.eigenvectors.begin() + static_cast<std::ptrdiff_t>(k * n));
    fix_sign(std::span<double>(s.eigenvectors).subspan(k * n, n));
  }

  double residual = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto v = s.eigenvector(k);
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = h.row(i);
      const double hv = std::inner_product(row.begin(), row.end(), v.begin(), 0.0);
      residual = std::max(residual, std::abs(hv - s.eigenvalues[k] * v[i]));
    }
  }
  s.residual_bound = residual;

  const double bound = kResidualTolerance * std::max(h.norm_inf(), std::numeric_limits<double>::min());
  if (residual > bound) {
    throw NumericalError("eigen-residual " + std::to_string(residual) + " exceeds bound " + std::to_string(bound));
  }
  return s;
}

std::vector<double> eigenvalues_sym(const SymmetricMatrix& h) {
  const std::size_t n = h.dim();
  if (n == 0) throw ValidationError("eigenvalues_sym requires dim >= 1");
  Dense V = load(h);
  std::vector<double> d(n), e(n);
  tridiagonalize(V, d, e, false);
  ql_implicit(d, e, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace igs
