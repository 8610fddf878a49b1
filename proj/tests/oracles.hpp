#pragma once

// Test-only reference routines, independent of the library's eigensolver and
// propagator code paths.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "igs/model.hpp"

namespace igs::oracle {

/// Cyclic Jacobi rotations on a copy of h; eigenvalues ascending.
inline std::vector<double> jacobi_eigenvalues(const SymmetricMatrix& h, double tol = 1e-14) {
  const std::size_t n = h.dim();
  std::vector<double> a(h.data().begin(), h.data().end());
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (off < tol * tol) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (at(p, q) == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// exp(-iHt) psi by Taylor series with scaling and repeated application.
inline std::vector<std::complex<double>> taylor_propagate(const SymmetricMatrix& h,
                                                          std::vector<std::complex<double>> psi, double t) {
  const std::size_t n = h.dim();
  const double scale = std::max(1.0, h.norm_inf() * std::abs(t));
  const auto steps = static_cast<int>(std::ceil(scale * 4.0));
  const double dt = t / steps;
  using cd = std::complex<double>;
  for (int s = 0; s < steps; ++s) {
    std::vector<cd> term = psi, out = psi;
    for (int k = 1; k < 40; ++k) {
      std::vector<cd> next(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        cd acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += h(i, j) * term[j];
        next[i] = acc * cd(0.0, -dt) / static_cast<double>(k);
      }
      term = next;
      for (std::size_t i = 0; i < n; ++i) out[i] += term[i];
    }
    psi = out;
  }
  return psi;
}

}  // namespace igs::oracle
