// Closed-form eigenstates of the open chain with a central impurity.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "igs/errors.hpp"
#include "igs/spectral.hpp"

namespace igs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kFixedPointCap = 10000;
constexpr double kFixedPointStep = 1e-14;
constexpr double kEvenResidualTolerance = 1e-12;

// sinh(a) / sinh(b) for 0 < a <= b, without overflow.
double sinh_ratio(double a, double b) {
  return std::exp(a - b) * (std::expm1(-2.0 * a) / std::expm1(-2.0 * b));
}

// log sinh(x) for x > 0.
double log_sinh(double x) { return x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0); }

// Distance of 1-based site j from the nearer open end, as used by the
// mirror-symmetric ansatz: j for j <= N0, N + 1 - j otherwise.
int folded(int j, int n_sites, int n0) { return j <= n0 ? j : n_sites + 1 - j; }

// Scaled by 1 / sqrt(1 + xi^2) so the tolerance means the same for weak and
// strong impurities.
double even_residual(double xi, int n0, double k) {
  return (xi * std::sin(k * n0) - std::cos(k * n0) * std::sin(k)) / std::sqrt(1.0 + xi * xi);
}

double even_residual_derivative(double xi, int n0, double k) {
  const double kn = k * n0;
  return (xi * n0 * std::cos(kn) + n0 * std::sin(kn) * std::sin(k) - std::cos(kn) * std::cos(k)) /
         std::sqrt(1.0 + xi * xi);
}

ScatteringMode solve_even_branch(const MediumSpec& spec, int m) {
  const double xi = spec.xi();
  const int n0 = spec.impurity_site();
  const double base = (2.0 * m - 1.0) * kPi;

  double phi = 0.0;
  double k = base / (2.0 * n0);
  bool converged = false;
  for (int it = 0; it < kFixedPointCap; ++it) {
    phi = std::atan(xi / std::sin(k));
    const double next = (base - 2.0 * phi) / (2.0 * n0);
    const double step = std::abs(next - k);
    k = next;
    if (step < kFixedPointStep) {
      converged = true;
      break;
    }
  }
  if (!converged || !(k > 0.0 && k < kPi)) {
    throw NumericalError("even-mode fixed point did not converge on branch m = " + std::to_string(m));
  }

  // The fixed point stops at |dk| ~ 1e-14; Newton on the transcendental
  // residual itself removes the remaining N0-amplified error.
  for (int it = 0; it < 3; ++it) {
    const double r = even_residual(xi, n0, k);
    if (std::abs(r) <= 0.25 * kEvenResidualTolerance) break;
    const double dr = even_residual_derivative(xi, n0, k);
    if (dr == 0.0) break;
    k -= r / dr;
  }
  phi = std::atan(xi / std::sin(k));

  ScatteringMode mode{m, k, phi, -2.0 * spec.hopping() * std::cos(k), Parity::even};
  if (even_mode_residual(spec, mode) > kEvenResidualTolerance) {
    throw NumericalError("even-mode residual above tolerance on branch m = " + std::to_string(m));
  }
  return mode;
}

}  // namespace

const char* to_string(Parity p) noexcept { return p == Parity::even ? "even" : "odd"; }

double mirror_expectation(std::span<const double> v) noexcept {
  const std::size_t n = v.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += v[i] * v[n - 1 - i];
  return s;
}

std::vector<Parity> resolve_parity(Spectrum& spectrum, double degeneracy_tol) {
  const std::size_t n = spectrum.dim;
  std::size_t begin = 0;
  while (begin < n) {
    std::size_t end = begin + 1;
    while (end < n && spectrum.eigenvalues[end] - spectrum.eigenvalues[end - 1] < degeneracy_tol) ++end;
    const std::size_t size = end - begin;
    if (size > 1) {
      // Diagonalize the reflection inside the near-degenerate block.
      SymmetricMatrix block(size);
      for (std::size_t a = 0; a < size; ++a) {
        const auto va = spectrum.eigenvector(begin + a);
        for (std::size_t b = a; b < size; ++b) {
          const auto vb = spectrum.eigenvector(begin + b);
          double s = 0.0;
          for (std::size_t i = 0; i < n; ++i) s += va[i] * vb[n - 1 - i];
          block.set(a, b, s);
        }
      }
      const Spectrum rot = eig_sym(block);
      std::vector<double> rotated(size * n, 0.0);
      for (std::size_t c = 0; c < size; ++c)
        for (std::size_t a = 0; a < size; ++a) {
          const double u = rot.component(a, c);
          const auto va = spectrum.eigenvector(begin + a);
          for (std::size_t i = 0; i < n; ++i) rotated[c * n + i] += u * va[i];
        }
      std::copy(rotated.begin(), rotated.end(),
                spectrum.eigenvectors.begin() + static_cast<std::ptrdiff_t>(begin * n));
    }
    begin = end;
  }

  std::vector<Parity> labels(n);
  for (std::size_t k = 0; k < n; ++k)
    labels[k] = mirror_expectation(spectrum.eigenvector(k)) >= 0.0 ? Parity::even : Parity::odd;
  return labels;
}

bool has_bound_state(const MediumSpec& spec) noexcept {
  return spec.xi() * spec.impurity_site() > 1.0;
}

double BoundState::amplitude_at_offset(int impurity_site, int l) const {
  if (l < 0 || l > impurity_site - 1) {
    throw ValidationError("offset " + std::to_string(l) + " outside [0, " + std::to_string(impurity_site - 1) + "]");
  }
  return amplitudes[static_cast<std::size_t>(impurity_site - l - 1)];
}

BoundState bound_state(const MediumSpec& spec) {
  if (!(spec.impurity_strength() > 0.0)) {
    throw ValidationError("bound state requires mu0 > 0");
  }
  if (!has_bound_state(spec)) {
    throw ValidationError("no bound state: xi * N0 = " + std::to_string(spec.xi() * spec.impurity_site()) +
                          " <= 1 for this chain length");
  }
  const double xi = spec.xi();
  const double J = spec.hopping();
  const int n = spec.n_sites();
  const int n0 = spec.impurity_site();

  BoundState b;
  b.k0 = std::asinh(xi);
  b.lambda0 = -2.0 * J * std::sqrt(xi * xi + 1.0);

  b.amplitudes.resize(static_cast<std::size_t>(n));
  const double peak = b.k0 * n0;
  double sum = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double a = sinh_ratio(b.k0 * folded(j, n, n0), peak);
    b.amplitudes[static_cast<std::size_t>(j - 1)] = a;
    sum += a * a;
  }
  const double scale = 1.0 / std::sqrt(sum);
  for (double& a : b.amplitudes) a *= scale;

  b.log_omega_exact = 2.0 * log_sinh(peak) + std::log(sum);
  b.log_omega_approx = 2.0 * peak + std::log(std::exp(2.0 * b.k0) + 1.0) - std::log(4.0) - std::log(std::expm1(2.0 * b.k0));

  // Finite chain: sinh(kappa) = xi tanh(kappa N0) has one root in (0, k0].
  auto g = [&](double kappa) { return std::sinh(kappa) - xi * std::tanh(kappa * n0); };
  double lo = 0.0;
  double hi = b.k0;
  if (g(hi) <= 0.0) {
    lo = hi;
  } else {
    for (int it = 0; it < 200 && hi - lo > 1e-17 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) > 0.0 ? hi : lo) = mid;
    }
  }
  b.kappa_exact = 0.5 * (lo + hi);
  b.lambda0_exact = -2.0 * J * std::cosh(b.kappa_exact);
  return b;
}

std::vector<ScatteringMode> even_modes(const MediumSpec& spec) {
  const int n0 = spec.impurity_site();
  const int first = has_bound_state(spec) ? 2 : 1;
  std::vector<ScatteringMode> modes;
  modes.reserve(static_cast<std::size_t>(n0));
  for (int m = first; m <= n0; ++m) modes.push_back(solve_even_branch(spec, m));
  return modes;
}

std::vector<ScatteringMode> odd_modes(const MediumSpec& spec) {
  const int n0 = spec.impurity_site();
  std::vector<ScatteringMode> modes;
  modes.reserve(static_cast<std::size_t>(n0 - 1));
  for (int m = 1; m <= n0 - 1; ++m) {
    const double k = m * kPi / n0;
    modes.push_back({m, k, 0.0, -2.0 * spec.hopping() * std::cos(k), Parity::odd});
  }
  return modes;
}

double even_mode_residual(const MediumSpec& spec, const ScatteringMode& mode) noexcept {
  return std::abs(even_residual(spec.xi(), spec.impurity_site(), mode.k));
}

std::vector<double> mode_amplitudes(const MediumSpec& spec, const ScatteringMode& mode) {
  const int n = spec.n_sites();
  const int n0 = spec.impurity_site();
  std::vector<double> f(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    double v = std::sin(mode.k * folded(j, n, n0));
    if (mode.parity == Parity::odd && j > n0) v = -v;
    if (mode.parity == Parity::odd && j == n0) v = 0.0;
    f[static_cast<std::size_t>(j - 1)] = v;
  }
  double sum = 0.0;
  for (double v : f) sum += v * v;
  const double scale = 1.0 / std::sqrt(sum);
  for (double& v : f) v *= scale;
  return f;
}

std::vector<double> analytic_spectrum(const MediumSpec& spec) {
  std::vector<double> levels;
  levels.reserve(static_cast<std::size_t>(spec.n_sites()));
  if (has_bound_state(spec)) levels.push_back(bound_state(spec).lambda0_exact);
  for (const auto& m : even_modes(spec)) levels.push_back(m.energy);
  for (const auto& m : odd_modes(spec)) levels.push_back(m.energy);
  std::sort(levels.begin(), levels.end());
  return levels;
}

GapReport gap(const MediumSpec& spec) {
  const double xi = spec.xi();
  const double J = spec.hopping();
  const double root = std::sqrt(xi * xi + 1.0);
  GapReport g;
  g.thermodynamic = 2.0 * J * root - 2.0 * J;
  g.finite_size = 2.0 * J * (root - std::cos(kPi / spec.impurity_site()));
  const auto levels = eigenvalues_sym(medium_hamiltonian(spec));
  g.numeric = levels.at(1) - levels.at(0);
  return g;
}

double numeric_ground_energy(const MediumSpec& spec) { return eigenvalues_sym(medium_hamiltonian(spec)).front(); }

}  // namespace igs
