#include "igs/dynamics.hpp"

#include <cmath>
#include <string>

#include "igs/errors.hpp"

namespace igs {

namespace {

void check_times(std::span<const double> times) {
  for (double t : times) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw ValidationError("times must be finite and >= 0");
  }
}

}  // namespace

Propagator::Propagator(const SymmetricMatrix& h) : spectrum_(eig_sym(h)) {}

StateVector Propagator::evolve(const StateVector& psi0, double t) const {
  const std::size_t n = spectrum_.dim;
  if (psi0.dim() != n) {
    throw ValidationError("state dimension " + std::to_string(psi0.dim()) + " does not match Hamiltonian " +
                          std::to_string(n));
  }
  // exp(0) is the identity exactly; skip the rounding of V V^T.
  if (t == 0.0) return psi0;
  // c_k = <v_k|psi0>, then psi(t) = sum_k exp(-i e_k t) c_k v_k.
  StateVector out(n);
  auto amps = out.amplitudes();
  const auto in = psi0.amplitudes();
  for (std::size_t k = 0; k < n; ++k) {
    const auto v = spectrum_.eigenvector(k);
    std::complex<double> c = 0.0;
    for (std::size_t i = 0; i < n; ++i) c += v[i] * in[i];
    const double phase = -spectrum_.eigenvalues[k] * t;
    c *= std::complex<double>(std::cos(phase), std::sin(phase));
    for (std::size_t i = 0; i < n; ++i) amps[i] += c * v[i];
  }
  return out;
}

std::complex<double> Propagator::transition_amplitude(std::size_t target, std::size_t source, double t) const {
  if (target >= spectrum_.dim || source >= spectrum_.dim) throw ValidationError("basis index outside the Hamiltonian");
  if (t == 0.0) return target == source ? 1.0 : 0.0;
  std::complex<double> a = 0.0;
  for (std::size_t k = 0; k < spectrum_.dim; ++k) {
    const double w = spectrum_.component(target, k) * spectrum_.component(source, k);
    const double phase = -spectrum_.eigenvalues[k] * t;
    a += w * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return a;
}

std::vector<double> Propagator::transition_probability(std::size_t target, std::size_t source,
                                                       std::span<const double> times) const {
  check_times(times);
  const std::size_t n = spectrum_.dim;
  if (target >= n || source >= n) throw ValidationError("basis index outside the Hamiltonian");
  std::vector<double> weights(n);
  for (std::size_t k = 0; k < n; ++k) weights[k] = spectrum_.component(target, k) * spectrum_.component(source, k);

  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    if (t == 0.0) {
      out.push_back(target == source ? 1.0 : 0.0);
      continue;
    }
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double phase = spectrum_.eigenvalues[k] * t;
      re += weights[k] * std::cos(phase);
      im -= weights[k] * std::sin(phase);
    }
    out.push_back(re * re + im * im);
  }
  return out;
}

Trajectory evolve(const SymmetricMatrix& h, const StateVector& psi0, std::span<const double> times) {
  check_times(times);
  if (psi0.dim() != h.dim()) throw ValidationError("state dimension does not match Hamiltonian");
  return evolve(Propagator(h), psi0, times);
}

Trajectory evolve(const Propagator& propagator, const StateVector& psi0, std::span<const double> times) {
  check_times(times);
  Trajectory traj;
  traj.times.assign(times.begin(), times.end());
  traj.fidelity.reserve(times.size());
  traj.amplitude_L.reserve(times.size());
  traj.amplitude_R.reserve(times.size());
  const double norm0 = psi0.norm();
  for (double t : times) {
    const StateVector psi = propagator.evolve(psi0, t);
    const auto last = psi[psi.dim() - 1];
    traj.amplitude_L.push_back(psi[0]);
    traj.amplitude_R.push_back(last);
    traj.fidelity.push_back(std::norm(last));
    traj.norm_drift = std::max(traj.norm_drift, std::abs(psi.norm() - norm0));
  }
  return traj;
}

double fidelity_analytic(const EffectiveModel& model, double t) noexcept {
  const double s = std::sin(0.5 * model.level_spacing() * t);
  return s * s * s * s;
}

Trajectory fidelity_exact(const SystemSpec& sys, std::span<const double> times) {
  return evolve(full_hamiltonian(sys), StateVector::basis(sys.dim(), sys.left_index()), times);
}

std::optional<double> transfer_time(const EffectiveModel& model) noexcept { return model.transfer_time(); }

std::vector<double> uniform_time_grid(double t_max, std::size_t points) {
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw ValidationError("t_max must be finite and >= 0");
  if (points < 2) throw ValidationError("a time grid needs at least 2 points");
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i)
    grid[i] = t_max * static_cast<double>(i) / static_cast<double>(points - 1);
  return grid;
}

}  // namespace igs
