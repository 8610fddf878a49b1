#pragma once

// Single-particle time evolution through the spectral decomposition
// psi(t) = V exp(-i Lambda t) V^T psi0. The overall phase is never tracked;
// every observable is a modulus squared.

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "igs/effective.hpp"
#include "igs/model.hpp"
#include "igs/spectral.hpp"

namespace igs {

struct Trajectory {
  std::vector<double> times;
  /// |<last basis state|psi(t)>|^2 (the receiver R for the full system and for h3).
  std::vector<double> fidelity;
  std::vector<std::complex<double>> amplitude_L;
  std::vector<std::complex<double>> amplitude_R;
  double norm_drift = 0.0;
};

/// Reusable propagator holding one diagonalization.
class Propagator {
public:
  explicit Propagator(const SymmetricMatrix& h);
  explicit Propagator(Spectrum spectrum) : spectrum_(std::move(spectrum)) {}

  const Spectrum& spectrum() const noexcept { return spectrum_; }

  /// exp(-iHt) psi0.
  StateVector evolve(const StateVector& psi0, double t) const;
  /// <target| exp(-iHt) |source> for basis states.
  std::complex<double> transition_amplitude(std::size_t target, std::size_t source, double t) const;
  /// |<target| exp(-iHt) |source>|^2 on a whole grid, O(dim) per time.
  std::vector<double> transition_probability(std::size_t target, std::size_t source,
                                              std::span<const double> times) const;

private:
  Spectrum spectrum_;
};

/// Evolves psi0 on every time; throws ValidationError for dimension mismatch
/// or negative times.
Trajectory evolve(const SymmetricMatrix& h, const StateVector& psi0, std::span<const double> times);
Trajectory evolve(const Propagator& propagator, const StateVector& psi0, std::span<const double> times);

/// sin^4(delta t / 2), delta = sqrt(2) |J_eff|.
double fidelity_analytic(const EffectiveModel& model, double t) noexcept;

/// |L> evolved under the full (N+2)-site Hamiltonian.
Trajectory fidelity_exact(const SystemSpec& sys, std::span<const double> times);

/// tau = pi / (sqrt(2) J_eff); complete transfer recurs at odd multiples of tau.
/// Empty when J_eff = 0.
std::optional<double> transfer_time(const EffectiveModel& model) noexcept;

/// `points` uniformly spaced times on [0, t_max], both ends included.
std::vector<double> uniform_time_grid(double t_max, std::size_t points);

}  // namespace igs
