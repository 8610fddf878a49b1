#include "igs/effective.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "igs/errors.hpp"

namespace igs {

namespace {

constexpr double kDegenerateTripletTol = 1e-12;

void check_offset(const MediumSpec& spec, int l) {
  if (l < 0 || l > spec.impurity_site() - 1) {
    throw ValidationError("offset l = " + std::to_string(l) + " outside [0, " +
                          std::to_string(spec.impurity_site() - 1) + "]");
  }
}

double amplitude_at(const MediumSpec& spec, const ScatteringMode& mode, int l) {
  const auto f = mode_amplitudes(spec, mode);
  return f[static_cast<std::size_t>(spec.impurity_site() - l - 1)];
}

}  // namespace

double zeta(const MediumSpec& spec, int n, int l) {
  check_offset(spec, l);
  if (n < 0 || n >= spec.n_sites()) {
    throw ValidationError("mode index n = " + std::to_string(n) + " outside [0, " +
                          std::to_string(spec.n_sites() - 1) + "]");
  }
  if (n == 0) return bound_state(spec).amplitude_at_offset(spec.impurity_site(), l);
  if (!has_bound_state(spec)) throw ValidationError("zeta requires a medium with a bound state");
  if (n % 2 == 1) {
    const auto modes = odd_modes(spec);
    return amplitude_at(spec, modes[static_cast<std::size_t>((n - 1) / 2)], l);
  }
  // Even n = 2m sits on even branch m + 1 once the m = 1 branch has bound.
  const auto modes = even_modes(spec);
  return amplitude_at(spec, modes[static_cast<std::size_t>(n / 2 - 1)], l);
}

double EffectiveModel::level_spacing() const noexcept { return std::numbers::sqrt2 * std::abs(jeff); }

std::optional<double> EffectiveModel::transfer_time() const noexcept {
  const double delta = level_spacing();
  if (delta == 0.0) return std::nullopt;
  return std::numbers::pi / delta;
}

EffectiveModel make_effective_model(double jeff, double mu) {
  EffectiveModel model;
  model.jeff = jeff;
  model.mu = mu;
  model.h3 = SymmetricMatrix(3);
  for (std::size_t i = 0; i < 3; ++i) model.h3.set(i, i, -mu);
  model.h3.set(0, 1, -jeff);
  model.h3.set(2, 1, -jeff);
  return model;
}

EffectiveModel effective_model(const SystemSpec& sys) {
  const auto& medium = sys.medium();
  const double zeta0 = bound_state(medium).amplitude_at_offset(medium.impurity_site(), sys.offset());
  EffectiveModel model = make_effective_model(sys.terminal_coupling() * zeta0, sys.terminal_onsite());
  const double xi = medium.xi();
  const double thermodynamic_gap = 2.0 * medium.hopping() * (std::sqrt(xi * xi + 1.0) - 1.0);
  model.weak_coupling = sys.terminal_coupling() < thermodynamic_gap;
  return model;
}

double jeff_numeric(const SystemSpec& sys) {
  const auto levels = eigenvalues_sym(full_hamiltonian(sys));
  return (levels[1] - levels[0]) / std::numbers::sqrt2;
}

SecondOrderShift second_order_shift(const SystemSpec& sys) {
  const auto& medium = sys.medium();
  const double j0 = sys.terminal_coupling();
  const double energy = -sys.terminal_onsite();
  const int l = sys.offset();
  SecondOrderShift shift;
  if (j0 == 0.0) return shift;

  for (const auto& mode : odd_modes(medium)) {
    const double z = amplitude_at(medium, mode, l);
    shift.antisymmetric += j0 * j0 * z * z / (energy - mode.energy);
  }
  for (const auto& mode : even_modes(medium)) {
    const double z = amplitude_at(medium, mode, l);
    shift.symmetric += j0 * j0 * z * z / (energy - mode.energy);
  }
  return shift;
}

std::array<StateVector, 3> quasi_angular_basis(const EffectiveModel&) {
  const double r2 = std::numbers::sqrt2;
  std::array<double, 3> plus{0.5, r2 / 2.0, 0.5};
  std::array<double, 3> zero{1.0 / r2, 0.0, -1.0 / r2};
  std::array<double, 3> minus{0.5, -r2 / 2.0, 0.5};
  return {StateVector::from_real(plus), StateVector::from_real(zero), StateVector::from_real(minus)};
}

StateVector embed_effective_state(const StateVector& state3, const BoundState& bound) {
  const std::size_t n = bound.amplitudes.size();
  StateVector out(n + 2);
  out[0] = state3[0];
  for (std::size_t j = 0; j < n; ++j) out[j + 1] = state3[1] * bound.amplitudes[j];
  out[n + 1] = state3[2];
  return out;
}

OverlapReport overlap_report(const SystemSpec& sys) {
  return overlap_report(sys, eig_sym(full_hamiltonian(sys)), bound_state(sys.medium()));
}

OverlapReport overlap_report(const SystemSpec& sys, const Spectrum& full_spectrum, const BoundState& bound) {
  const std::size_t dim = sys.dim();
  if (full_spectrum.dim != dim || bound.amplitudes.size() + 2 != dim) {
    throw ValidationError("spectrum or bound state does not match the system dimension");
  }
  const auto model = make_effective_model(0.0, sys.terminal_onsite());
  const auto basis3 = quasi_angular_basis(model);
  constexpr std::array<int, 3> labels{1, 0, -1};

  std::array<StateVector, 3> ideals{embed_effective_state(basis3[0], bound), embed_effective_state(basis3[1], bound),
                                    embed_effective_state(basis3[2], bound)};
  std::array<std::vector<double>, 3> states;
  for (std::size_t s = 0; s < 3; ++s) {
    const auto v = full_spectrum.eigenvector(s);
    states[s].assign(v.begin(), v.end());
  }
  // A degenerate triplet (J0 = 0) has no preferred basis; use the zero-coupling
  // limit, i.e. the ideal states projected onto the triplet, orthonormalized in order.
  const auto& e = full_spectrum.eigenvalues;
  if (e[2] - e[0] <= kDegenerateTripletTol * std::max(1.0, std::abs(e[0]))) {
    std::array<std::vector<double>, 3> rotated;
    for (std::size_t s = 0; s < 3; ++s) {
      std::vector<double> w(dim, 0.0);
      for (std::size_t a = 0; a < 3; ++a) {
        double c = 0.0;
        for (std::size_t i = 0; i < dim; ++i) c += states[a][i] * ideals[s][i].real();
        for (std::size_t i = 0; i < dim; ++i) w[i] += c * states[a][i];
      }
      for (std::size_t b = 0; b < s; ++b) {
        double c = 0.0;
        for (std::size_t i = 0; i < dim; ++i) c += rotated[b][i] * w[i];
        for (std::size_t i = 0; i < dim; ++i) w[i] -= c * rotated[b][i];
      }
      double norm = 0.0;
      for (double x : w) norm += x * x;
      norm = std::sqrt(norm);
      if (norm == 0.0) throw NumericalError("degenerate triplet does not contain the ideal states");
      for (double& x : w) x /= norm;
      rotated[s] = std::move(w);
    }
    states = std::move(rotated);
  }

  OverlapReport report;
  report.d = sys.transfer_distance();
  for (std::size_t s = 0; s < 3; ++s) {
    const auto& psi = states[s];
    double c0 = 0.0;
    for (std::size_t j = 0; j + 2 < dim; ++j) c0 += bound.amplitudes[j] * psi[j + 1];
    double overlap = 0.0;
    for (std::size_t i = 0; i < dim; ++i) overlap += ideals[s][i].real() * psi[i];

    auto& out = report.states[s];
    out.m = labels[s];
    out.cL2 = psi[sys.left_index()] * psi[sys.left_index()];
    out.cR2 = psi[sys.right_index()] * psi[sys.right_index()];
    out.c02 = c0 * c0;
    out.P = overlap * overlap;
  }
  if (dim > 3) {
    report.subspace_isolated = (e[3] - e[2]) >= 10.0 * std::max(e[1] - e[0], e[2] - e[1]);
  }
  return report;
}

}  // namespace igs
