#pragma once

// Three-level reduction of the full system onto {|L>, |lambda0>, |R>}.

#include <array>
#include <optional>

#include "igs/model.hpp"
#include "igs/spectral.hpp"

namespace igs {

/// Amplitude zeta_n(l) = <N0 - l | lambda_n> of the n-th medium eigenstate
/// (energy order: n = 0 bound state, odd n odd modes, even n >= 2 even
/// scattering modes). Requires a bound state; 0 <= l <= N0 - 1, 0 <= n < N.
double zeta(const MediumSpec& spec, int n, int l);

struct EffectiveModel {
  double jeff = 0.0;
  double mu = 0.0;
  /// Basis (|L>, |lambda0>, |R>).
  SymmetricMatrix h3;
  /// J0 below the thermodynamic gap; the reduction is only trusted then.
  bool weak_coupling = true;

  double level_spacing() const noexcept;
  /// pi / level_spacing, empty when J_eff = 0.
  std::optional<double> transfer_time() const noexcept;
};

/// Builds the model from J_eff = J0 zeta_0(l). Never refuses strong coupling;
/// it clears weak_coupling instead.
EffectiveModel effective_model(const SystemSpec& sys);

/// Three-level model from explicit J_eff and mu.
EffectiveModel make_effective_model(double jeff, double mu);

/// (E1 - E0) / sqrt(2) from the dense full-system spectrum.
double jeff_numeric(const SystemSpec& sys);

struct SecondOrderShift {
  double symmetric = 0.0;      ///< even n, couples (|L> + |R>)
  double antisymmetric = 0.0;  ///< odd n, couples (|L> - |R>)
};

/// sum_{n >= 1} J0^2 |zeta_n|^2 / (E - lambda_n) at E = -mu, split by parity of n.
SecondOrderShift second_order_shift(const SystemSpec& sys);

/// {|1,1>, |1,0>, |1,-1>} over (|L>, |lambda0>, |R>).
std::array<StateVector, 3> quasi_angular_basis(const EffectiveModel& model);

struct StateOverlap {
  int m = 0;
  double cL2 = 0.0;
  double c02 = 0.0;
  double cR2 = 0.0;
  double P = 0.0;
};

struct OverlapReport {
  int d = 0;
  /// Ground, first and second excited states labelled m = 1, 0, -1.
  std::array<StateOverlap, 3> states;
  /// Lowest three levels separated from the fourth by >= 10x their internal spacing.
  bool subspace_isolated = true;
};

/// Overlaps of the three lowest full-system eigenstates with the
/// quasi-angular states, |lambda0> embedded with zero weight on L and R.
OverlapReport overlap_report(const SystemSpec& sys);

/// Same computation from an already diagonalized full Hamiltonian.
OverlapReport overlap_report(const SystemSpec& sys, const Spectrum& full_spectrum, const BoundState& bound);

/// Embeds a state over (|L>, |lambda0>, |R>) into the (N+2)-dim basis.
StateVector embed_effective_state(const StateVector& state3, const BoundState& bound);

}  // namespace igs
