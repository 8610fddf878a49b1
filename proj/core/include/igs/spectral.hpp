#pragma once

// Dense symmetric diagonalization and the closed-form solution of the medium.

#include <cstddef>
#include <span>
#include <vector>

#include "igs/model.hpp"

namespace igs {

enum class Parity { even, odd };

const char* to_string(Parity p) noexcept;

/// Full spectral decomposition H = V diag(eigenvalues) V^T.
///
/// Eigenvalues ascend. Eigenvectors are stored one per contiguous block
/// (column n of V is eigenvector(n)). Each eigenvector is normalized and its
/// largest-magnitude entry is positive; among entries tied in magnitude the
/// lowest index wins.
struct Spectrum {
  std::size_t dim = 0;
  std::vector<double> eigenvalues;
  std::vector<double> eigenvectors;  // dim * dim, eigenvector n at [n * dim, (n + 1) * dim)
  /// max_n ||H v_n - e_n v_n||_inf.
  double residual_bound = 0.0;

  std::span<const double> eigenvector(std::size_t n) const noexcept {
    return std::span<const double>(eigenvectors).subspan(n * dim, dim);
  }
  /// Component <site|v_n>.
  double component(std::size_t site, std::size_t n) const noexcept { return eigenvectors[n * dim + site]; }
};

/// Householder tridiagonalization followed by implicitly shifted QL.
/// Throws NumericalError if QL fails to converge or the residual exceeds
/// 1e-10 * ||H||_inf.
Spectrum eig_sym(const SymmetricMatrix& h);

/// Eigenvalues only (ascending), same algorithm without vector accumulation.
std::vector<double> eigenvalues_sym(const SymmetricMatrix& h);

/// <v, P v> with P the mirror reflection of the basis (+1 even, -1 odd).
double mirror_expectation(std::span<const double> v) noexcept;

/// Rotates eigenvectors inside clusters of eigenvalues closer than
/// `degeneracy_tol` so each is a parity eigenstate, then labels every level.
/// Requires a mirror-symmetric Hamiltonian.
std::vector<Parity> resolve_parity(Spectrum& spectrum, double degeneracy_tol = 1e-9);

/// Impurity bound state of the medium.
///
/// k0 and lambda0 are the infinite-chain values; amplitudes follow the
/// sinh(k0 j) profile with k0 from that closed form and are normalized by
/// direct summation. The exact finite-chain solution of
/// sinh(kappa) = xi tanh(kappa N0) is reported alongside.
struct BoundState {
  double k0 = 0.0;
  double lambda0 = 0.0;
  /// log of the approximate normalizer e^{2 k0 N0} (e^{2k0} + 1) / (4 (e^{2k0} - 1)).
  double log_omega_approx = 0.0;
  /// log of the exact normalizer sum_j sinh^2(k0 j') over the chain.
  double log_omega_exact = 0.0;
  double kappa_exact = 0.0;
  double lambda0_exact = 0.0;
  /// f_j for j = 1..N at indices 0..N-1.
  std::vector<double> amplitudes;

  /// f_{N0 - l} for 0 <= l <= N0 - 1.
  double amplitude_at_offset(int impurity_site, int l) const;
};

/// Requires mu0 > 0 and xi N0 > 1 (otherwise the finite chain has no bound state).
BoundState bound_state(const MediumSpec& spec);

/// True if the finite chain binds a state below the band (xi N0 > 1).
bool has_bound_state(const MediumSpec& spec) noexcept;

struct ScatteringMode {
  /// Branch index m in k = ((2m - 1) pi - 2 phi) / 2N0 for even modes, k = m pi / N0 for odd.
  int m = 0;
  double k = 0.0;
  double phi = 0.0;
  double energy = 0.0;
  Parity parity = Parity::even;
};

/// Even-parity extended modes. When a bound state exists the m = 1 branch is
/// the bound state and the branches returned are m = 2..N0; otherwise all
/// m = 1..N0 are real-k solutions.
std::vector<ScatteringMode> even_modes(const MediumSpec& spec);

/// Odd-parity modes k = m pi / N0, m = 1..N0-1; independent of mu0.
std::vector<ScatteringMode> odd_modes(const MediumSpec& spec);

/// |xi sin(k N0) - cos(k N0) sin k| / sqrt(1 + xi^2) for an even mode.
double even_mode_residual(const MediumSpec& spec, const ScatteringMode& mode) noexcept;

/// Normalized real amplitudes f_j, j = 1..N, of a scattering mode.
std::vector<double> mode_amplitudes(const MediumSpec& spec, const ScatteringMode& mode);

/// Full analytic medium spectrum (exact finite-chain bound state, even and
/// odd modes), sorted ascending.
std::vector<double> analytic_spectrum(const MediumSpec& spec);

struct GapReport {
  double thermodynamic = 0.0;  ///< 2J sqrt(xi^2 + 1) - 2J
  double finite_size = 0.0;    ///< 2J (sqrt(xi^2 + 1) - cos(pi / N0))
  double numeric = 0.0;        ///< e1 - e0 of the dense medium spectrum
};

GapReport gap(const MediumSpec& spec);

/// Lowest medium eigenvalue by dense diagonalization.
double numeric_ground_energy(const MediumSpec& spec);

}  // namespace igs
