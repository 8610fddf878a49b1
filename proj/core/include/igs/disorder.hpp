#pragma once

// Static bond disorder J_j = J (1 + delta eps_j), eps_j ~ U[-1, 1), and the
// resulting transfer-fidelity statistics.
//
// Random stream, pinned for portability:
//   seed_r = splitmix64(master_seed + 0x9E3779B97F4A7C15 * (r + 1))
//   engine = std::mt19937_64(seed_r)   (output sequence fixed by the C++ standard)
//   eps_j  = 2 * ((x >> 11) * 2^-53) - 1 for successive engine outputs x
// No std::*_distribution is involved, so draws are identical on every
// standard library.

#include <cstdint>
#include <span>
#include <vector>

#include "igs/dynamics.hpp"
#include "igs/model.hpp"

namespace igs {

inline constexpr const char* kDisorderRngScheme = "splitmix64-counter/mt19937_64/u53 v1";

class DisorderSpec {
public:
  /// Throws ValidationError unless 0 <= amplitude < 1 and n_realizations >= 1.
  DisorderSpec(double amplitude, int n_realizations, std::uint64_t master_seed);

  double amplitude() const noexcept { return amplitude_; }
  int n_realizations() const noexcept { return n_realizations_; }
  std::uint64_t master_seed() const noexcept { return master_seed_; }

private:
  double amplitude_;
  int n_realizations_;
  std::uint64_t master_seed_;
};

/// SplitMix64 output function.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Per-realization seed derived from (master_seed, realization).
std::uint64_t realization_seed(std::uint64_t master_seed, int realization) noexcept;

/// N - 1 disordered bond hoppings for one realization.
std::vector<double> sample_couplings(const MediumSpec& spec, const DisorderSpec& disorder, int realization);

/// Full Hamiltonian with disordered medium bonds; J0, mu and mu0 stay clean.
SymmetricMatrix disordered_hamiltonian(const SystemSpec& sys, std::span<const double> couplings);

struct RealizationResult {
  int realization = 0;
  std::uint64_t seed = 0;
  double peak_fidelity = 0.0;
  double peak_time = 0.0;
};

struct EnsembleStats {
  std::vector<RealizationResult> realizations;  ///< ordered by realization index
  double mean = 0.0;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/// F(t) = |<R|exp(-iH't)|L>|^2 for a single realization.
std::vector<double> realization_fidelity(const SystemSpec& sys, const DisorderSpec& disorder, int realization,
                                         std::span<const double> times);

/// Peak fidelity on the time grid for every realization, then aggregates.
/// Diagonalization failures are rethrown as NumericalError naming the realization.
EnsembleStats ensemble_fidelity(const SystemSpec& sys, const DisorderSpec& disorder, std::span<const double> times);

}  // namespace igs
