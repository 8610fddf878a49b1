#include "igs/disorder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "igs/errors.hpp"

namespace igs {

DisorderSpec::DisorderSpec(double amplitude, int n_realizations, std::uint64_t master_seed)
    : amplitude_(amplitude), n_realizations_(n_realizations), master_seed_(master_seed) {
  if (!(amplitude >= 0.0 && amplitude < 1.0)) {
    throw ValidationError("disorder amplitude must lie in [0, 1)");
  }
  if (n_realizations < 1) throw ValidationError("n_realizations must be >= 1");
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t realization_seed(std::uint64_t master_seed, int realization) noexcept {
  const auto counter = static_cast<std::uint64_t>(realization) + 1;
  return splitmix64(master_seed + 0x9E3779B97F4A7C15ULL * counter);
}

std::vector<double> sample_couplings(const MediumSpec& spec, const DisorderSpec& disorder, int realization) {
  if (realization < 0 || realization >= disorder.n_realizations()) {
    throw ValidationError("realization " + std::to_string(realization) + " outside [0, " +
                          std::to_string(disorder.n_realizations()) + ")");
  }
  std::mt19937_64 engine(realization_seed(disorder.master_seed(), realization));
  const double J = spec.hopping();
  const double delta = disorder.amplitude();
  std::vector<double> bonds(static_cast<std::size_t>(spec.n_sites() - 1));
  for (double& b : bonds) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    const double eps = 2.0 * u - 1.0;
    b = delta == 0.0 ? J : J * (1.0 + delta * eps);
  }
  return bonds;
}

SymmetricMatrix disordered_hamiltonian(const SystemSpec& sys, std::span<const double> couplings) {
  return full_hamiltonian(sys, couplings);
}

std::vector<double> realization_fidelity(const SystemSpec& sys, const DisorderSpec& disorder, int realization,
                                         std::span<const double> times) {
  const auto bonds = sample_couplings(sys.medium(), disorder, realization);
  try {
    const Propagator prop(disordered_hamiltonian(sys, bonds));
    return prop.transition_probability(sys.right_index(), sys.left_index(), times);
  } catch (const NumericalError& e) {
    throw NumericalError("realization " + std::to_string(realization) + ": " + e.what());
  }
}

EnsembleStats ensemble_fidelity(const SystemSpec& sys, const DisorderSpec& disorder, std::span<const double> times) {
  if (times.empty()) throw ValidationError("ensemble_fidelity needs a non-empty time grid");
  EnsembleStats stats;
  stats.realizations.reserve(static_cast<std::size_t>(disorder.n_realizations()));
  for (int r = 0; r < disorder.n_realizations(); ++r) {
    const auto f = realization_fidelity(sys, disorder, r, times);
    const auto peak = std::max_element(f.begin(), f.end());
    const auto at = static_cast<std::size_t>(peak - f.begin());
    stats.realizations.push_back({r, realization_seed(disorder.master_seed(), r), *peak, times[at]});
  }

  std::vector<double> peaks;
  peaks.reserve(stats.realizations.size());
  for (const auto& r : stats.realizations) peaks.push_back(r.peak_fidelity);
  stats.mean = std::accumulate(peaks.begin(), peaks.end(), 0.0) / static_cast<double>(peaks.size());
  std::sort(peaks.begin(), peaks.end());
  const std::size_t mid = peaks.size() / 2;
  stats.median = peaks.size() % 2 == 1 ? peaks[mid] : 0.5 * (peaks[mid - 1] + peaks[mid]);
  stats.min = peaks.front();
  stats.max = peaks.back();
  return stats;
}

}  // namespace igs
