#pragma once

// Tight-binding chain with a central impurity ("medium") and the full system
// with two terminal dots L and R attached symmetrically around the impurity.
//
// Units: hbar = 1, energies in units of the hopping J, times in 1/J.
//
// Basis ordering for the full system is fixed as [L, 1, 2, ..., N, R]:
//   index 0      -> L
//   index j      -> medium site j (1-based site label)
//   index N + 1  -> R
// Medium-only states use [1..N] stored at indices 0..N-1.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace igs {

/// N-site open chain with on-site energy -mu0 on the central site N0 = (N+1)/2.
class MediumSpec {
public:
  /// Throws ValidationError unless n_sites is odd and >= 3, hopping > 0 and
  /// impurity_strength >= 0.
  MediumSpec(int n_sites, double impurity_strength, double hopping = 1.0);

  int n_sites() const noexcept { return n_sites_; }
  double hopping() const noexcept { return hopping_; }
  double impurity_strength() const noexcept { return impurity_strength_; }
  /// 1-based label of the impurity site, always (N+1)/2.
  int impurity_site() const noexcept { return (n_sites_ + 1) / 2; }
  /// xi = mu0 / 2J.
  double xi() const noexcept { return impurity_strength_ / (2.0 * hopping_); }

private:
  int n_sites_;
  double impurity_strength_;
  double hopping_;
};

/// Medium plus terminal dots L, R coupled with J0 to sites N0 - l and N0 + l.
class SystemSpec {
public:
  /// Explicit terminal on-site energy -mu. Throws ValidationError unless
  /// 1 <= offset <= N0 - 1 and terminal_coupling >= 0.
  SystemSpec(MediumSpec medium, double terminal_coupling, int offset, double terminal_onsite);

  /// Terminal on-site energy tuned onto the bound state (-mu = lambda0).
  static SystemSpec resonant(MediumSpec medium, double terminal_coupling, int offset);
  /// Same as resonant() but parameterized by the transfer distance d = 2l + 1.
  static SystemSpec resonant_at_distance(MediumSpec medium, double terminal_coupling, int distance);

  const MediumSpec& medium() const noexcept { return medium_; }
  double terminal_coupling() const noexcept { return terminal_coupling_; }
  int offset() const noexcept { return offset_; }
  /// mu; the diagonal entries at L and R are -mu.
  double terminal_onsite() const noexcept { return terminal_onsite_; }
  int transfer_distance() const noexcept { return 2 * offset_ + 1; }
  /// Dimension of the full single-particle space, N + 2.
  std::size_t dim() const noexcept { return static_cast<std::size_t>(medium_.n_sites()) + 2; }

  /// Basis indices of the terminal dots and the two connection sites.
  std::size_t left_index() const noexcept { return 0; }
  std::size_t right_index() const noexcept { return dim() - 1; }
  std::size_t left_contact_index() const noexcept;
  std::size_t right_contact_index() const noexcept;

private:
  MediumSpec medium_;
  double terminal_coupling_;
  int offset_;
  double terminal_onsite_;
};

/// Distance d = 2l + 1 to offset l. Throws ValidationError for even or non-positive d.
int offset_from_distance(int distance);

/// Dense real symmetric matrix. Every write updates (i, j) and (j, i)
/// together, so the storage is exactly symmetric by construction.
class SymmetricMatrix {
public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, double value) noexcept;
  void add(std::size_t i, std::size_t j, double value) noexcept;

  /// Row-major view over all dim * dim entries.
  std::span<const double> data() const noexcept { return data_; }
  /// Row i as a contiguous view.
  std::span<const double> row(std::size_t i) const noexcept {
    return std::span<const double>(data_).subspan(i * dim_, dim_);
  }
  /// Maximum absolute row sum.
  double norm_inf() const noexcept;

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// Complex amplitudes over one of the fixed orthonormal bases.
class StateVector {
public:
  using value_type = std::complex<double>;

  StateVector() = default;
  explicit StateVector(std::size_t dim) : amplitudes_(dim) {}
  explicit StateVector(std::vector<value_type> amplitudes) : amplitudes_(std::move(amplitudes)) {}

  /// Unit vector on one basis index.
  static StateVector basis(std::size_t dim, std::size_t index);
  /// Real amplitudes promoted to complex.
  static StateVector from_real(std::span<const double> amplitudes);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  value_type& operator[](std::size_t i) noexcept { return amplitudes_[i]; }
  const value_type& operator[](std::size_t i) const noexcept { return amplitudes_[i]; }
  std::span<const value_type> amplitudes() const noexcept { return amplitudes_; }
  std::span<value_type> amplitudes() noexcept { return amplitudes_; }

  double norm() const noexcept;
  /// <this|other>.
  value_type inner(const StateVector& other) const;

private:
  std::vector<value_type> amplitudes_;
};

/// N x N medium Hamiltonian: -J on nearest-neighbour bonds, -mu0 at N0, open ends.
SymmetricMatrix medium_hamiltonian(const MediumSpec& spec);

/// Same with an explicit list of N - 1 bond hoppings J_j (bond j connects j and j+1).
SymmetricMatrix medium_hamiltonian(const MediumSpec& spec, std::span<const double> bond_hoppings);

/// (N+2) x (N+2) Hamiltonian over [L, 1..N, R].
SymmetricMatrix full_hamiltonian(const SystemSpec& sys);

/// Full Hamiltonian with explicit medium bond hoppings; terminal terms unchanged.
SymmetricMatrix full_hamiltonian(const SystemSpec& sys, std::span<const double> bond_hoppings);

/// mu such that -mu equals the thermodynamic bound-state energy -2J sqrt(xi^2 + 1).
double resonant_mu(const MediumSpec& spec);

/// Index permutation of the mirror reflection j <-> N + 1 - j on a basis of
/// size dim; for the full system this also swaps L and R.
std::size_t mirror_index(std::size_t dim, std::size_t index) noexcept;

}  // namespace igs
