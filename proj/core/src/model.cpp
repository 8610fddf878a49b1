#include "igs/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "igs/errors.hpp"

namespace igs {

MediumSpec::MediumSpec(int n_sites, double impurity_strength, double hopping)
    : n_sites_(n_sites), impurity_strength_(impurity_strength), hopping_(hopping) {
  if (n_sites < 3 || n_sites % 2 == 0) {
    throw ValidationError("n_sites must be odd and >= 3, got " + std::to_string(n_sites));
  }
  if (!(hopping > 0.0) || !std::isfinite(hopping)) {
    throw ValidationError("hopping must be positive and finite");
  }
  if (!(impurity_strength >= 0.0) || !std::isfinite(impurity_strength)) {
    throw ValidationError("impurity_strength must be >= 0 and finite");
  }
}

SystemSpec::SystemSpec(MediumSpec medium, double terminal_coupling, int offset, double terminal_onsite)
    : medium_(medium),
      terminal_coupling_(terminal_coupling),
      offset_(offset),
      terminal_onsite_(terminal_onsite) {
  const int n0 = medium_.impurity_site();
  if (offset < 1 || offset > n0 - 1) {
    throw ValidationError("offset l must lie in [1, " + std::to_string(n0 - 1) + "], got " +
                          std::to_string(offset));
  }
  if (!(terminal_coupling >= 0.0) || !std::isfinite(terminal_coupling)) {
    throw ValidationError("terminal_coupling must be >= 0 and finite");
  }
  if (!std::isfinite(terminal_onsite)) {
    throw ValidationError("terminal_onsite must be finite");
  }
}

SystemSpec SystemSpec::resonant(MediumSpec medium, double terminal_coupling, int offset) {
  return SystemSpec(medium, terminal_coupling, offset, resonant_mu(medium));
}

SystemSpec SystemSpec::resonant_at_distance(MediumSpec medium, double terminal_coupling, int distance) {
  return resonant(medium, terminal_coupling, offset_from_distance(distance));
}

std::size_t SystemSpec::left_contact_index() const noexcept {
  return static_cast<std::size_t>(medium_.impurity_site() - offset_);
}

std::size_t SystemSpec::right_contact_index() const noexcept {
  return static_cast<std::size_t>(medium_.impurity_site() + offset_);
}

int offset_from_distance(int distance) {
  if (distance < 3 || distance % 2 == 0) {
    throw ValidationError("transfer distance d must be odd and >= 3, got " + std::to_string(distance));
  }
  return (distance - 1) / 2;
}

SymmetricMatrix::SymmetricMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) noexcept {
  data_[i * dim_ + j] = value;
  data_[j * dim_ + i] = value;
}

void SymmetricMatrix::add(std::size_t i, std::size_t j, double value) noexcept {
  const double v = data_[i * dim_ + j] + value;
  set(i, j, v);
}

double SymmetricMatrix::norm_inf() const noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    double sum = 0.0;
    for (double x : row(i)) sum += std::abs(x);
    best = std::max(best, sum);
  }
  return best;
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  StateVector v(dim);
  v[index] = 1.0;
  return v;
}

StateVector StateVector::from_real(std::span<const double> amplitudes) {
  return StateVector(std::vector<value_type>(amplitudes.begin(), amplitudes.end()));
}

double StateVector::norm() const noexcept {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

StateVector::value_type StateVector::inner(const StateVector& other) const {
  if (other.dim() != dim()) throw ValidationError("inner product of states with different dimensions");
  value_type s = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) s += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  return s;
}

namespace {

// Writes the medium block at basis offset `base` (0 for medium-only, 1 for full).
void fill_medium(SymmetricMatrix& h, std::size_t base, const MediumSpec& spec,
                 std::span<const double> bond_hoppings) {
  const auto n = static_cast<std::size_t>(spec.n_sites());
  for (std::size_t j = 0; j + 1 < n; ++j) h.set(base + j, base + j + 1, -bond_hoppings[j]);
  const auto n0 = static_cast<std::size_t>(spec.impurity_site());
  h.set(base + n0 - 1, base + n0 - 1, -spec.impurity_strength());
}

void check_bonds(const MediumSpec& spec, std::span<const double> bond_hoppings) {
  const auto expected = static_cast<std::size_t>(spec.n_sites() - 1);
  if (bond_hoppings.size() != expected) {
    throw ValidationError("expected " + std::to_string(expected) + " bond hoppings, got " +
                          std::to_string(bond_hoppings.size()));
  }
}

}  // namespace

SymmetricMatrix medium_hamiltonian(const MediumSpec& spec) {
  const std::vector<double> bonds(static_cast<std::size_t>(spec.n_sites() - 1), spec.hopping());
  return medium_hamiltonian(spec, bonds);
}

SymmetricMatrix medium_hamiltonian(const MediumSpec& spec, std::span<const double> bond_hoppings) {
  check_bonds(spec, bond_hoppings);
  SymmetricMatrix h(static_cast<std::size_t>(spec.n_sites()));
  fill_medium(h, 0, spec, bond_hoppings);
  return h;
}

SymmetricMatrix full_hamiltonian(const SystemSpec& sys) {
  const std::vector<double> bonds(static_cast<std::size_t>(sys.medium().n_sites() - 1),
                                  sys.medium().hopping());
  return full_hamiltonian(sys, bonds);
}

SymmetricMatrix full_hamiltonian(const SystemSpec& sys, std::span<const double> bond_hoppings) {
  check_bonds(sys.medium(), bond_hoppings);
  SymmetricMatrix h(sys.dim());
  fill_medium(h, 1, sys.medium(), bond_hoppings);
  h.set(sys.left_index(), sys.left_index(), -sys.terminal_onsite());
  h.set(sys.right_index(), sys.right_index(), -sys.terminal_onsite());
  h.set(sys.left_index(), sys.left_contact_index(), -sys.terminal_coupling());
  h.set(sys.right_index(), sys.right_contact_index(), -sys.terminal_coupling());
  return h;
}

double resonant_mu(const MediumSpec& spec) {
  const double xi = spec.xi();
  return 2.0 * spec.hopping() * std::sqrt(xi * xi + 1.0);
}

std::size_t mirror_index(std::size_t dim, std::size_t index) noexcept { return dim - 1 - index; }

}  // namespace igs
