#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "igs/errors.hpp"
#include "igs/model.hpp"
#include "igs/spectral.hpp"

using namespace igs;

namespace {

// P H P with P the reflection i <-> dim - 1 - i.
SymmetricMatrix reflect(const SymmetricMatrix& h) {
  SymmetricMatrix r(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i; j < h.dim(); ++j)
      r.set(mirror_index(h.dim(), i), mirror_index(h.dim(), j), h(i, j));
  return r;
}

bool exactly_symmetric(const SymmetricMatrix& h) {
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (h(i, j) != h(j, i)) return false;
  return true;
}

}  // namespace

TEST(MediumSpec, RejectsInvalidSizes) {
  EXPECT_THROW(MediumSpec(4, 0.1), ValidationError);
  EXPECT_THROW(MediumSpec(1, 0.1), ValidationError);
  EXPECT_THROW(MediumSpec(-3, 0.1), ValidationError);
  EXPECT_THROW(MediumSpec(5, -0.1), ValidationError);
  EXPECT_THROW(MediumSpec(5, 0.1, 0.0), ValidationError);
  EXPECT_NO_THROW(MediumSpec(3, 0.0));
}

TEST(MediumSpec, ImpuritySiteIsCentral) {
  EXPECT_EQ(MediumSpec(3, 0.1).impurity_site(), 2);
  EXPECT_EQ(MediumSpec(499, 0.1).impurity_site(), 250);
}

TEST(MediumHamiltonian, ThreeSiteStructure) {
  const auto h = medium_hamiltonian(MediumSpec(3, 0.1));
  ASSERT_EQ(h.dim(), 3u);
  EXPECT_EQ(h(0, 1), -1.0);
  EXPECT_EQ(h(1, 2), -1.0);
  EXPECT_EQ(h(0, 2), 0.0);
  EXPECT_EQ(h(0, 0), 0.0);
  EXPECT_EQ(h(1, 1), -0.1);
  EXPECT_EQ(h(2, 2), 0.0);
}

TEST(MediumHamiltonian, UniformThreeSiteEigenvalues) {
  const auto ev = eigenvalues_sym(medium_hamiltonian(MediumSpec(3, 0.0)));
  EXPECT_NEAR(ev[0], -std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(ev[1], 0.0, 1e-14);
  EXPECT_NEAR(ev[2], std::sqrt(2.0), 1e-14);
}

TEST(MediumHamiltonian, FiveSiteNonzeroCount) {
  const auto h = medium_hamiltonian(MediumSpec(5, 0.2));
  int off_pairs = 0, diag = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    if (h(i, i) != 0.0) ++diag;
    for (std::size_t j = i + 1; j < 5; ++j)
      if (h(i, j) != 0.0) ++off_pairs;
  }
  EXPECT_EQ(off_pairs, 4);
  EXPECT_EQ(diag, 1);
  EXPECT_TRUE(exactly_symmetric(h));
}

TEST(MediumHamiltonian, HoppingScalesBonds) {
  const auto h = medium_hamiltonian(MediumSpec(5, 0.3, 2.5));
  EXPECT_EQ(h(1, 2), -2.5);
  EXPECT_EQ(h(2, 2), -0.3);
}

TEST(MediumHamiltonian, RejectsWrongBondCount) {
  const std::vector<double> bonds(3, 1.0);
  EXPECT_THROW(medium_hamiltonian(MediumSpec(5, 0.1), bonds), ValidationError);
}

TEST(SystemSpec, OffsetRange) {
  const MediumSpec m(5, 0.1);
  EXPECT_THROW(SystemSpec(m, 1e-3, 0, 2.0), ValidationError);
  EXPECT_THROW(SystemSpec(m, 1e-3, 3, 2.0), ValidationError);
  EXPECT_NO_THROW(SystemSpec(m, 1e-3, 2, 2.0));
  EXPECT_THROW(SystemSpec(m, -1e-3, 1, 2.0), ValidationError);
  EXPECT_EQ(offset_from_distance(5), 2);
  EXPECT_THROW(offset_from_distance(4), ValidationError);
  EXPECT_THROW(offset_from_distance(1), ValidationError);
}

TEST(FullHamiltonian, LeftRowHasTwoEntries) {
  const auto sys = SystemSpec::resonant(MediumSpec(5, 0.1), 1e-2, 1);
  const auto h = full_hamiltonian(sys);
  ASSERT_EQ(h.dim(), 7u);
  int nonzero = 0;
  for (double x : h.row(0))
    if (x != 0.0) ++nonzero;
  EXPECT_EQ(nonzero, 2);
  EXPECT_EQ(h(0, 0), -sys.terminal_onsite());
  EXPECT_EQ(h(0, 2), -1e-2);  // site N0 - l = 2
  EXPECT_EQ(h(6, 4), -1e-2);  // site N0 + l = 4
  EXPECT_EQ(h(0, 6), 0.0);
}

TEST(FullHamiltonian, DecoupledIsBlockDiagonalAndThreefoldDegenerate) {
  const MediumSpec m(201, 0.5);
  const auto sys = SystemSpec::resonant(m, 0.0, 3);
  const auto h = full_hamiltonian(sys);
  const auto hm = medium_hamiltonian(m);
  for (std::size_t i = 0; i < 201; ++i)
    for (std::size_t j = 0; j < 201; ++j) EXPECT_EQ(h(i + 1, j + 1), hm(i, j));
  for (std::size_t j = 1; j < h.dim(); ++j) EXPECT_EQ(h(0, j), 0.0);
  const auto ev = eigenvalues_sym(h);
  // lambda0 of a 201-site chain at mu0 = 0.5 equals the closed form to ~e^{-2 k0 N0}.
  EXPECT_NEAR(ev[0], -sys.terminal_onsite(), 1e-12);
  EXPECT_NEAR(ev[1], -sys.terminal_onsite(), 1e-12);
  EXPECT_NEAR(ev[2], -sys.terminal_onsite(), 1e-12);
  EXPECT_GT(ev[3] - ev[2], 1e-2);
}

TEST(ResonantMu, ClosedForm) {
  EXPECT_DOUBLE_EQ(resonant_mu(MediumSpec(9, 0.0)), 2.0);
  EXPECT_NEAR(resonant_mu(MediumSpec(9, 0.1)), 2.0 * std::sqrt(1.0025), 1e-15);
  EXPECT_NEAR(resonant_mu(MediumSpec(9, 2.0)), 2.0 * std::sqrt(2.0), 1e-15);
}

TEST(ResonantMu, MatchesDenseGroundEnergyAt499) {
  const MediumSpec m(499, 0.1);
  EXPECT_NEAR(-numeric_ground_energy(m), resonant_mu(m), 1e-10);
}

TEST(Symmetry, MirrorInvarianceProperty) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> mu0(0.0, 2.0), j0(0.0, 0.5);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + 2 * static_cast<int>(rng() % 30);
    const MediumSpec m(n, mu0(rng));
    const auto hm = medium_hamiltonian(m);
    EXPECT_EQ(reflect(hm), hm);
    EXPECT_TRUE(exactly_symmetric(hm));
    if (m.impurity_site() >= 2) {
      const int l = 1 + static_cast<int>(rng() % static_cast<unsigned>(m.impurity_site() - 1));
      const auto h = full_hamiltonian(SystemSpec::resonant(m, j0(rng), l));
      EXPECT_EQ(reflect(h), h);
      EXPECT_TRUE(exactly_symmetric(h));
    }
  }
}

TEST(StateVector, BasisAndInner) {
  const auto a = StateVector::basis(4, 1);
  const auto b = StateVector::basis(4, 2);
  EXPECT_DOUBLE_EQ(a.norm(), 1.0);
  EXPECT_EQ(a.inner(b), std::complex<double>(0.0));
  EXPECT_EQ(a.inner(a), std::complex<double>(1.0));
  EXPECT_THROW(a.inner(StateVector::basis(3, 0)), ValidationError);
}
