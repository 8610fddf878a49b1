// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "igs/igs.hpp"

using namespace igs;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// Reference overlaps: rows cL2, c02, cR2, P for m = 1, 0, -1; columns d = 5..65.
using TableRows = std::array<std::array<double, 7>, 12>;

constexpr std::array<int, 7> kTableDistances{5, 15, 25, 35, 45, 55, 65};

constexpr TableRows kTableA{{
    {0.2552, 0.2531, 0.2539, 0.2569, 0.2618, 0.2687, 0.2778},
    {0.4884, 0.4932, 0.4920, 0.4860, 0.4757, 0.4613, 0.4426},
    {0.2552, 0.2531, 0.2539, 0.2569, 0.2618, 0.2687, 0.2778},
    {0.9986, 0.9994, 0.9997, 0.9995, 0.9988, 0.9973, 0.9950},
    {0.4999, 0.4994, 0.4987, 0.4980, 0.4975, 0.4971, 0.4968},
    {3.457e-25, 2.334e-24, 6.501e-25, 2.248e-23, 1.044e-23, 2.920e-23, 1.992e-22},
    {0.4999, 0.4994, 0.4987, 0.4980, 0.4975, 0.4971, 0.4968},
    {0.9999, 0.9988, 0.9973, 0.9960, 0.9949, 0.9941, 0.9935},
    {0.2432, 0.2462, 0.2459, 0.2429, 0.2375, 0.2301, 0.2205},
    {0.5116, 0.5068, 0.5080, 0.5140, 0.5243, 0.5387, 0.5574},
    {0.2432, 0.2462, 0.2459, 0.2429, 0.2375, 0.2301, 0.2205},
    {0.9979, 0.9992, 0.9997, 0.9995, 0.9987, 0.9973, 0.9950},
}};

constexpr TableRows kTableB{{
    {0.2641, 0.2599, 0.2580, 0.2580, 0.2595, 0.2625, 0.2666},
    {0.4633, 0.4741, 0.4801, 0.4817, 0.4795, 0.4738, 0.4650},
    {0.2641, 0.2599, 0.2580, 0.2580, 0.2595, 0.2625, 0.2666},
    {0.9904, 0.9933, 0.9957, 0.9973, 0.9981, 0.9980, 0.9970},
    {0.4999, 0.4985, 0.4963, 0.4937, 0.4912, 0.4887, 0.4865},
    {6.467e-24, 2.461e-25, 1.581e-23, 2.075e-23, 2.362e-23, 7.620e-24, 2.793e-24},
    {0.4999, 0.4985, 0.4963, 0.4937, 0.4912, 0.4887, 0.4865},
    {0.9997, 0.9970, 0.9925, 0.9875, 0.9823, 0.9774, 0.9730},
    {0.2194, 0.2286, 0.2348, 0.2379, 0.2383, 0.2360, 0.2315},
    {0.5318, 0.5231, 0.5185, 0.5177, 0.5203, 0.5261, 0.5350},
    {0.2194, 0.2286, 0.2348, 0.2379, 0.2383, 0.2360, 0.2315},
    {0.9684, 0.9791, 0.9874, 0.9931, 0.9963, 0.9974, 0.9967},
}};

Outcome table_reproduction() {
  constexpr double kTol = 5e-4;
  double worst = 0.0;
  std::string where;
  const std::pair<double, const TableRows*> panels[] = {{0.1, &kTableA}, {0.05, &kTableB}};
  for (const auto& [mu0, table] : panels) {
    const MediumSpec medium(499, mu0);
    const auto bound = bound_state(medium);
    for (std::size_t col = 0; col < kTableDistances.size(); ++col) {
      const auto sys = SystemSpec::resonant_at_distance(medium, 2e-3, kTableDistances[col]);
      const auto report = overlap_report(sys, eig_sym(full_hamiltonian(sys)), bound);
      for (std::size_t s = 0; s < 3; ++s) {
        const auto& st = report.states[s];
        const double got[4] = {st.cL2, st.c02, st.cR2, st.P};
        for (std::size_t q = 0; q < 4; ++q) {
          const double dev = std::abs(got[q] - (*table)[4 * s + q][col]);
          if (dev > worst) {
            worst = dev;
            where = "mu0=" + sci(mu0) + " d=" + std::to_string(kTableDistances[col]) + " m=" +
                    std::to_string(st.m) + " quantity " + std::to_string(q);
          }
        }
      }
    }
  }
  return {worst <= kTol, "max |dev| = " + sci(worst) + " (tol 5e-4) at " + where};
}

Outcome gap_values() {
  bool pass = true;
  std::ostringstream os;
  const std::pair<double, double> reference[] = {{0.1, 2.5e-3}, {0.05, 6.25e-4}};
  for (const auto& [mu0, value] : reference) {
    const MediumSpec medium(499, mu0);
    const auto g = gap(medium);
    const double rel = std::abs(g.thermodynamic - value) / value;
    const double finite_dev = std::abs(g.numeric - g.finite_size);
    const bool ok = rel <= 0.01 && finite_dev <= 1e-9;
    pass = pass && ok;
    // Diagnostic only: the same form with the finite-chain bound-state energy.
    const double n0 = medium.impurity_site();
    const double exact_form = -2.0 * std::cos(std::numbers::pi / n0) - bound_state(medium).lambda0_exact;
    os << "mu0=" << mu0 << ": thermo rel " << sci(rel) << ", |numeric - finite-size| " << sci(finite_dev)
       << (ok ? "" : " [exceeds 1e-9; with finite-chain lambda0: " + sci(std::abs(g.numeric - exact_form)) + "]")
       << "; ";
  }
  return {pass, os.str()};
}

Outcome jeff_agreement() {
  double worst = 0.0;
  for (double mu0 : {0.1, 0.05}) {
    const MediumSpec medium(499, mu0);
    for (int d : {5, 15, 25}) {
      const auto sys = SystemSpec::resonant_at_distance(medium, 1e-3, d);
      const double numeric = jeff_numeric(sys);
      worst = std::max(worst, std::abs(effective_model(sys).jeff - numeric) / numeric);
    }
  }
  return {worst <= 0.05, "max relative error " + sci(worst) + " (tol 5e-2)"};
}

Outcome fidelity_dynamics() {
  bool pass = true;
  std::ostringstream os;
  for (double mu0 : {0.1, 0.05}) {
    const auto sys = SystemSpec::resonant(MediumSpec(499, mu0), 2e-3, 2);
    const auto model = effective_model(sys);
    const double tau = *transfer_time(model);
    const auto times = uniform_time_grid(2.0 * tau, 4001);
    const auto traj = fidelity_exact(sys, times);
    double sup = 0.0;
    std::size_t peak = 0;
    for (std::size_t i = 0; i < times.size(); ++i) {
      sup = std::max(sup, std::abs(traj.fidelity[i] - fidelity_analytic(model, times[i])));
      if (traj.fidelity[i] > traj.fidelity[peak]) peak = i;
    }
    const double peak_offset = std::abs(times[peak] - tau) / tau;
    bool ok;
    if (mu0 == 0.1) {
      ok = sup <= 0.05 && traj.fidelity[peak] >= 0.99 && peak_offset <= 0.02;
    } else {
      ok = sup <= 0.10;
    }
    pass = pass && ok;
    os << "mu0=" << mu0 << ": sup " << sci(sup) << ", peak F " << traj.fidelity[peak] << " at "
       << times[peak] / tau << " tau; ";
  }
  return {pass, os.str()};
}

double median_peak(double mu0, double delta, int realizations) {
  const auto sys = SystemSpec::resonant(MediumSpec(499, mu0), 2e-3, 2);
  const double tau = *transfer_time(effective_model(sys));
  const auto times = uniform_time_grid(10.0 * tau, 10000);
  return ensemble_fidelity(sys, DisorderSpec(delta, realizations, 1), times).median;
}

Outcome disorder_robustness() {
  constexpr int kRealizations = 20;
  const double a = median_peak(0.1, 5e-3, kRealizations);
  const double b_weak = median_peak(0.1, 1e-2, kRealizations);
  const double b_strong = median_peak(0.5, 1e-2, kRealizations);
  const bool pass = a >= 0.90 && b_strong > b_weak;
  std::ostringstream os;
  os << kRealizations << " realizations, window 10 tau: (a) median " << a << " (>= 0.90); (b) median mu0=0.5 "
     << b_strong << " vs mu0=0.1 " << b_weak;
  return {pass, os.str()};
}

Outcome spectral_completeness() {
  double level = 0.0, residual = 0.0, odd_shift = 0.0;
  bool alternation = true;
  for (int n : {99, 499}) {
    Spectrum clean = eig_sym(medium_hamiltonian(MediumSpec(n, 0.0)));
    const auto clean_parity = resolve_parity(clean);
    std::vector<double> clean_odd;
    for (std::size_t k = 0; k < clean.dim; ++k)
      if (clean_parity[k] == Parity::odd) clean_odd.push_back(clean.eigenvalues[k]);

    for (double mu0 : {0.05, 0.1, 0.5}) {
      const MediumSpec medium(n, mu0);
      Spectrum s = eig_sym(medium_hamiltonian(medium));
      const auto analytic = analytic_spectrum(medium);
      for (std::size_t i = 0; i < s.dim; ++i) level = std::max(level, std::abs(analytic[i] - s.eigenvalues[i]));
      for (const auto& mode : even_modes(medium)) residual = std::max(residual, even_mode_residual(medium, mode));

      const auto parity = resolve_parity(s);
      std::vector<double> odd;
      for (std::size_t k = 0; k < s.dim; ++k) {
        if (parity[k] == Parity::odd) odd.push_back(s.eigenvalues[k]);
        if (k + 1 < s.dim && parity[k] == parity[k + 1]) alternation = false;
      }
      if (odd.size() != clean_odd.size()) {
        alternation = false;
        continue;
      }
      for (std::size_t i = 0; i < odd.size(); ++i) odd_shift = std::max(odd_shift, std::abs(odd[i] - clean_odd[i]));
    }
  }
  const bool pass = level <= 1e-9 && residual <= 1e-12 && odd_shift <= 1e-10 && alternation;
  return {pass, "level dev " + sci(level) + ", residual " + sci(residual) + ", odd shift " + sci(odd_shift) +
                    ", parity alternation " + (alternation ? "holds" : "broken")};
}

Outcome dynamics_invariants() {
  const auto sys = SystemSpec::resonant(MediumSpec(499, 0.1), 2e-3, 2);
  const Propagator full(full_hamiltonian(sys));
  const auto long_times = uniform_time_grid(1e5, 101);
  const auto traj = evolve(full, StateVector::basis(sys.dim(), sys.left_index()), long_times);

  // Closed form holds in the frame rotating with the terminal energy.
  const double jeff = effective_model(sys).jeff;
  const auto model = make_effective_model(jeff, 0.0);
  const double delta = model.level_spacing();
  const double tau = *transfer_time(model);
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> pick(0.0, 10.0 * tau);
  std::vector<double> times(100);
  for (double& t : times) t = pick(rng);
  const auto h3 = evolve(model.h3, StateVector::basis(3, 0), times);
  double worst = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const std::complex<double> expected = (std::cos(delta * times[i]) - 1.0) / 2.0;
    worst = std::max(worst, std::abs(h3.amplitude_R[i] - expected));
  }
  const bool pass = traj.norm_drift <= 1e-10 && worst <= 1e-12;
  return {pass, "norm drift " + sci(traj.norm_drift) + " over t <= 1e5, h3 closed-form dev " + sci(worst) +
                    " at 100 random times"};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("igs_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string cmd = std::string(IGS_EXECUTABLE) +
                          " disorder --realizations 5 --seed 17 --deterministic --out " + (dir / "run.csv").string() +
                          " > /dev/null";
  auto run_once = [&](const std::string& name) {
    if (std::system(cmd.c_str()) != 0) return std::string("<failed>");
    fs::rename(dir / "run.csv", dir / name);
    std::ifstream f(dir / name, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };
  const std::string a = run_once("a.csv");
  const std::string b = run_once("b.csv");
  fs::remove_all(dir);
  const bool pass = a == b && a != "<failed>" && !a.empty();
  return {pass, "two disorder runs (seed 17, 5 realizations): " +
                    std::string(pass ? "byte-identical, " + std::to_string(a.size()) + " bytes" : "differ or failed")};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"Overlap table reproduction", table_reproduction},
      {"Gap values", gap_values},
      {"J_eff agreement", jeff_agreement},
      {"Fidelity dynamics", fidelity_dynamics},
      {"Disorder robustness", disorder_robustness},
      {"Spectral completeness", spectral_completeness},
      {"Dynamics invariants", dynamics_invariants},
      {"Determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
