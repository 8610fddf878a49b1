#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "igs/igs.hpp"

namespace igs::cli {

namespace {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

template <typename T>
T parse_number(const std::string& s) {
  std::size_t used = 0;
  T v{};
  try {
    if constexpr (std::is_same_v<T, int>) {
      v = std::stoi(s, &used);
    } else {
      v = std::stod(s, &used);
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

template <typename T>
std::vector<T> parse_list(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty list");
  std::vector<T> values;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      values.push_back(parse_number<T>(parts[0]));
    } else if (parts.size() == 3) {
      const T start = parse_number<T>(parts[0]);
      const T stop = parse_number<T>(parts[1]);
      const T step = parse_number<T>(parts[2]);
      if (!(step > 0) || stop < start) throw std::invalid_argument("bad range '" + item + "'");
      if constexpr (std::is_same_v<T, int>) {
        for (T v = start; v <= stop; v += step) values.push_back(v);
      } else {
        const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (long i = 0; i < count; ++i) values.push_back(start + static_cast<double>(i) * step);
      }
    } else {
      throw std::invalid_argument("expected value or start:stop:step, got '" + item + "'");
    }
  }
  return values;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

template <typename T>
std::string join(const std::vector<T>& values, const std::function<std::string(const T&)>& fmt) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + fmt(values[i]);
  return s;
}

std::string join_ints(const std::vector<int>& v) {
  return join<int>(v, [](const int& x) { return std::to_string(x); });
}

std::string join_reals(const std::vector<double>& v) {
  return join<double>(v, [](const double& x) { return format_exact(x); });
}

// Everything a subcommand needs after parameters have been validated.
struct Context {
  RunConfig cfg;
  std::ostream* summary;
  std::ostream* data;
};

MediumSpec make_medium(const RunConfig& cfg) { return MediumSpec(cfg.n, cfg.mu0); }

std::vector<int> offsets(const RunConfig& cfg) {
  if (cfg.l) return {*cfg.l};
  if (cfg.d.empty()) return {2};
  std::vector<int> ls;
  for (int d : cfg.d) ls.push_back(offset_from_distance(d));
  return ls;
}

int single_offset(const RunConfig& cfg) {
  const auto ls = offsets(cfg);
  if (ls.size() != 1) throw ValidationError(cfg.subcommand + " takes a single l or d");
  return ls.front();
}

double single_j0(const RunConfig& cfg) {
  if (cfg.j0.size() != 1) throw ValidationError(cfg.subcommand + " takes a single j0");
  return cfg.j0.front();
}

double terminal_mu(const RunConfig& cfg, const MediumSpec& medium) {
  if (cfg.mu) return *cfg.mu;
  if (cfg.mu_mode == "numeric") return -numeric_ground_energy(medium);
  return resonant_mu(medium);
}

std::string mu_description(const RunConfig& cfg) {
  if (cfg.mu) return format_exact(*cfg.mu) + " (override)";
  return "resonant (" + cfg.mu_mode + ")";
}

void require_bound_state(const MediumSpec& medium) {
  if (!(medium.impurity_strength() > 0.0)) {
    throw ValidationError("mu0 = 0 has no bound state and no gap");
  }
  if (!has_bound_state(medium)) throw ValidationError("mu0 too small to bind a state on this chain");
}

Header base_header(const Context& ctx, bool with_system, bool with_times, double t_max, int t_steps) {
  const auto& cfg = ctx.cfg;
  Header h;
  h.command = cfg.subcommand;
  h.config.emplace_back("n", std::to_string(cfg.n));
  h.config.emplace_back("mu0", format_exact(cfg.mu0));
  std::string repro = "igs " + cfg.subcommand + " --n " + std::to_string(cfg.n) + " --mu0 " + format_exact(cfg.mu0);
  if (with_system) {
    h.config.emplace_back("j0", join_reals(cfg.j0));
    h.config.emplace_back("mu", mu_description(cfg));
    repro += " --j0 " + join_reals(cfg.j0);
    if (cfg.l) {
      h.config.emplace_back("l", std::to_string(*cfg.l));
      repro += " --l " + std::to_string(*cfg.l);
    } else {
      const auto ds = cfg.d.empty() ? std::vector<int>{5} : cfg.d;
      h.config.emplace_back("d", join_ints(ds));
      repro += " --d " + join_ints(ds);
    }
    repro += cfg.mu ? " --mu " + format_exact(*cfg.mu) : " --mu-mode " + cfg.mu_mode;
  }
  if (with_times) {
    h.config.emplace_back("t_max", format_exact(t_max));
    h.config.emplace_back("t_steps", std::to_string(t_steps));
    repro += " --t-max " + format_exact(t_max) + " --t-steps " + std::to_string(t_steps);
  }
  h.config.emplace_back("format", cfg.format == Format::csv ? "csv" : "json");
  repro += cfg.format == Format::csv ? " --format csv" : " --format json";
  if (!cfg.out.empty()) repro += " --out " + cfg.out;
  if (cfg.deterministic) repro += " --deterministic";
  h.reproduce = repro;
  if (!cfg.deterministic) h.timestamp = utc_timestamp();
  return h;
}

void emit(const Context& ctx, const std::string& path, const Header& header, const Table& table) {
  if (path.empty()) {
    write_table(*ctx.data, header, table, ctx.cfg.format);
    return;
  }
  std::ostringstream buf;
  write_table(buf, header, table, ctx.cfg.format);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  const std::string text = buf.str();
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  f.close();
  if (!f) throw IoError("failed writing '" + path + "'");
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
  if (path.empty()) return path;
  const auto dot = path.find_last_of('.');
  const auto slash = path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

// ---- subcommands ----------------------------------------------------------

void cmd_spectrum(const Context& ctx) {
  const auto medium = make_medium(ctx.cfg);
  Spectrum s = eig_sym(medium_hamiltonian(medium));
  const auto parity = resolve_parity(s);
  Table t{{"index", "energy", "parity"}, {}};
  for (std::size_t i = 0; i < s.dim; ++i) {
    t.rows.push_back({static_cast<std::int64_t>(i), s.eigenvalues[i], std::string(to_string(parity[i]))});
  }
  *ctx.summary << "medium spectrum: N=" << medium.n_sites() << " mu0=" << format_exact(medium.impurity_strength())
               << "\n  e0 = " << format_double(s.eigenvalues[0]) << "\n  e1 = " << format_double(s.eigenvalues[1])
               << "\n  residual bound = " << format_double(s.residual_bound) << '\n';
  emit(ctx, ctx.cfg.out, base_header(ctx, false, false, 0, 0), t);
}

void cmd_bound_state(const Context& ctx) {
  const auto medium = make_medium(ctx.cfg);
  require_bound_state(medium);
  const auto b = bound_state(medium);
  Table t{{"site", "amplitude"}, {}};
  for (std::size_t j = 0; j < b.amplitudes.size(); ++j)
    t.rows.push_back({static_cast<std::int64_t>(j + 1), b.amplitudes[j]});
  *ctx.summary << "bound state: N=" << medium.n_sites() << " mu0=" << format_exact(medium.impurity_strength())
               << "\n  k0 = " << format_double(b.k0) << "\n  lambda0 (infinite chain) = " << format_double(b.lambda0)
               << "\n  lambda0 (finite chain)   = " << format_double(b.lambda0_exact)
               << "\n  log Omega approx = " << format_double(b.log_omega_approx)
               << "\n  log Omega exact  = " << format_double(b.log_omega_exact) << '\n';
  emit(ctx, ctx.cfg.out, base_header(ctx, false, false, 0, 0), t);
}

void cmd_gap(const Context& ctx) {
  const auto medium = make_medium(ctx.cfg);
  const auto g = gap(medium);
  Table t{{"thermodynamic", "finite_size", "numeric"}, {{g.thermodynamic, g.finite_size, g.numeric}}};
  *ctx.summary << "gap: N=" << medium.n_sites() << " mu0=" << format_exact(medium.impurity_strength())
               << "\n  thermodynamic = " << format_double(g.thermodynamic)
               << "\n  finite size   = " << format_double(g.finite_size)
               << "\n  numeric       = " << format_double(g.numeric) << '\n';
  emit(ctx, ctx.cfg.out, base_header(ctx, false, false, 0, 0), t);
}

void cmd_jeff_scan(const Context& ctx) {
  const auto medium = make_medium(ctx.cfg);
  require_bound_state(medium);
  const double mu = terminal_mu(ctx.cfg, medium);
  const auto ls = offsets(ctx.cfg);
  for (double j0 : ctx.cfg.j0) {
    Table t{{"d", "l", "jeff_analytic", "jeff_numeric", "rel_err"}, {}};
    for (int l : ls) {
      const SystemSpec sys(medium, j0, l, mu);
      const double analytic = effective_model(sys).jeff;
      const double numeric = jeff_numeric(sys);
      const double rel = std::abs(analytic - numeric) / std::abs(numeric);
      t.rows.push_back({static_cast<std::int64_t>(2 * l + 1), static_cast<std::int64_t>(l), analytic, numeric, rel});
      *ctx.summary << "j0=" << format_exact(j0) << " d=" << 2 * l + 1 << "  J_eff analytic "
                   << format_double(analytic) << "  numeric " << format_double(numeric) << '\n';
    }
    RunConfig one = ctx.cfg;
    one.j0 = {j0};
    const Context sub{one, ctx.summary, ctx.data};
    const std::string path =
        ctx.cfg.j0.size() > 1 ? with_suffix(ctx.cfg.out, "_j0_" + format_exact(j0)) : ctx.cfg.out;
    emit(sub, path, base_header(sub, true, false, 0, 0), t);
  }
}

void cmd_overlaps(const Context& ctx) {
  const auto medium = make_medium(ctx.cfg);
  require_bound_state(medium);
  const double mu = terminal_mu(ctx.cfg, medium);
  const double j0 = single_j0(ctx.cfg);
  const auto bound = bound_state(medium);
  Table t{{"d", "state", "cL2", "c02", "cR2", "P"}, {}};
  static constexpr const char* kLabels[] = {"11", "10", "1-1"};
  for (int l : offsets(ctx.cfg)) {
    const SystemSpec sys(medium, j0, l, mu);
    const auto report = overlap_report(sys, eig_sym(full_hamiltonian(sys)), bound);
    for (std::size_t s = 0; s < 3; ++s) {
      const auto& st = report.states[s];
      t.rows.push_back({static_cast<std::int64_t>(report.d), std::string(kLabels[s]), st.cL2, st.c02, st.cR2, st.P});
    }
    *ctx.summary << "d=" << report.d << "  P11 " << format_double(report.states[0].P) << "  P10 "
                 << format_double(report.states[1].P) << "  P1-1 " << format_double(report.states[2].P) << '\n';
    if (!report.subspace_isolated) {
      *ctx.summary << "  warning: lowest three levels are not separated from the fourth by 10x their internal spacing\n";
    }
  }
  emit(ctx, ctx.cfg.out, base_header(ctx, true, false, 0, 0), t);
}

std::pair<double, int> time_grid_params(const RunConfig& cfg, const EffectiveModel& model, double tau_multiple,
                                        int default_steps) {
  int steps = cfg.t_steps.value_or(default_steps);
  if (steps < 2) throw ValidationError("--t-steps must be >= 2");
  if (cfg.t_max) return {*cfg.t_max, steps};
  const auto tau = model.transfer_time();
  if (!tau) throw ValidationError("J_eff = 0: no transfer time, pass --t-max explicitly");
  return {tau_multiple * *tau, steps};
}

void cmd_evolve(const Context& ctx) {
  const auto medium = make_medium(ctx.cfg);
  require_bound_state(medium);
  const SystemSpec sys(medium, single_j0(ctx.cfg), single_offset(ctx.cfg), terminal_mu(ctx.cfg, medium));
  const auto model = effective_model(sys);
  const auto [t_max, steps] = time_grid_params(ctx.cfg, model, 2.0, 2000);
  const auto times = uniform_time_grid(t_max, static_cast<std::size_t>(steps));
  const auto traj = fidelity_exact(sys, times);

  Table t{{"t", "F_exact", "F_analytic"}, {}};
  double sup = 0.0;
  std::size_t peak = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double fa = fidelity_analytic(model, times[i]);
    sup = std::max(sup, std::abs(traj.fidelity[i] - fa));
    if (traj.fidelity[i] > traj.fidelity[peak]) peak = i;
    t.rows.push_back({times[i], traj.fidelity[i], fa});
  }
  *ctx.summary << "evolve: d=" << sys.transfer_distance() << " J_eff=" << format_double(model.jeff);
  if (const auto tau = model.transfer_time()) *ctx.summary << " tau=" << format_double(*tau);
  *ctx.summary << "\n  peak F = " << format_double(traj.fidelity[peak]) << " at t = " << format_double(times[peak])
               << "\n  sup |F_exact - F_analytic| = " << format_double(sup)
               << "\n  norm drift = " << format_double(traj.norm_drift) << '\n';
  if (!model.weak_coupling) *ctx.summary << "  warning: J0 is not below the gap; effective model unreliable\n";
  emit(ctx, ctx.cfg.out, base_header(ctx, true, true, t_max, steps), t);
}

void cmd_disorder(const Context& ctx) {
  const auto medium = make_medium(ctx.cfg);
  require_bound_state(medium);
  const SystemSpec sys(medium, single_j0(ctx.cfg), single_offset(ctx.cfg), terminal_mu(ctx.cfg, medium));
  const DisorderSpec disorder(ctx.cfg.delta, ctx.cfg.realizations, ctx.cfg.seed);
  const auto model = effective_model(sys);
  const auto [t_max, steps] = time_grid_params(ctx.cfg, model, 10.0, 10000);
  const auto times = uniform_time_grid(t_max, static_cast<std::size_t>(steps));
  const auto stats = ensemble_fidelity(sys, disorder, times);

  Table t{{"realization", "seed", "peak_F", "t_peak"}, {}};
  for (const auto& r : stats.realizations) {
    t.rows.push_back({static_cast<std::int64_t>(r.realization), std::to_string(r.seed), r.peak_fidelity, r.peak_time});
  }
  *ctx.summary << "disorder: delta=" << format_exact(disorder.amplitude()) << " realizations="
               << disorder.n_realizations() << " seed=" << disorder.master_seed()
               << "\n  peak F mean   = " << format_double(stats.mean)
               << "\n  peak F median = " << format_double(stats.median)
               << "\n  peak F min    = " << format_double(stats.min)
               << "\n  peak F max    = " << format_double(stats.max) << '\n';

  Header h = base_header(ctx, true, true, t_max, steps);
  h.config.emplace_back("delta", format_exact(disorder.amplitude()));
  h.config.emplace_back("realizations", std::to_string(disorder.n_realizations()));
  h.config.emplace_back("seed", std::to_string(disorder.master_seed()));
  h.config.emplace_back("rng", kDisorderRngScheme);
  h.reproduce += " --delta " + format_exact(disorder.amplitude()) + " --realizations " +
                 std::to_string(disorder.n_realizations()) + " --seed " + std::to_string(disorder.master_seed());
  emit(ctx, ctx.cfg.out, h, t);

  if (!ctx.cfg.trace_out.empty()) {
    const auto f = realization_fidelity(sys, disorder, ctx.cfg.trace_realization, times);
    Table trace{{"t", "F"}, {}};
    for (std::size_t i = 0; i < times.size(); ++i) trace.rows.push_back({times[i], f[i]});
    Header th = h;
    th.config.emplace_back("trace_realization", std::to_string(ctx.cfg.trace_realization));
    const Context sub{ctx.cfg, ctx.summary, ctx.data};
    emit(sub, ctx.cfg.trace_out, th, trace);
  }
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string& j0_text, std::string& d_text, std::string& format_text,
                bool system, bool times, bool disorder) {
  sub->add_option("--n", cfg.n, "number of medium sites N (odd)")->envname("IGS_N")->capture_default_str();
  sub->add_option("--mu0", cfg.mu0, "impurity strength mu0 / J")->envname("IGS_MU0")->capture_default_str();
  sub->add_option("--out", cfg.out, "data file (default: stdout)")->envname("IGS_OUT");
  sub->add_option("--format", format_text, "csv or json")
      ->envname("IGS_FORMAT")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_flag("--deterministic", cfg.deterministic, "omit the timestamp from file headers")
      ->envname("IGS_DETERMINISTIC");
  if (system) {
    sub->add_option("--j0", j0_text, "terminal coupling J0 / J (list or range)")
        ->envname("IGS_J0")
        ->capture_default_str();
    auto* l = sub->add_option("--l", cfg.l, "connection offset l (d = 2l + 1)")->envname("IGS_L");
    auto* d = sub->add_option("--d", d_text, "transfer distance d (list or start:stop:step)")->envname("IGS_D");
    l->excludes(d);
    auto* mu = sub->add_option("--mu", cfg.mu, "explicit terminal on-site mu / J")->envname("IGS_MU");
    auto* mode = sub->add_option("--mu-mode", cfg.mu_mode, "resonance from the closed form or numeric ground energy")
                     ->envname("IGS_MU_MODE")
                     ->check(CLI::IsMember({"closed", "numeric"}))
                     ->capture_default_str();
    mu->excludes(mode);
  }
  if (times) {
    sub->add_option("--t-max", cfg.t_max, "end of the time grid in 1/J")->envname("IGS_T_MAX");
    sub->add_option("--t-steps", cfg.t_steps, "number of time points")->envname("IGS_T_STEPS");
  }
  if (disorder) {
    sub->add_option("--delta", cfg.delta, "relative bond disorder amplitude")->envname("IGS_DELTA")->capture_default_str();
    sub->add_option("--realizations", cfg.realizations, "number of disorder realizations")
        ->envname("IGS_REALIZATIONS")
        ->capture_default_str();
    sub->add_option("--seed", cfg.seed, "master seed")->envname("IGS_SEED")->capture_default_str();
    sub->add_option("--trace-out", cfg.trace_out, "also write F(t) of one realization")->envname("IGS_TRACE_OUT");
    sub->add_option("--trace-realization", cfg.trace_realization, "realization index for --trace-out")
        ->envname("IGS_TRACE_REALIZATION")
        ->capture_default_str();
  }
}

}  // namespace

std::vector<int> parse_int_range(const std::string& text) { return parse_list<int>(text); }
std::vector<double> parse_real_list(const std::string& text) { return parse_list<double>(text); }

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum state transfer through an impurity-gapped tight-binding chain", "igs"};
  app.set_version_flag("--version", std::string("igs ") + kVersion);
  app.require_subcommand(1);

  RunConfig cfg;
  std::string j0_text = "2e-3";
  std::string d_text;
  std::string format_text = "csv";

  struct Entry {
    const char* name;
    const char* help;
    bool system, times, disorder;
    void (*fn)(const Context&);
  };
  const Entry entries[] = {
      {"spectrum", "medium eigenvalues with parity labels", false, false, false, cmd_spectrum},
      {"bound-state", "impurity bound-state profile", false, false, false, cmd_bound_state},
      {"gap", "thermodynamic, finite-size and numeric gap", false, false, false, cmd_gap},
      {"jeff-scan", "effective coupling versus transfer distance", true, false, false, cmd_jeff_scan},
      {"overlaps", "overlaps of the lowest three states with |1,m>", true, false, false, cmd_overlaps},
      {"evolve", "exact and effective-model transfer fidelity F(t)", true, true, false, cmd_evolve},
      {"disorder", "peak fidelity over static bond-disorder realizations", true, true, true, cmd_disorder},
  };
  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(e.name, e.help);
    add_common(sub, cfg, j0_text, d_text, format_text, e.system, e.times, e.disorder);
    subs.emplace_back(sub, &e);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidParameters;
  }

  const Entry* chosen = nullptr;
  for (const auto& [sub, e] : subs) {
    if (sub->parsed()) chosen = e;
  }
  cfg.subcommand = chosen->name;

  try {
    try {
      cfg.j0 = parse_real_list(j0_text);
      if (!d_text.empty()) cfg.d = parse_int_range(d_text);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
    cfg.format = format_text == "json" ? Format::json : Format::csv;

    const Context ctx{cfg, cfg.out.empty() ? &err : &out, &out};
    chosen->fn(ctx);
  } catch (const ValidationError& e) {
    err << "igs: invalid parameters: " << e.what() << '\n';
    return kInvalidParameters;
  } catch (const NumericalError& e) {
    err << "igs: numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const IoError& e) {
    err << "igs: I/O failure: " << e.what() << '\n';
    return kIoFailure;
  }
  return kOk;
}

}  // namespace igs::cli
