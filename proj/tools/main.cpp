// aho: command-line sweeps over the anharmonic-oscillator library.
//
// Subcommands: order, spectra, evolve, phase, squeeze, stats, geometric,
// classical, verify.  Parameters may be comma-separated grids; rows are
// emitted in deterministic grid order (last listed axis varying fastest).
// A config file (flat key=value lines) provides values that explicit
// command-line flags override.  Output is CSV (default) or JSON with fixed
// 12-significant-digit formatting, per-column provenance metadata and
// per-row quality flags; identical configurations produce byte-identical
// output.

#include "aho/report.hpp"
#include "aho/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace aho;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// parsing helpers
// ---------------------------------------------------------------------------

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& key, const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw CliError("empty value in grid for --" + key + ": '" + s + "'");
    out.push_back(item);
  }
  if (out.empty()) throw CliError("empty grid for --" + key);
  return out;
}

std::vector<double> parse_double_grid(const std::string& key, const std::string& s) {
  std::vector<double> out;
  for (const std::string& item : split_csv(key, s)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw CliError("--" + key + ": '" + item + "' is not a number");
    }
    if (used != item.size())
      throw CliError("--" + key + ": '" + item + "' is not a number");
    if (!std::isfinite(v))
      throw CliError("--" + key + ": grid values must be finite");
    out.push_back(v);
  }
  return out;
}

std::vector<long> parse_long_grid(const std::string& key, const std::string& s) {
  std::vector<long> out;
  for (const std::string& item : split_csv(key, s)) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw CliError("--" + key + ": '" + item + "' is not an integer");
    }
    if (used != item.size())
      throw CliError("--" + key + ": '" + item + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// parameter merging: defaults < config file < command line
// ---------------------------------------------------------------------------

struct Params {
  std::map<std::string, std::string> kv;      // merged raw values
  std::set<std::string> explicit_keys;        // set via config file or flags
  std::vector<std::string> echo_order;        // canonical echo order

  const std::string& raw(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end()) throw CliError("internal: unknown parameter " + key);
    return it->second;
  }
  bool is_set(const std::string& key) const {
    auto it = kv.find(key);
    return it != kv.end() && !it->second.empty();
  }
  bool is_explicit(const std::string& key) const { return explicit_keys.count(key) != 0; }
  std::vector<double> grid(const std::string& key) const {
    return parse_double_grid(key, raw(key));
  }
  std::vector<long> lgrid(const std::string& key) const {
    return parse_long_grid(key, raw(key));
  }
  double one(const std::string& key) const {
    auto g = grid(key);
    if (g.size() != 1) throw CliError("--" + key + " does not accept a grid");
    return g[0];
  }
  long lone(const std::string& key) const {
    auto g = lgrid(key);
    if (g.size() != 1) throw CliError("--" + key + " does not accept a grid");
    return g[0];
  }
  bool flag01(const std::string& key) const {
    const std::string& v = raw(key);
    if (v == "0" || v == "false") return false;
    if (v == "1" || v == "true") return true;
    throw CliError("--" + key + " must be 0/1 or true/false");
  }
  std::string echo() const {
    std::string out;
    for (const std::string& key : echo_order) {
      if (!is_set(key)) continue;
      if (!out.empty()) out += "; ";
      out += key + "=" + raw(key);
    }
    return out;
  }
};

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError("cannot open config file: " + path);
  std::map<std::string, std::string> out;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw CliError(path + ":" + std::to_string(lineno) +
                     ": expected key=value, got '" + stripped + "'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty())
      throw CliError(path + ":" + std::to_string(lineno) + ": empty key");
    if (out.count(key))
      throw CliError(path + ":" + std::to_string(lineno) + ": duplicate key '" +
                     key + "'");
    out[key] = value;
  }
  return out;
}

// Either --N0 or --alpha may carry the coherent amplitude; resolve to an N0
// grid (N0 = |alpha|^2).
std::vector<double> resolve_n0(const Params& p, const std::string& fallback) {
  const bool has_n0 = p.is_set("N0"), has_alpha = p.is_set("alpha");
  if (has_n0 && has_alpha)
    throw CliError("give either --N0 or --alpha, not both");
  if (has_alpha) {
    std::vector<double> out;
    for (double a : p.grid("alpha")) {
      if (a < 0) throw CliError("--alpha: must be >= 0");
      out.push_back(a * a);
    }
    return out;
  }
  std::vector<double> out =
      parse_double_grid("N0", has_n0 ? p.raw("N0") : fallback);
  for (double v : out)
    if (v < 0) throw CliError("--N0: must be >= 0");
  return out;
}

std::string join_flags(const std::vector<std::string>& flags) {
  std::string out;
  std::set<std::string> seen;
  for (const std::string& f : flags) {
    if (!seen.insert(f).second) continue;
    if (!out.empty()) out += ";";
    out += f;
  }
  return out;
}

void check_rows(std::size_t n) {
  if (n > 200000) throw CliError("sweep would emit more than 200000 rows");
}

// ---------------------------------------------------------------------------
// subcommand implementations
// ---------------------------------------------------------------------------

Table run_order(const Params& p) {
  Table tab;
  tab.subcommand = "order";
  tab.columns = {{"m", "input"}, {"r", "input"}, {"coefficient", "closed-form"}, {"flags", "flag"}};
  for (long m : p.lgrid("m")) {
    if (m < 1 || m > 200) throw CliError("--m: order expects 1 <= m <= 200");
    for (long r = 0; 2 * r <= m; ++r) {
      const Int coeff = t_coeff(2 * r) * binomial(m, 2 * r);
      tab.add_row({Value(m), Value(r), Value(coeff.str()), Value("")});
    }
  }
  return tab;
}

Table run_spectra(const Params& p) {
  const auto ms = p.lgrid("m");
  const auto lams = p.grid("lambda");
  const auto ns = p.lgrid("n");
  long dim = p.lone("dim");
  long max_n = 0;
  for (long n : ns) {
    if (n < 0) throw CliError("--n: must be >= 0");
    max_n = std::max(max_n, n);
  }
  check_rows(ms.size() * lams.size() * ns.size());

  Table tab;
  tab.subcommand = "spectra";
  tab.columns = {{"m", "input"},
                 {"lambda", "input"},
                 {"n", "input"},
                 {"dim", "input"},
                 {"energy_first", "closed-form"},
                 {"spacing_first", "closed-form"},
                 {"spacing_second", "closed-form"},
                 {"spacing_exact", "oracle"},
                 {"flags", "flag"}};
  for (long m : ms) {
    const long dim_eff =
        dim > 0 ? dim : std::max({static_cast<long>(96), m + 16, 2 * max_n + 32});
    for (double lam : lams) {
      OscillatorSpec spec(m, lam, dim_eff);
      Eigen::SelfAdjointEigenSolver<Mat> es(hamiltonian(spec));
      if (es.info() != Eigen::Success)
        throw CliError("spectra: eigensolver failed");
      for (long n : ns) {
        std::vector<std::string> flags;
        Value exact;
        if (n + 1 >= dim_eff / 2) {
          // spacing near the truncation edge is not trustworthy
          flags.push_back("truncation-tail");
        } else {
          exact = Value(es.eigenvalues()(n + 1) - es.eigenvalues()(n));
        }
        if (!lambda_window_ok(m, n, lam)) flags.push_back("secular-window");
        const FirstOrderEnergy e = first_order_energy(m, n);
        Value second;
        if (m == 4) second = Value(quartic_second_order(n + 1, lam).delta_E);
        tab.add_row({Value(m), Value(lam), Value(n), Value(dim_eff),
                     Value(e.value(lam)),
                     Value(1.0 + lam * to_double(level_spacing_first(m, n + 1))),
                     second, exact, Value(join_flags(flags))});
      }
    }
  }
  return tab;
}

Table run_evolve(const Params& p) {
  const auto ms = p.lgrid("m");
  const auto lams = p.grid("lambda");
  const auto ts = p.grid("t");
  const long dim = p.lone("dim") > 0 ? p.lone("dim") : 48;
  check_rows(ms.size() * lams.size() * ts.size());

  Table tab;
  tab.subcommand = "evolve";
  tab.columns = {{"m", "input"},           {"lambda", "input"},
                 {"t", "input"},           {"dim", "input"},
                 {"a01_re", "closed-form"}, {"a01_im", "closed-form"},
                 {"residual_first", "oracle"}, {"flags", "flag"}};
  auto [a, ad] = ladder_ops(dim);
  (void)ad;
  const long keep = std::max<long>(8, dim / 3);
  for (long m : ms) {
    for (double lam : lams) {
      OscillatorSpec spec(m, lam, dim);
      const Mat h = hamiltonian(spec);
      for (double t : ts) {
        const Mat first = a_first_order(spec, t);
        const Mat exact = heisenberg_exact(h, a, t);
        const double resid =
            (first.topLeftCorner(keep, keep) - exact.topLeftCorner(keep, keep)).norm();
        std::vector<std::string> flags;
        if (!secular_window_ok(lam, t)) flags.push_back("secular-window");
        tab.add_row({Value(m), Value(lam), Value(t), Value(dim),
                     Value(first(0, 1).real()), Value(first(0, 1).imag()),
                     Value(resid), Value(join_flags(flags))});
      }
    }
  }
  return tab;
}

Table run_phase(const Params& p) {
  const auto n0s = resolve_n0(p, "1");
  const auto thetas = p.grid("theta");
  const auto lams = p.grid("lambda");
  const auto ts = p.grid("t");
  check_rows(n0s.size() * thetas.size() * lams.size() * ts.size());

  Table tab;
  tab.subcommand = "phase";
  tab.columns = {{"N0", "input"},         {"theta", "input"},
                 {"lambda", "input"},     {"t", "input"},
                 {"mean_n", "closed-form"}, {"var_n", "closed-form"},
                 {"S", "closed-form"},    {"U", "closed-form"},
                 {"Q", "closed-form"},    {"U_special", "closed-form"},
                 {"flags", "flag"}};
  for (double n0 : n0s) {
    for (double theta : thetas) {
      for (double lam : lams) {
        for (double t : ts) {
          const PhaseParams ph =
              n0 == 0.0 ? pb_phase_vacuum(theta, lam, t) : pb_phase_params(n0, theta, lam, t);
          std::vector<std::string> flags;
          if (ph.q_pole) flags.push_back("pole");
          if (ph.secular) flags.push_back("secular-window");
          // Dedicated column for the two quoted special values at theta = pi/4.
          Value special;
          if (std::abs(theta - kPi / 4) < 1e-3) {
            if (std::abs(t - kPi / 4) < 1e-3)
              special = Value(pb_u_special_quarter_quarter(n0, lam));
            else if (std::abs(t - kPi / 2) < 1e-3)
              special = Value(pb_u_special_quarter_half(n0, lam));
          }
          tab.add_row({Value(n0), Value(theta), Value(lam), Value(t),
                       Value(ph.mean_n), Value(ph.var_n), Value(ph.S), Value(ph.U),
                       Value(ph.Q), special, Value(join_flags(flags))});
        }
      }
    }
  }
  return tab;
}

Table run_squeeze(const Params& p) {
  const auto ms = p.lgrid("m");
  const auto n0s = resolve_n0(p, "1");
  const auto thetas = p.grid("theta");
  const auto lams = p.grid("lambda");
  const auto ts = p.grid("t");
  const long dim = p.lone("dim");
  check_rows(ms.size() * n0s.size() * thetas.size() * lams.size() * ts.size());

  Table tab;
  tab.subcommand = "squeeze";
  tab.columns = {{"m", "input"},      {"N0", "input"},
                 {"theta", "input"},  {"lambda", "input"},
                 {"t", "input"},      {"var_first", "closed-form"},
                 {"var_second", "closed-form"}, {"var_exact", "oracle"},
                 {"flags", "flag"}};
  for (long m : ms) {
    for (double n0 : n0s) {
      const double alpha = std::sqrt(n0);
      for (double theta : thetas) {
        for (double lam : lams) {
          for (double t : ts) {
            std::vector<std::string> flags;
            if (!secular_window_ok(lam, t)) flags.push_back("secular-window");
            Value second;
            if (m == 4) second = Value(variance_x_quartic_second_order(alpha, theta, lam, t));
            Value exact;
            try {
              exact = Value(variance_x_exact(m, alpha, theta, lam, t, dim));
            } catch (const TruncationError&) {
              flags.push_back("truncation-tail");
            }
            tab.add_row({Value(m), Value(n0), Value(theta), Value(lam), Value(t),
                         Value(variance_x_first_order(m, alpha, theta, lam, t)),
                         second, exact, Value(join_flags(flags))});
          }
        }
      }
    }
  }
  return tab;
}

Table run_stats(const Params& p) {
  const auto ms = p.lgrid("m");
  const auto n0s = resolve_n0(p, "1");
  const auto thetas = p.grid("theta");
  const auto lams = p.grid("lambda");
  const auto ts = p.grid("t");
  const long dim = p.lone("dim");
  check_rows(ms.size() * n0s.size() * thetas.size() * lams.size() * ts.size());

  Table tab;
  tab.subcommand = "stats";
  tab.columns = {{"m", "input"},        {"N0", "input"},
                 {"theta", "input"},    {"lambda", "input"},
                 {"t", "input"},        {"d_closed", "closed-form"},
                 {"mean_n", "from-scratch"}, {"var_n", "from-scratch"},
                 {"mandel_q", "from-scratch"}, {"classification", "from-scratch"},
                 {"flags", "flag"}};
  for (long m : ms) {
    for (double n0 : n0s) {
      for (double theta : thetas) {
        for (double lam : lams) {
          for (double t : ts) {
            std::vector<std::string> flags;
            // occupied levels reach ~N0 + a few standard deviations
            const long n_eff = static_cast<long>(std::ceil(n0 + 4.0 * std::sqrt(n0) + 2.0));
            if (!lambda_window_ok(m, n_eff, lam)) flags.push_back("secular-window");
            const double d = photon_d_general(m, n0, theta, lam, t);
            Value mean, var, q, cls;
            try {
              const PhotonStats st = photon_stats_from_scratch(m, n0, theta, lam, t, dim);
              mean = Value(st.mean);
              var = Value(st.variance);
              q = Value(st.mandel_q);
              cls = Value(st.classification);
              if (st.secular) flags.push_back("secular-window");
            } catch (const TruncationError&) {
              flags.push_back("truncation-tail");
              if (!secular_window_ok(lam, t)) flags.push_back("secular-window");
            }
            tab.add_row({Value(m), Value(n0), Value(theta), Value(lam), Value(t),
                         Value(d), mean, var, q, cls, Value(join_flags(flags))});
          }
        }
      }
    }
  }
  return tab;
}

Table run_geometric(const Params& p) {
  const auto ms = p.lgrid("m");
  const auto n0s = resolve_n0(p, "1");
  const auto thetas = p.grid("theta");
  const auto lams = p.grid("lambda");
  check_rows(ms.size() * n0s.size() * thetas.size() * lams.size());
  for (double lam : lams)
    if (lam <= 0) throw CliError("--lambda: geometric phase requires lambda > 0");

  Table tab;
  tab.subcommand = "geometric";
  tab.columns = {{"m", "input"},       {"N0", "input"},
                 {"theta", "input"},   {"lambda", "input"},
                 {"lambda_prime", "closed-form"}, {"beta_sum", "from-scratch"},
                 {"beta_closed", "closed-form"},  {"flags", "flag"}};
  for (long m : ms) {
    if (m < 4 || m % 2 != 0) throw CliError("--m: geometric expects even m >= 4");
    for (double n0 : n0s) {
      const double alpha = std::sqrt(n0);
      for (double theta : thetas) {
        for (double lam : lams) {
          const double lp = lam / (static_cast<double>(m) * std::pow(2.0, m / 2.0));
          std::vector<std::string> flags;
          Value sum, closed;
          try {
            const InputStatistics st = poissonian_statistics(alpha, theta);
            sum = Value(aa_phase_m(st, m, lp));
          } catch (const TruncationError&) {
            flags.push_back("truncation-tail");
          }
          if (m == 4) closed = Value(aa_phase_quartic_coherent(alpha, theta, lp));
          tab.add_row({Value(m), Value(n0), Value(theta), Value(lam), Value(lp),
                       sum, closed, Value(join_flags(flags))});
        }
      }
    }
  }
  return tab;
}

Table run_classical(const Params& p) {
  const auto ms = p.lgrid("m");
  const auto lams = p.grid("lambda");
  if (p.is_explicit("A") && p.is_explicit("x0"))
    throw CliError("give either --A or --x0, not both");
  const double x0 = p.is_explicit("A") ? p.one("A") : p.one("x0");
  const double v0 = p.one("v0");
  const double t_end = p.one("t-end");
  const double dt_out = p.one("dt");
  const bool renormalized = p.flag01("renormalized");
  if (t_end < 0) throw CliError("--t-end: must be >= 0");
  if (dt_out <= 0) throw CliError("--dt: must be > 0");
  if (renormalized && v0 != 0.0)
    throw CliError("renormalized classical solutions require v0 = 0");

  Table tab;
  tab.subcommand = "classical";
  tab.columns = {{"m", "input"},      {"lambda", "input"},
                 {"order", "input"},  {"renormalized", "input"},
                 {"t", "input"},      {"x_pert", "closed-form"},
                 {"x_rk4", "oracle"}, {"flags", "flag"}};
  for (long m : ms) {
    if (m != 4 && m != 6 && m != 8)
      throw CliError("--m: classical expects m in {4, 6, 8}");
    const long order =
        p.is_set("order") ? p.lone("order") : (m == 4 ? 2 : 1);
    for (double lam : lams) {
      if (lam < 0) throw CliError("--lambda: must be >= 0");
      const double dt_int = std::min(1e-3, dt_out);
      const Trajectory ex = rk4_oracle(m, x0, v0, lam, t_end, dt_int);
      const long stride =
          std::max<long>(1, std::lround(dt_out / ex.meta.dt));
      check_rows(tab.rows.size() + ex.t.size() / stride + 2);
      for (std::size_t i = 0; i < ex.t.size(); i += stride) {
        const double t = ex.t[i];
        std::vector<std::string> flags;
        if (!renormalized && lam * t > 0.3) flags.push_back("secular-window");
        tab.add_row({Value(m), Value(lam), Value(order), Value(renormalized),
                     Value(t),
                     Value(classical_displacement(m, x0, v0, lam, t, order, renormalized)),
                     Value(ex.x[i]), Value(join_flags(flags))});
      }
    }
  }
  return tab;
}

// ---------------------------------------------------------------------------
// wiring
// ---------------------------------------------------------------------------

struct SubSpec {
  CLI::App* app = nullptr;
  std::vector<std::string> keys;                 // parameter keys, echo order
  std::map<std::string, std::string> defaults;   // may omit keys (empty default)
  std::map<std::string, std::string> cli_values; // set by option callbacks
  std::string config_path;
  std::string format = "csv";
  std::string out_path;
};

void emit(const Table& tab, const SubSpec& sub) {
  const std::string text = render(tab, sub.format);
  if (sub.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(sub.out_path, std::ios::binary);
  if (!out) throw CliError("cannot open output file: " + sub.out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"perturbative operator solutions for generalized anharmonic oscillators"};
  app.require_subcommand(1);

  std::map<std::string, SubSpec> subs;
  auto make_sub = [&](const std::string& name, const std::string& desc,
                      std::vector<std::pair<std::string, std::string>> params) {
    SubSpec& sub = subs[name];
    sub.app = app.add_subcommand(name, desc);
    for (const auto& [key, def] : params) {
      sub.keys.push_back(key);
      if (!def.empty()) sub.defaults[key] = def;
      sub.app->add_option_function<std::string>(
          "--" + key,
          [&sub, key = key](const std::string& v) { sub.cli_values[key] = v; },
          def.empty() ? "" : "default: " + def);
    }
    sub.app->add_option("--format", sub.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub.app->add_option("--out", sub.out_path, "output file (default stdout)");
    sub.app->add_option("--config", sub.config_path,
                        "key=value file; command-line flags override it");
  };

  make_sub("order", "normal-ordering prefactors of the field power", {{"m", "4"}});
  make_sub("spectra", "perturbative energy levels vs diagonalization",
           {{"m", "4"}, {"lambda", "0.01"}, {"n", "0,1,2,3"}, {"dim", "0"}});
  make_sub("evolve", "first-order Heisenberg evolution vs exact oracle",
           {{"m", "4"}, {"lambda", "0.01"}, {"t", "1"}, {"dim", "0"}});
  make_sub("phase", "Pegg-Barnett phase fluctuations of the evolved field",
           {{"N0", ""}, {"alpha", ""}, {"theta", "0"}, {"lambda", "0.01"}, {"t", "1"}});
  make_sub("squeeze", "quadrature variance and squeezing",
           {{"m", "4"}, {"N0", ""}, {"alpha", ""}, {"theta", "0"},
            {"lambda", "0.01"}, {"t", "1"}, {"dim", "0"}});
  make_sub("stats", "photon-number statistics of the evolved field",
           {{"m", "4"}, {"N0", ""}, {"alpha", ""}, {"theta", "0"},
            {"lambda", "0.01"}, {"t", "1"}, {"dim", "0"}});
  make_sub("geometric", "Aharonov-Anandan geometric phase over one period",
           {{"m", "4"}, {"N0", ""}, {"alpha", ""}, {"theta", "0"}, {"lambda", "0.01"}});
  make_sub("classical", "perturbative classical trajectories vs RK4",
           {{"m", "4"}, {"A", ""}, {"x0", "2"}, {"v0", "0"}, {"lambda", "0.05"},
            {"t-end", "50"}, {"dt", "0.1"}, {"order", ""}, {"renormalized", "1"}});
  make_sub("verify", "run the nine oracle-comparison suites", {});

  CLI11_PARSE(app, argc, argv);

  const std::string name = app.get_subcommands().front()->get_name();
  SubSpec& sub = subs[name];

  try {
    // defaults < config file < command line
    Params params;
    params.echo_order = sub.keys;
    for (const std::string& key : sub.keys)
      params.kv[key] = sub.defaults.count(key) ? sub.defaults[key] : "";
    if (!sub.config_path.empty()) {
      const std::set<std::string> allowed{sub.keys.begin(), sub.keys.end()};
      for (const auto& [key, value] : read_config_file(sub.config_path)) {
        if (key == "format") {
          if (value != "csv" && value != "json")
            throw CliError("config: format must be csv or json");
          sub.format = value;
        } else if (key == "out") {
          sub.out_path = value;
        } else if (allowed.count(key)) {
          params.kv[key] = value;
          params.explicit_keys.insert(key);
        } else {
          throw CliError("config: unknown key '" + key + "' for subcommand " + name);
        }
      }
    }
    for (const auto& [key, value] : sub.cli_values) {
      params.kv[key] = value;
      params.explicit_keys.insert(key);
    }

    if (name == "verify") {
      const std::vector<VerifyResult> results = run_verify_suites();
      const std::string report = verify_report(results);
      if (sub.out_path.empty()) {
        std::cout << report;
      } else {
        std::ofstream out(sub.out_path, std::ios::binary);
        if (!out) throw CliError("cannot open output file: " + sub.out_path);
        out << report;
      }
      for (const VerifyResult& r : results)
        if (!r.pass) return 1;
      return 0;
    }

    Table tab;
    if (name == "order") tab = run_order(params);
    else if (name == "spectra") tab = run_spectra(params);
    else if (name == "evolve") tab = run_evolve(params);
    else if (name == "phase") tab = run_phase(params);
    else if (name == "squeeze") tab = run_squeeze(params);
    else if (name == "stats") tab = run_stats(params);
    else if (name == "geometric") tab = run_geometric(params);
    else if (name == "classical") tab = run_classical(params);
    else throw CliError("unknown subcommand " + name);

    tab.config_echo = params.echo() + (params.echo().empty() ? "" : "; ") +
                      "format=" + sub.format;
    emit(tab, sub);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "aho %s: error: %s\n", name.c_str(), e.what());
    return 2;
  }
  return 0;
}
