#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "qwalk/dynamics.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/report_json.hpp"
#include "qwalk/revival.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/state_io.hpp"

namespace qwalk::cli {
namespace {

namespace fs = std::filesystem;

enum class Command { simulate, spectrum, stationary, revival };

struct RunConfig {
  Command command = Command::simulate;
  std::string coin_spec = "grover";
  std::string init_spec = "origin_symmetric";
  std::size_t steps = 0;
  std::size_t t_max = 10;
  std::size_t grid = kDefaultSpectralGrid;
  std::size_t lattice = 0;  // simulate: momentum path when non-zero
  double tol = 0.0;         // 0 = command default
  std::string lambda = "1,0";
  std::size_t box = 2;
  std::string box_origin = "0,0";
  fs::path out = ".";
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::pair<double, double> parse_pair(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ConfigError(std::string(what) + " must look like a,b");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const double x = std::stod(a, &used_a), y = std::stod(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
    return {x, y};
  } catch (const std::logic_error&) {
    throw ConfigError(std::string(what) + ": cannot parse '" + text + "'");
  }
}

CoinOperator resolve_coin(const std::string& spec) {
  if (is_builtin_coin(spec)) return builtin_coin(spec);
  if (!fs::exists(spec)) throw ConfigError("unknown coin '" + spec + "' (not a builtin name or a file)");
  return load_coin(spec);
}

PositionState resolve_init(const std::string& spec) {
  if (spec == "psi1") return grover_stationary_states().psi1;
  if (spec == "psi2") return grover_stationary_states().psi2;
  if (spec == "revival") return revival_state();
  if (spec == "origin_symmetric") return origin_symmetric_state();
  if (spec.rfind("basis:", 0) == 0) {
    const auto c = parse_component(spec.substr(6));
    if (!c) throw ConfigError("unknown basis component in '" + spec + "'");
    return make_basis_state({0, 0}, *c);
  }
  if (!fs::exists(spec)) throw ConfigError("unknown initial state '" + spec + "'");
  try {
    return load_state(spec);
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  }
}

void validate_tol(double tol) {
  if (!(tol >= 1e-12 && tol <= 1e-4)) throw ConfigError("--tol must lie in [1e-12, 1e-4]");
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  return f;
}

void write_json(const fs::path& path, const nlohmann::json& j) {
  auto f = open_output(path);
  f << j.dump(2) << '\n';
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto coin = resolve_coin(cfg.coin_spec);
  const auto initial = resolve_init(cfg.init_spec);
  if (cfg.lattice % 2 != 0) throw ConfigError("--lattice must be even");
  const auto final_state = cfg.lattice ? evolve_momentum(initial, coin, {cfg.steps, cfg.lattice})
                                       : evolve(initial, coin, cfg.steps);
  save_state(cfg.out / "state.csv", final_state);
  const double total = squared_norm(final_state);
  std::string fid = "n/a";
  if (std::abs(norm(initial) - 1.0) <= kFidelityNormSlack && std::abs(norm(final_state) - 1.0) <= kFidelityNormSlack) {
    auto f = open_output(cfg.out / "distribution.csv");
    write_distribution_csv(f, final_state);
    fid = fmt(fidelity(initial, final_state));
  } else {
    err << "state is not normalized; distribution.csv not written\n";
    return kExitFailure;
  }
  out << "total_probability=" << fmt(total) << " support=" << final_state.size() << " fidelity_to_initial=" << fid
      << '\n';
  return kExitOk;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto coin = resolve_coin(cfg.coin_spec);
  const double tol = cfg.tol > 0 ? cfg.tol : kDefaultSpectralTolerance;
  validate_tol(tol);
  if (cfg.grid < 8) throw ConfigError("--grid must be at least 8");
  const auto report = detect_constant_eigenvalues(coin, cfg.grid, tol);
  const auto profile = char_poly_profile(coin, cfg.grid);
  write_json(cfg.out / "spectrum.json", to_json(report, profile));
  out << "constants=" << report.constants.size();
  for (const auto& c : report.constants) out << " (" << fmt(c.value.real()) << "," << fmt(c.value.imag()) << ")";
  out << " pairing_ok=" << (report.pairing_ok ? "true" : "false") << " c_zero=" << (profile.c_zero ? "true" : "false")
      << " all_constant=" << (report.all_constant ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_stationary(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto coin = resolve_coin(cfg.coin_spec);
  const auto [re, im] = parse_pair(cfg.lambda, "--lambda");
  const Amplitude lambda(re, im);
  if (std::abs(std::abs(lambda) - 1.0) > 1e-10) throw ConfigError("--lambda must have unit modulus");
  const auto [om, on] = parse_pair(cfg.box_origin, "--origin");
  if (om != std::floor(om) || on != std::floor(on)) throw ConfigError("--origin must be integer");
  const SiteBox box{{static_cast<std::int64_t>(om), static_cast<std::int64_t>(on)}, cfg.box};
  const auto set = find_local_stationary_states(coin, lambda, box);
  for (std::size_t i = 0; i < set.states.size(); ++i)
    save_state(cfg.out / ("stationary_" + std::to_string(i) + ".csv"), set.states[i]);
  out << "stationary_states=" << set.states.size() << '\n';
  return kExitOk;
}

int cmd_revival(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto coin = resolve_coin(cfg.coin_spec);
  const auto initial = resolve_init(cfg.init_spec);
  const double tol = cfg.tol > 0 ? cfg.tol : 1e-10;
  validate_tol(tol);
  try {
    require_normalized(initial);
  } catch (const NormalizationError& e) {
    throw ConfigError(std::string("--init: ") + e.what());
  }
  const auto report = detect_period(initial, coin, cfg.t_max, tol);
  write_json(cfg.out / "revival.json", to_json(report));

  const bool at_origin = initial.size() == 1 && initial.sites().front().point == LatticePoint{0, 0};
  std::optional<double> last_return;
  if (at_origin) {
    const auto series = return_probability_series(initial, coin, cfg.t_max);
    auto f = open_output(cfg.out / "return_probability.csv");
    f << "t,prob\n";
    for (std::size_t t = 0; t < series.size(); ++t) f << t << ',' << fmt(series[t]) << '\n';
    last_return = series.back();
  } else {
    err << "initial state is not supported only at the origin; return_probability.csv skipped\n";
  }

  out << "period=" << (report.period ? std::to_string(*report.period) : std::string("none"));
  if (report.phase) out << " phase=(" << fmt(report.phase->real()) << "," << fmt(report.phase->imag()) << ")";
  if (last_return) out << " return_probability_final=" << fmt(*last_return);
  out << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Four-state quantum walks on the square lattice", "qwalk"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--coin", cfg.coin_spec, "Builtin coin (grover, hadamard4, dft4, swap) or coin file");
    sub->add_option("--out", cfg.out, "Output directory");
  };
  auto add_init = [&](CLI::App* sub) {
    sub->add_option("--init", cfg.init_spec,
                    "psi1, psi2, revival, origin_symmetric, basis:R|L|U|D, or a state CSV file");
  };

  auto* simulate = app.add_subcommand("simulate", "Evolve a state and write it with its position distribution");
  add_common(simulate);
  add_init(simulate);
  simulate->add_option("--steps", cfg.steps, "Number of walk steps");
  simulate->add_option("--lattice", cfg.lattice, "Use the momentum path on an N x N periodic box (even N)");

  auto* spectrum = app.add_subcommand("spectrum", "Momentum-independent eigenvalues and char-poly profile");
  add_common(spectrum);
  spectrum->add_option("--grid", cfg.grid, "Momentum grid size M");
  spectrum->add_option("--tol", cfg.tol, "Constancy tolerance");

  auto* stationary = app.add_subcommand("stationary", "Search box-supported stationary states");
  add_common(stationary);
  stationary->add_option("--lambda", cfg.lambda, "Eigenvalue as re,im");
  stationary->add_option("--box", cfg.box, "Box side s")->check(CLI::PositiveNumber);
  stationary->add_option("--origin", cfg.box_origin, "Lower-left box corner as m,n");

  auto* revival = app.add_subcommand("revival", "Revival period and return probability");
  add_common(revival);
  add_init(revival);
  revival->add_option("--tmax", cfg.t_max, "Maximum number of steps")->check(CLI::PositiveNumber);
  revival->add_option("--tol", cfg.tol, "Fidelity tolerance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (simulate->parsed()) cfg.command = Command::simulate;
  if (spectrum->parsed()) cfg.command = Command::spectrum;
  if (stationary->parsed()) cfg.command = Command::stationary;
  if (revival->parsed()) cfg.command = Command::revival;

  try {
    std::error_code ec;
    fs::create_directories(cfg.out, ec);
    if (ec) throw ConfigError("cannot create output directory " + cfg.out.string());
    switch (cfg.command) {
      case Command::simulate: return cmd_simulate(cfg, out, err);
      case Command::spectrum: return cmd_spectrum(cfg, out, err);
      case Command::stationary: return cmd_stationary(cfg, out, err);
      case Command::revival: return cmd_revival(cfg, out, err);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const CoinValidationError& e) {
    err << "coin error: " << e.what() << '\n';
    return kExitCoin;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace qwalk::cli
