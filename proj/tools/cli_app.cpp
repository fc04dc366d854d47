#include "cli_app.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgp/asymmetry.hpp"
#include "cgp/coherence.hpp"
#include "cgp/errors.hpp"
#include "cgp/fixtures.hpp"
#include "cgp/generating_power.hpp"
#include "cgp/json_io.hpp"
#include "cgp/parallel.hpp"
#include "cgp/protocol.hpp"
#include "cgp/statistics.hpp"

namespace cgp::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kDefaultMcSamples = 100000;
constexpr std::size_t kDefaultCgpSamples = 100000;
constexpr std::size_t kDefaultScalingSamples = 10000;

int require_dim(const RunConfig& c) {
  if (!c.dim) throw InputError("--dim is required for this command");
  if (*c.dim < 1) throw InputError("--dim must be >= 1");
  return *c.dim;
}

std::size_t samples_or(const RunConfig& c, std::size_t fallback) {
  const std::size_t n = c.samples.value_or(fallback);
  if (n < 1) throw InputError("--samples must be >= 1");
  return n;
}

CMat fixture_matrix(const RunConfig& c) {
  const int d = require_dim(c);
  std::optional<std::pair<int, int>> rows;
  if (c.rowswap) {
    const auto [a, b] = *c.rowswap;
    if (a < 1 || b < 1 || a > d || b > d) throw InputError("--rowswap rows must lie in 1..dim");
    rows = std::pair{a - 1, b - 1};
  }
  return fixtures::by_name(*c.fixture, d, RngSeed{c.seed}, rows);
}

bool has_unitary_source(const RunConfig& c) { return c.fixture.has_value() || c.input_path.has_value(); }

// Square matrix from --in (matrix JSON) or a fixture flag.
CMat load_matrix(const RunConfig& c) {
  if (c.fixture) return fixture_matrix(c);
  if (!c.input_path) throw InputError("an input is required: --in FILE or a fixture flag");
  const CMat m = io::matrix_from_json(io::read_json_file(*c.input_path));
  if (m.rows() != m.cols()) throw InputError("matrix: fields 'd_rows' and 'd_cols' must be equal");
  return m;
}

// Channel from --in (Kraus JSON or a single matrix) or a fixture unitary.
KrausChannel load_channel(const RunConfig& c) {
  if (c.fixture) return KrausChannel::from_unitary(fixture_matrix(c));
  if (!c.input_path) throw InputError("an input is required: --in FILE or a fixture flag");
  const json j = io::read_json_file(*c.input_path);
  if (j.is_object() && j.contains("kraus")) return io::kraus_from_json(j);
  const CMat m = io::matrix_from_json(j);
  if (m.rows() != m.cols()) throw InputError("matrix: fields 'd_rows' and 'd_cols' must be equal");
  return KrausChannel::from_unitary(m);
}

json cgp_json(const CgpResult& r) {
  return json{{"dim", r.dim}, {"raw", r.raw}, {"normalized", r.normalized}, {"bound", r.bound}};
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot open output file '" + path + "'");
  f << text;
  if (!f) throw NumericalError("failed writing '" + path + "'");
}

std::string histogram_csv(const DistributionSummary& s) {
  std::ostringstream os;
  os << std::setprecision(17) << "bin_left,bin_right,density\n";
  for (const auto& b : s.histogram) os << b.left << ',' << b.right << ',' << b.density << '\n';
  return os.str();
}

std::string samples_csv(const std::vector<double>& values) {
  std::ostringstream os;
  os << std::setprecision(17) << "sample_index,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) os << i << ',' << values[i] << '\n';
  return os.str();
}

int cmd_unitary(const RunConfig& c, std::ostream& out) {
  const CMat u = load_matrix(c);
  json j = cgp_json(cgp_unitary(u));
  j["is_mub"] = is_mub_pair(u);
  j["incoherent"] = is_incoherent_unitary(u).has_value();
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_channel(const RunConfig& c, std::ostream& out) {
  const KrausChannel e = load_channel(c);
  json j = cgp_json(cgp_channel(e));
  j["kraus_count"] = e.size();
  j["incoherent"] = is_incoherent_channel(e);
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_protocol(const RunConfig& c, std::ostream& out) {
  const KrausChannel e = load_channel(c);
  const ProtocolTrace t = e.size() == 1 ? simulate_protocol_unitary(e.kraus()[0])
                                        : simulate_protocol_channel(e);
  json j{{"dim", t.dim},
         {"s_omega", t.s_expectation_omega},
         {"s_omega_tilde", t.s_expectation_omega_tilde},
         {"cgp", t.cgp_value},
         {"mc_mean", nullptr},
         {"mc_se", nullptr}};
  if (c.monte_carlo) {
    const MonteCarloEstimate mc = monte_carlo_cgp(e, samples_or(c, kDefaultMcSamples), RngSeed{c.seed});
    j["mc_mean"] = mc.mean;
    j["mc_se"] = mc.std_error;
    j["mc_samples"] = mc.n_samples;
    j["seed"] = c.seed;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_sample(const RunConfig& c, std::ostream& out) {
  const int d = require_dim(c);
  if (d < 2) throw InputError("--dim must be >= 2 for sampling");
  if (c.bins < 1) throw InputError("--bins must be >= 1");
  const std::size_t n = samples_or(c, kDefaultCgpSamples);
  const auto values = sample_normalized_cgp(d, n, RngSeed{c.seed});
  const DistributionSummary s = summarize_distribution(d, values, c.bins, RngSeed{c.seed});
  if (c.dump_path) write_text_file(*c.dump_path, samples_csv(values));
  if (c.output_path) write_text_file(*c.output_path, histogram_csv(s));
  if (c.format == Format::csv && !c.output_path) {
    out << histogram_csv(s);
    return kExitOk;
  }
  json j{{"dim", d},
         {"n_samples", s.n_samples},
         {"seed", c.seed},
         {"bins", c.bins},
         {"mean_normalized", s.mean},
         {"variance_normalized", s.variance},
         {"analytic_mean_normalized", analytic_normalized_mean(d)},
         {"mean_raw", s.mean * max_cgp(d)},
         {"analytic_mean_raw", analytic_mean(d)}};
  if (d == 2) j["ks_d2"] = ks_test_d2(values);
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_scaling(const RunConfig& c, std::ostream& out) {
  if (c.dims.empty()) throw InputError("--dims is required for scaling");
  const ScalingFit fit = variance_scaling_fit(c.dims, samples_or(c, kDefaultScalingSamples), RngSeed{c.seed});
  out << json{{"dims", fit.dims},
              {"variances", fit.variances},
              {"exponent", fit.exponent},
              {"amplitude", fit.amplitude},
              {"samples_per_dim", samples_or(c, kDefaultScalingSamples)},
              {"seed", c.seed}}
             .dump(2)
      << '\n';
  return kExitOk;
}

int cmd_moments(const RunConfig& c, std::ostream& out) {
  const int d = require_dim(c);
  if (d < 2) throw InputError("--dim must be >= 2 for sampling");
  const std::size_t n = samples_or(c, kDefaultScalingSamples);
  if (n < 2) throw InputError("--samples must be >= 2 for moments");
  const auto values = sample_normalized_cgp(d, n, RngSeed{c.seed});
  const Moments m = moments_summary(values);
  const LevyBound levy = levy_bound(d);
  const auto above = std::count_if(values.begin(), values.end(),
                                   [&](double v) { return v >= levy.threshold; });
  out << json{{"dim", d},
              {"n_samples", n},
              {"seed", c.seed},
              {"mean", m.mean},
              {"variance", m.variance},
              {"skewness", m.skewness},
              {"excess_kurtosis", m.excess_kurtosis},
              {"analytic_mean", analytic_normalized_mean(d)},
              {"levy_threshold", levy.threshold},
              {"levy_prob_lower_bound", levy.prob_lower_bound},
              {"fraction_above_threshold", static_cast<double>(above) / static_cast<double>(n)}}
             .dump(2)
      << '\n';
  return kExitOk;
}

int cmd_scan(const RunConfig& c, std::ostream& out) {
  if (!c.input_path) throw InputError("--in FILE with three unitaries is required for scan");
  const auto us = io::unitaries_from_json(io::read_json_file(*c.input_path));
  if (us.size() != 3) throw InputError("unitaries: exactly three matrices required");
  if (c.steps < 1) throw InputError("--steps must be >= 1");
  const auto rows = mixture_scan(us, c.steps);
  std::ostringstream csv;
  csv << std::setprecision(17) << "p1,p2,p3,normalized_cgp\n";
  for (const auto& r : rows) csv << r.p1 << ',' << r.p2 << ',' << r.p3 << ',' << r.normalized_cgp << '\n';
  if (c.output_path) write_text_file(*c.output_path, csv.str());
  if (c.format == Format::csv && !c.output_path) {
    out << csv.str();
    return kExitOk;
  }
  json vertices = json::array();
  for (const auto& u : us) vertices.push_back(cgp_unitary(u).normalized);
  json j{{"steps", c.steps}, {"rows", rows.size()}, {"vertex_normalized_cgp", vertices}};
  if (!c.output_path) {
    json table = json::array();
    for (const auto& r : rows) table.push_back({r.p1, r.p2, r.p3, r.normalized_cgp});
    j["table"] = std::move(table);
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_agp(const RunConfig& c, std::ostream& out) {
  if (c.spectrum.empty()) throw InputError("--spectrum is required for agp");
  const HamiltonianSpectrum h(c.spectrum);
  const KrausChannel e = load_channel(c);
  const AgpResult r = agp(e, h);
  json j{{"dim", e.dim()},
         {"agp", r.value},
         {"lower_bound", r.lower_bound},
         {"upper_bound", r.upper_bound},
         {"cgp", cgp_channel(e).raw},
         {"min_gap", h.min_gap()},
         {"max_gap", h.max_gap()}};
  if (c.monte_carlo) {
    const MonteCarloEstimate mc = agp_monte_carlo(e, h, samples_or(c, kDefaultMcSamples), RngSeed{c.seed});
    j["mc_mean"] = mc.mean;
    j["mc_se"] = mc.std_error;
    j["mc_samples"] = mc.n_samples;
    j["seed"] = c.seed;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_fixtures(const RunConfig& c, std::ostream& out) {
  if (!c.fixture) throw InputError("fixtures: choose a generator flag (--fourier, --identity, ...)");
  const std::string text = io::matrix_to_json(fixture_matrix(c)).dump() + "\n";
  if (c.output_path) {
    write_text_file(*c.output_path, text);
  } else {
    out << text;
  }
  return kExitOk;
}

void validate(const RunConfig& c) {
  switch (c.command) {
    case Command::unitary:
    case Command::channel:
    case Command::protocol:
    case Command::agp:
      if (!has_unitary_source(c)) throw InputError("an input is required: --in FILE or a fixture flag");
      if (c.fixture) require_dim(c);
      break;
    case Command::sample:
    case Command::moments:
      require_dim(c);
      break;
    case Command::scaling:
      if (c.dims.empty()) throw InputError("--dims is required for scaling");
      break;
    case Command::scan:
      if (!c.input_path) throw InputError("--in FILE with three unitaries is required for scan");
      break;
    case Command::fixtures:
      if (!c.fixture) throw InputError("fixtures: choose a generator flag (--fourier, --identity, ...)");
      require_dim(c);
      break;
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    set_thread_count(config.threads);
    switch (config.command) {
      case Command::unitary: return cmd_unitary(config, out);
      case Command::channel: return cmd_channel(config, out);
      case Command::protocol: return cmd_protocol(config, out);
      case Command::sample: return cmd_sample(config, out);
      case Command::scaling: return cmd_scaling(config, out);
      case Command::moments: return cmd_moments(config, out);
      case Command::scan: return cmd_scan(config, out);
      case Command::agp: return cmd_agp(config, out);
      case Command::fixtures: return cmd_fixtures(config, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitNumerical;
}

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherence and asymmetry generating power of unitaries and unital channels"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  std::vector<int> rowswap;
  bool fourier = false, identity = false, hadamard = false, random_haar = false, random_incoherent = false;

  const std::map<std::string, Command> names{
      {"unitary", Command::unitary}, {"channel", Command::channel}, {"protocol", Command::protocol},
      {"sample", Command::sample},   {"scaling", Command::scaling}, {"moments", Command::moments},
      {"scan", Command::scan},       {"agp", Command::agp},         {"fixtures", Command::fixtures}};
  const std::map<std::string, std::string> help{
      {"unitary", "CGP of a unitary"},
      {"channel", "CGP of a unital Kraus channel"},
      {"protocol", "simulate the swap-measurement protocol (optionally with Monte Carlo)"},
      {"sample", "distribution of the normalized CGP over Haar unitaries"},
      {"scaling", "power-law fit of the CGP variance across dimensions"},
      {"moments", "moments and concentration of the normalized CGP"},
      {"scan", "CGP over convex mixtures of three unitaries"},
      {"agp", "asymmetry generating power for a diagonal Hamiltonian"},
      {"fixtures", "emit a built-in unitary as matrix JSON"}};

  for (const auto& [name, command] : names) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->callback([&cfg, command = command] { cfg.command = command; });
    sub->add_option("--dim", cfg.dim, "Hilbert space dimension");
    sub->add_option("--samples", cfg.samples, "number of Monte Carlo samples");
    sub->add_option("--seed", cfg.seed, "master RNG seed")->default_val(0);
    sub->add_option("--bins", cfg.bins, "histogram bins")->default_val(100);
    sub->add_option("--steps", cfg.steps, "grid steps per simplex edge")->default_val(10);
    sub->add_option("--dims", cfg.dims, "comma-separated dimensions")->delimiter(',');
    sub->add_option("--spectrum", cfg.spectrum, "comma-separated Hamiltonian eigenvalues")->delimiter(',');
    sub->add_option("--in", cfg.input_path, "input JSON file");
    sub->add_option("--out", cfg.output_path, "output file (CSV for tables, JSON for fixtures)");
    sub->add_option("--dump", cfg.dump_path, "write raw samples as CSV (sample_index,value)");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--threads", cfg.threads, "worker threads (0 = hardware count)");
    sub->add_flag("--mc", cfg.monte_carlo, "also run the Monte Carlo estimator");
    sub->add_flag("--fourier", fourier, "use the Fourier matrix");
    sub->add_flag("--identity", identity, "use the identity");
    sub->add_flag("--hadamard", hadamard, "use the Hadamard tensor power");
    sub->add_option("--rowswap", rowswap, "Fourier matrix with rows I and J (1-based) swapped")
        ->expected(2);
    sub->add_flag("--random-haar", random_haar, "use a Haar-random unitary (--seed)");
    sub->add_flag("--random-incoherent", random_incoherent, "use a random permutation-phase unitary (--seed)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, out, err);
    return kExitInput;
  }

  cfg.format = format == "csv" ? Format::csv : Format::json;
  const int chosen = int(fourier) + int(identity) + int(hadamard) + int(!rowswap.empty()) +
                     int(random_haar) + int(random_incoherent);
  if (chosen > 1) {
    err << "error: at most one fixture flag may be given\n";
    return kExitInput;
  }
  if (chosen == 1 && cfg.input_path) {
    err << "error: --in and a fixture flag are mutually exclusive\n";
    return kExitInput;
  }
  if (fourier) cfg.fixture = "fourier";
  if (identity) cfg.fixture = "identity";
  if (hadamard) cfg.fixture = "hadamard";
  if (random_haar) cfg.fixture = "random-haar";
  if (random_incoherent) cfg.fixture = "random-permutation-phase";
  if (!rowswap.empty()) {
    cfg.fixture = "fourier-rowswap";
    cfg.rowswap = std::pair{rowswap[0], rowswap[1]};
  }
  return run(cfg, out, err);
}

}  // namespace cgp::cli
