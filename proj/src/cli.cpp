#include "qwalk/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwalk/analysis.hpp"
#include "qwalk/classical.hpp"
#include "qwalk/graph_io.hpp"

#ifndef QWALK_VERSION
#define QWALK_VERSION "dev"
#endif

namespace qwalk::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Largest walker+coin dimension for which every step gets a full eigenvalue
// positivity check; above it only trace and Hermiticity are checked.
constexpr int kSpectrumCheckLimit = 1024;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string read_file(const std::string& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) throw ConfigError(field, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Files are rendered fully in memory, then written to temporaries and renamed
// into place together, so a failed command leaves nothing behind.
class OutputSet {
 public:
  void add(fs::path path, std::string content) {
    files_.emplace_back(std::move(path), std::move(content));
  }

  void commit() {
    std::vector<fs::path> temps;
    try {
      for (const auto& [path, content] : files_) {
        if (path.has_parent_path()) fs::create_directories(path.parent_path());
        fs::path tmp = path;
        tmp += ".tmp-" + std::to_string(::getpid());
        std::ofstream os(tmp, std::ios::binary);
        temps.push_back(tmp);
        os << content;
        os.close();
        if (!os) throw ConfigError("--out", "cannot write " + tmp.string());
      }
    } catch (...) {
      for (const auto& t : temps) fs::remove(t);
      throw;
    }
    for (std::size_t i = 0; i < files_.size(); ++i) fs::rename(temps[i], files_[i].first);
  }

 private:
  std::vector<std::pair<fs::path, std::string>> files_;
};

struct Resolved {
  PortGraph graph;
  CoinOperator coin;
  ShiftOperator shift;
  PureState psi0;
};

PortGraph resolve_graph(const RunConfig& cfg) {
  const int sources = cfg.cycle.has_value() + cfg.graph_path.has_value() + cfg.graph.has_value();
  if (sources != 1) throw ConfigError("--cycle/--graph", "give exactly one graph source");
  if (cfg.cycle) return build_cycle(*cfg.cycle);
  if (cfg.graph_path) return load_graph_file(*cfg.graph_path);
  return *cfg.graph;
}

ShiftKind shift_kind(const RunConfig& cfg) {
  return cfg.shift.value_or(cfg.cycle ? ShiftKind::DirectionPreserving : ShiftKind::PortSwap);
}

Resolved resolve(const RunConfig& cfg) {
  PortGraph graph = resolve_graph(cfg);
  CoinOperator coin = [&] {
    try {
      return build_coin_operator(graph, cfg.coin.resolve(graph));
    } catch (const DomainError& e) {
      throw ConfigError("--coin", e.what());
    }
  }();
  const ShiftKind kind = shift_kind(cfg);
  if (kind == ShiftKind::DirectionPreserving && !cfg.cycle) {
    throw ConfigError("--shift", "direction-preserving shift requires --cycle");
  }
  ShiftOperator shift = kind == ShiftKind::PortSwap
                            ? build_shift(graph)
                            : build_cycle_shift(graph.num_vertices(), cfg.convention);
  if (!graph.is_used(cfg.start_vertex, cfg.start_port)) {
    throw ConfigError("--start", "(" + std::to_string(cfg.start_vertex) + "," +
                                     std::to_string(cfg.start_port) +
                                     ") is not a used port of the graph");
  }
  PureState psi0 = basis_state(graph, cfg.start_vertex, cfg.start_port);
  return {std::move(graph), std::move(coin), std::move(shift), std::move(psi0)};
}

void check_unit_interval(double x, const char* field) {
  if (!(x >= 0.0 && x <= 1.0)) throw ConfigError(field, "must lie in [0,1], got " + num(x));
}

void validate_common(const RunConfig& cfg) {
  check_unit_interval(cfg.beta, "--beta");
  check_unit_interval(cfg.vertex_dephasing, "--vertex-dephasing");
  if (cfg.steps < 0) throw ConfigError("--steps", "must be >= 0");
  if (cfg.jobs < 1) throw ConfigError("--jobs", "must be >= 1");
  if (cfg.out.empty()) throw ConfigError("--out", "output path is required");
}

StepMap make_step(const RunConfig& cfg, const Resolved& r) {
  if (cfg.beta == 0.0 && cfg.vertex_dephasing == 0.0) return make_unitary_step(r.coin, r.shift);
  return make_measured_step(r.coin, r.shift, cfg.beta, cfg.vertex_dephasing, cfg.placement);
}

std::vector<Distribution> checked_marginals(const Resolved& r, const StepMap& step, int steps) {
  const bool spectrum = r.psi0.dims().size() <= kSpectrumCheckLimit;
  const Tolerances tol;
  std::vector<Distribution> out;
  run(r.psi0, step, steps, [&](int t, const DensityOperator& rho) {
    const DensityReport rep = inspect_density(rho.matrix(), spectrum);
    if (!rep.ok(tol)) {
      throw NumericalError("density invariant violated at t=" + std::to_string(t) +
                           " (trace error " + num(rep.trace_error) + ", hermiticity error " +
                           num(rep.hermiticity_error) + ", min eigenvalue " +
                           num(rep.min_eigenvalue) + ")");
    }
    out.push_back(position_marginal(rho, tol));
  });
  return out;
}

// --- config (de)serialization ----------------------------------------------

json config_to_json(const RunConfig& cfg, const PortGraph& graph) {
  json j;
  if (cfg.cycle) {
    j["graph"] = {{"cycle", *cfg.cycle}};
  } else {
    j["graph"] = json::parse(graph_to_json(graph));
  }
  j["coin"] = json::parse(coin_to_json(cfg.coin));
  j["shift"] = to_string(shift_kind(cfg));
  j["cycle_convention"] = to_string(cfg.convention);
  j["beta"] = cfg.beta;
  j["vertex_dephasing"] = cfg.vertex_dephasing;
  j["vertex_dephasing_placement"] = to_string(cfg.placement);
  j["steps"] = cfg.steps;
  j["start"] = {cfg.start_vertex, cfg.start_port};
  if (cfg.seed) j["seed"] = *cfg.seed;
  j["betas"] = cfg.betas;
  j["t_max"] = cfg.t_max;
  j["epsilon"] = cfg.epsilon;
  j["samples"] = cfg.samples;
  return j;
}

template <typename T>
void read_field(const json& j, const char* key, T& dst) {
  if (!j.contains(key)) return;
  try {
    dst = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config.") + key, e.what());
  }
}

RunConfig config_from_json(const json& j) {
  RunConfig cfg;
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");
  const json& root = j.contains("config") ? j.at("config") : j;
  if (root.contains("graph")) {
    const json& g = root.at("graph");
    if (g.contains("cycle")) {
      cfg.cycle = g.at("cycle").get<int>();
    } else {
      cfg.graph = parse_graph_json(g.dump());
    }
  }
  if (root.contains("coin")) cfg.coin = parse_coin_json(root.at("coin").dump());
  if (root.contains("shift")) {
    const auto s = root.at("shift").get<std::string>();
    if (s == "port-swap") cfg.shift = ShiftKind::PortSwap;
    else if (s == "direction-preserving") cfg.shift = ShiftKind::DirectionPreserving;
    else throw ConfigError("config.shift", "unknown shift \"" + s + "\"");
  }
  if (root.contains("cycle_convention")) {
    cfg.convention = root.at("cycle_convention") == "coin-0-retreats"
                         ? CycleConvention::ZeroRetreats
                         : CycleConvention::ZeroAdvances;
  }
  if (root.contains("vertex_dephasing_placement")) {
    cfg.placement = root.at("vertex_dephasing_placement") == "after-shift"
                        ? DephasingPlacement::AfterShift
                        : DephasingPlacement::BeforeShift;
  }
  read_field(root, "beta", cfg.beta);
  read_field(root, "vertex_dephasing", cfg.vertex_dephasing);
  read_field(root, "steps", cfg.steps);
  if (root.contains("start")) {
    const json& s = root.at("start");
    if (!s.is_array() || s.size() != 2) throw ConfigError("config.start", "expected [j, k]");
    cfg.start_vertex = s[0].get<int>();
    cfg.start_port = s[1].get<int>();
  }
  if (root.contains("seed")) cfg.seed = root.at("seed").get<std::uint64_t>();
  read_field(root, "betas", cfg.betas);
  read_field(root, "t_max", cfg.t_max);
  read_field(root, "epsilon", cfg.epsilon);
  read_field(root, "samples", cfg.samples);
  return cfg;
}

json metadata(const std::string& command, const RunConfig& cfg, const Resolved& r) {
  const Tolerances tol;
  json zeta = json::array();
  for (const Edge& e : r.graph.to_edge_list()) {
    zeta.push_back({e.a.vertex, e.a.port, e.b.vertex, e.b.port});
  }
  json meta;
  meta["tool"] = "qwalk";
  meta["version"] = QWALK_VERSION;
  meta["command"] = command;
  meta["config"] = config_to_json(cfg, r.graph);
  meta["zeta"] = zeta;
  meta["tensor_order"] = "coin (x) meter";
  meta["coin_block_convention"] = "C|k> = sum_q block(q,k)|q>";
  meta["basis_index"] = "vertex * degree + port";
  meta["tolerances"] = {{"norm", tol.norm},
                        {"trace", tol.trace},
                        {"hermiticity", tol.hermiticity},
                        {"positivity", tol.positivity},
                        {"marginal_clamp", tol.marginal_clamp},
                        {"unitarity", tol.unitarity}};
  meta["rng"] = kRngAlgorithm;
  meta["interference_proxies"] = {"coherence_l1", "tvd_to_classical"};
  meta["warnings"] = r.graph.warnings();
  return meta;
}

fs::path sidecar(const std::string& out) { return fs::path(out + ".meta.json"); }

// --- commands ---------------------------------------------------------------

void cmd_run(const RunConfig& cfg, std::ostream& log) {
  validate_common(cfg);
  const Resolved r = resolve(cfg);
  const auto marginals = checked_marginals(r, make_step(cfg, r), cfg.steps);

  std::string csv = "t,vertex,probability\n";
  for (std::size_t t = 0; t < marginals.size(); ++t) {
    for (std::size_t j = 0; j < marginals[t].size(); ++j) {
      csv += std::to_string(t) + "," + std::to_string(j) + "," + num(marginals[t][j]) + "\n";
    }
  }
  OutputSet files;
  files.add(cfg.out, std::move(csv));
  files.add(sidecar(cfg.out), metadata("run", cfg, r).dump(2) + "\n");
  files.commit();
  log << "wrote " << cfg.out << "\n";
}

void cmd_sweep(RunConfig cfg, std::ostream& log) {
  validate_common(cfg);
  if (cfg.betas.empty()) throw ConfigError("--betas", "give --betas or --beta-grid");
  for (double b : cfg.betas) check_unit_interval(b, "--betas");
  std::sort(cfg.betas.begin(), cfg.betas.end());
  const Resolved r = resolve(cfg);
  const StepTemplate tmpl{r.coin, r.shift, cfg.vertex_dephasing, cfg.placement};
  const auto points = complementarity_sweep(tmpl, cfg.start_vertex, cfg.start_port, cfg.steps,
                                            cfg.betas, cfg.jobs);

  std::string csv =
      "beta,visibility,distinguishability,tvd_to_unitary,tvd_to_classical,coherence_l1\n";
  for (const auto& p : points) {
    csv += num(p.beta) + "," + num(p.visibility) + "," + num(p.distinguishability) + "," +
           num(p.tvd_to_unitary) + "," + num(p.tvd_to_classical) + "," + num(p.coherence) + "\n";
  }
  OutputSet files;
  files.add(cfg.out, std::move(csv));
  files.add(sidecar(cfg.out), metadata("sweep", cfg, r).dump(2) + "\n");
  files.commit();
  log << "wrote " << cfg.out << " (" << points.size() << " points)\n";
}

void cmd_mix(RunConfig cfg, std::ostream& log) {
  if (cfg.t_max < 1) throw ConfigError("--t-max", "must be >= 1");
  if (!(cfg.epsilon > 0.0 && cfg.epsilon <= 1.0)) {
    throw ConfigError("--epsilon", "must lie in (0,1], got " + num(cfg.epsilon));
  }
  cfg.steps = cfg.t_max;
  validate_common(cfg);
  const Resolved r = resolve(cfg);
  const auto quantum = checked_marginals(r, make_step(cfg, r), cfg.t_max);

  std::vector<Distribution> classical{Distribution::delta(r.graph.num_vertices(), cfg.start_vertex)};
  for (int t = 0; t < cfg.t_max; ++t) classical.push_back(classical_step(classical.back(), r.graph));

  const MixingCurve q_avg = mixing_curve(quantum, MixingVariant::TimeAveraged);
  const MixingCurve q_inst = mixing_curve(quantum, MixingVariant::Instantaneous);
  const MixingCurve c_inst = mixing_curve(classical, MixingVariant::Instantaneous);
  const MixingCurve c_avg = mixing_curve(classical, MixingVariant::TimeAveraged);

  std::string csv =
      "t,quantum_time_averaged,quantum_instantaneous,classical,classical_time_averaged\n";
  for (std::size_t t = 0; t < q_avg.times.size(); ++t) {
    csv += std::to_string(t) + "," + num(q_avg.tvd_to_uniform[t]) + "," +
           num(q_inst.tvd_to_uniform[t]) + "," + num(c_inst.tvd_to_uniform[t]) + "," +
           num(c_avg.tvd_to_uniform[t]) + "\n";
  }

  const auto qc = first_crossing(q_avg, cfg.epsilon);
  const auto cc = first_crossing(c_inst, cfg.epsilon);
  auto as_json = [](std::optional<int> t) { return t ? json(*t) : json("no crossing"); };
  std::string first;
  if (qc && (!cc || *qc < *cc)) first = "quantum";
  else if (cc && (!qc || *cc < *qc)) first = "classical";
  else if (qc && cc) first = "tie";
  else first = "neither";

  json meta = metadata("mix", cfg, r);
  meta["crossing"] = {{"epsilon", cfg.epsilon},
                      {"quantum_time_averaged", as_json(qc)},
                      {"classical", as_json(cc)},
                      {"quantum_instantaneous", as_json(first_crossing(q_inst, cfg.epsilon))},
                      {"classical_time_averaged", as_json(first_crossing(c_avg, cfg.epsilon))},
                      {"first", first}};
  OutputSet files;
  files.add(cfg.out, std::move(csv));
  files.add(sidecar(cfg.out), meta.dump(2) + "\n");
  files.commit();
  log << "quantum (time-averaged) crossing: " << as_json(qc).dump()
      << ", classical crossing: " << as_json(cc).dump() << ", first: " << first << "\n";
}

void cmd_trajectory(RunConfig cfg, std::ostream& log) {
  validate_common(cfg);
  if (cfg.beta <= 0.0) {
    throw ConfigError("--beta",
                      "trajectory sampling needs a coin measurement (beta > 0); with beta = 0 "
                      "there is a single branch, use `qwalk run` instead");
  }
  if (cfg.vertex_dephasing != 0.0 && cfg.vertex_dephasing != 1.0) {
    throw ConfigError("--vertex-dephasing", "trajectories support only 0 or 1");
  }
  if (cfg.samples < 1) throw ConfigError("--samples", "must be >= 1");
  if (!cfg.seed) cfg.seed = (std::uint64_t{std::random_device{}()} << 32) ^ std::random_device{}();

  const Resolved r = resolve(cfg);
  const StepMap step = make_step(cfg, r);
  const int n = r.graph.num_vertices();
  const bool reconstruct = cfg.cycle && shift_kind(cfg) == ShiftKind::DirectionPreserving &&
                           cfg.beta == 1.0;

  std::vector<Trajectory> samples(cfg.samples, Trajectory{r.psi0, {}});
  parallel_for(cfg.samples, cfg.jobs, [&](int i) {
    samples[i] = sample_trajectory(r.psi0, step, cfg.steps, derive_seed(*cfg.seed, i));
  });

  std::string records =
      "sample,seed,step,outcome,probability,vertex_outcome,position,reconstructed_vertex\n";
  std::vector<double> counts(n, 0.0);
  for (int i = 0; i < cfg.samples; ++i) {
    const TrajectoryRecord& rec = samples[i].record;
    std::vector<int> path;
    if (reconstruct) path = reconstruct_cycle_path(cfg.start_vertex, rec.outcomes, n, cfg.convention);
    for (std::size_t s = 0; s < rec.outcomes.size(); ++s) {
      records += std::to_string(i) + "," + std::to_string(rec.seed) + "," + std::to_string(s + 1) +
                 "," + std::to_string(rec.outcomes[s]) + "," + num(rec.outcome_probabilities[s]) +
                 "," + (rec.vertex_outcomes.empty() ? "" : std::to_string(rec.vertex_outcomes[s])) +
                 "," + std::to_string(rec.positions[s]) + "," +
                 (reconstruct ? std::to_string(path[s + 1]) : "") + "\n";
    }
    const Distribution p = position_marginal(samples[i].state);
    for (int j = 0; j < n; ++j) counts[j] += p[j];
  }

  const Distribution oracle = position_marginal(run(r.psi0, step, cfg.steps));
  std::vector<double> freq(n);
  for (int j = 0; j < n; ++j) freq[j] = counts[j] / cfg.samples;
  const double distance = tvd(Distribution(freq), oracle);

  std::string hist = "vertex,weight,frequency,oracle\n";
  for (int j = 0; j < n; ++j) {
    hist += std::to_string(j) + "," + num(counts[j]) + "," + num(freq[j]) + "," + num(oracle[j]) +
            "\n";
  }
  json meta = metadata("trajectory", cfg, r);
  meta["records_file"] = fs::path(cfg.out + ".records.csv").filename().string();
  meta["sample_seed_rule"] = "splitmix64(seed + index)";
  meta["tvd_to_density_oracle"] = distance;

  OutputSet files;
  files.add(cfg.out, std::move(hist));
  files.add(cfg.out + ".records.csv", std::move(records));
  files.add(sidecar(cfg.out), meta.dump(2) + "\n");
  files.commit();
  log << "wrote " << cfg.samples << " trajectories, histogram TVD to density oracle " << num(distance)
      << "\n";
}

// --- argument parsing -------------------------------------------------------

std::vector<double> parse_beta_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("--betas", "not a number: \"" + item + "\"");
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(CLI::App& app) : app_(app) {}

  CLI::App* subcommand(const std::string& name, const std::string& help) {
    CLI::App* sub = app_.add_subcommand(name, help);
    sub->add_option("--config", config_path_, "JSON config or metadata sidecar to start from");
    add(sub, "--cycle", &RunConfig::cycle, "built-in cycle with N vertices");
    add(sub, "--graph", &RunConfig::graph_path, "graph JSON file");
    sub->add_option("--coin", coin_args_, "hadamard | dft | custom FILE")->expected(1, 2);
    sub->add_option("--phi", phi_, "phase of the generalized Hadamard coin (radians)");
    sub->add_option("--shift", shift_, "port-swap | direction-preserving")
        ->check(CLI::IsMember({"port-swap", "direction-preserving"}));
    sub->add_option("--convention", convention_, "cycle orientation: advance | retreat")
        ->check(CLI::IsMember({"advance", "retreat"}));
    add(sub, "--beta", &RunConfig::beta, "coin measurement strength in [0,1]");
    add(sub, "--vertex-dephasing", &RunConfig::vertex_dephasing, "vertex dephasing p in [0,1]");
    sub->add_option("--placement", placement_, "vertex dephasing: before-shift | after-shift")
        ->check(CLI::IsMember({"before-shift", "after-shift"}));
    add(sub, "--steps", &RunConfig::steps, "number of time steps");
    sub->add_option("--start", start_, "initial basis state J,K");
    add(sub, "--seed", &RunConfig::seed, "RNG seed");
    add(sub, "--jobs", &RunConfig::jobs, "worker threads");
    add(sub, "--out", &RunConfig::out, "output CSV path (metadata goes to PATH.meta.json)");
    return sub;
  }

  template <typename T>
  void add(CLI::App* sub, const std::string& flag, T RunConfig::*field, const std::string& help) {
    CLI::Option* opt = sub->add_option(flag, given_.*field, help);
    overrides_.push_back({opt, [field](RunConfig& dst, const RunConfig& src) {
                            dst.*field = src.*field;
                          }});
  }

  RunConfig finish(const CLI::App* sub) const {
    RunConfig cfg;
    if (!config_path_.empty()) {
      const std::string text = read_file(config_path_, "--config");
      json j;
      try {
        j = json::parse(text);
      } catch (const json::parse_error& e) {
        throw ConfigError("--config", e.what());
      }
      cfg = config_from_json(j);
    }
    for (const auto& [opt, copy] : overrides_) {
      if (opt->count() > 0) copy(cfg, given_);
    }
    if (sub->count("--cycle") || sub->count("--graph")) {
      // A graph flag replaces any graph that came from the config file.
      if (!sub->count("--cycle")) cfg.cycle.reset();
      if (!sub->count("--graph")) cfg.graph_path.reset();
      cfg.graph.reset();
    }
    if (sub->count("--coin")) {
      const std::string& type = coin_args_.front();
      if (type == "hadamard") {
        cfg.coin = CoinConfig{};
      } else if (type == "dft") {
        cfg.coin = CoinConfig{CoinConfig::Type::Dft, 0.0, {}};
      } else if (type == "custom") {
        if (coin_args_.size() != 2) throw ConfigError("--coin", "custom needs a FILE");
        cfg.coin = parse_coin_json(read_file(coin_args_[1], "--coin"));
      } else {
        throw ConfigError("--coin", "unknown coin \"" + type + "\"");
      }
    }
    if (sub->count("--phi")) {
      if (cfg.coin.type != CoinConfig::Type::Hadamard) {
        throw ConfigError("--phi", "only applies to the hadamard coin");
      }
      cfg.coin.phi = phi_;
    }
    if (sub->count("--shift")) {
      cfg.shift = shift_ == "port-swap" ? ShiftKind::PortSwap : ShiftKind::DirectionPreserving;
    }
    if (sub->count("--convention")) {
      cfg.convention =
          convention_ == "advance" ? CycleConvention::ZeroAdvances : CycleConvention::ZeroRetreats;
    }
    if (sub->count("--placement")) {
      cfg.placement = placement_ == "after-shift" ? DephasingPlacement::AfterShift
                                                  : DephasingPlacement::BeforeShift;
    }
    if (sub->count("--start")) {
      const auto comma = start_.find(',');
      try {
        if (comma == std::string::npos) throw std::invalid_argument(start_);
        cfg.start_vertex = std::stoi(start_.substr(0, comma));
        cfg.start_port = std::stoi(start_.substr(comma + 1));
      } catch (const std::exception&) {
        throw ConfigError("--start", "expected J,K (got \"" + start_ + "\")");
      }
    }
    return cfg;
  }

 private:
  CLI::App& app_;
  RunConfig given_;
  std::string config_path_;
  std::vector<std::string> coin_args_;
  double phi_ = 0.0;
  std::string shift_, convention_, placement_, start_;
  std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&, const RunConfig&)>>>
      overrides_;
};

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coined quantum walks with variable-strength coin measurement"};
  app.require_subcommand(1);
  app.set_version_flag("--version", QWALK_VERSION);
  Parser parser(app);

  CLI::App* run_cmd = parser.subcommand("run", "position marginal per step");
  CLI::App* sweep_cmd = parser.subcommand("sweep", "complementarity sweep over beta");
  std::string betas_text;
  int grid = 0;
  sweep_cmd->add_option("--betas", betas_text, "comma-separated beta values");
  sweep_cmd->add_option("--beta-grid", grid, "K evenly spaced beta values in [0,1]");
  CLI::App* mix_cmd = parser.subcommand("mix", "mixing comparison against the classical walk");
  int t_max = 0;
  double epsilon = 0.05;
  mix_cmd->add_option("--t-max", t_max, "last time step");
  mix_cmd->add_option("--epsilon", epsilon, "TVD threshold");
  CLI::App* traj_cmd = parser.subcommand("trajectory", "sample measurement records");
  int samples = 1;
  traj_cmd->add_option("--samples", samples, "number of trajectories");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << QWALK_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (*run_cmd) {
      cmd_run(parser.finish(run_cmd), out);
    } else if (*sweep_cmd) {
      RunConfig cfg = parser.finish(sweep_cmd);
      if (sweep_cmd->count("--betas") && sweep_cmd->count("--beta-grid")) {
        throw ConfigError("--betas", "give either --betas or --beta-grid");
      }
      if (sweep_cmd->count("--betas")) cfg.betas = parse_beta_list(betas_text);
      if (sweep_cmd->count("--beta-grid")) {
        if (grid < 2) throw ConfigError("--beta-grid", "needs at least 2 points");
        cfg.betas.clear();
        for (int i = 0; i < grid; ++i) cfg.betas.push_back(static_cast<double>(i) / (grid - 1));
      }
      cmd_sweep(std::move(cfg), out);
    } else if (*mix_cmd) {
      RunConfig cfg = parser.finish(mix_cmd);
      if (mix_cmd->count("--t-max")) cfg.t_max = t_max;
      if (mix_cmd->count("--epsilon")) cfg.epsilon = epsilon;
      cmd_mix(std::move(cfg), out);
    } else if (*traj_cmd) {
      RunConfig cfg = parser.finish(traj_cmd);
      if (traj_cmd->count("--samples")) cfg.samples = samples;
      cmd_trajectory(std::move(cfg), out);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const StructuralError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumericalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}

}  // namespace qwalk::cli
