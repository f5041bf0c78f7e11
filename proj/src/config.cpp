#include "skyrm/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "skyrm/version.hpp"

namespace skyrm {

using nlohmann::json;

namespace {

template <typename T>
T enum_from(const std::string& s, std::initializer_list<std::pair<const char*, T>> table,
            const char* what) {
  for (const auto& [name, value] : table)
    if (s == name) return value;
  throw std::invalid_argument(std::string("unknown ") + what + ": " + s);
}

LatticeKind parse_lattice_kind(const std::string& s) {
  return enum_from<LatticeKind>(s, {{"square", LatticeKind::square},
                                    {"triangular", LatticeKind::triangular}},
                                "lattice kind");
}

DmiMode parse_dmi_mode(const std::string& s) {
  return enum_from<DmiMode>(s, {{"parallel", DmiMode::parallel},
                                {"perpendicular", DmiMode::perpendicular}},
                            "dmi mode");
}

EntanglerKind parse_entangler(const std::string& s) {
  return enum_from<EntanglerKind>(s, {{"cnot_chain", EntanglerKind::cnot_chain},
                                      {"cz_chain", EntanglerKind::cz_chain},
                                      {"cnot_ring", EntanglerKind::cnot_ring}},
                                  "entangler kind");
}

VqeOptimizer parse_optimizer(const std::string& s) {
  return enum_from<VqeOptimizer>(
      s, {{"gradient_descent_parameter_shift", VqeOptimizer::gradient_descent_parameter_shift},
          {"derivative_free_simplex", VqeOptimizer::derivative_free_simplex}},
      "optimizer");
}

InitialStrategy parse_initial_strategy(const std::string& s) {
  return enum_from<InitialStrategy>(s, {{"zeros_plus_random", InitialStrategy::zeros_plus_random},
                                        {"all_random", InitialStrategy::all_random}},
                                    "initial strategy");
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const char* section) {
  for (const auto& [key, value] : j.items()) {
    bool found = false;
    for (const char* k : known)
      if (key == k) { found = true; break; }
    if (!found)
      throw std::invalid_argument(std::string("unknown key \"") + key + "\" in " + section);
  }
}

json lattice_to_json(const LatticeSpec& s) {
  json j;
  j["kind"] = to_string(s.kind);
  if (s.kind == LatticeKind::square) {
    j["nx"] = s.nx;
    j["ny"] = s.ny;
  } else {
    j["shells"] = s.shells;
  }
  return j;
}

LatticeSpec lattice_from_json(const json& j) {
  reject_unknown_keys(j, {"kind", "nx", "ny", "shells"}, "lattice");
  LatticeSpec s;
  s.kind = parse_lattice_kind(j.value("kind", "square"));
  s.nx = j.value("nx", 0);
  s.ny = j.value("ny", 0);
  s.shells = j.value("shells", 0);
  return s;
}

json model_to_json(const ModelParams& m) {
  return {{"j_par", m.j_par},
          {"j_perp", m.j_perp},
          {"dmi_magnitude", m.dmi_magnitude},
          {"dmi_mode", to_string(m.dmi_mode)},
          {"b_z", m.b_z}};
}

ModelParams model_from_json(const json& j) {
  reject_unknown_keys(j, {"j_par", "j_perp", "dmi_magnitude", "dmi_mode", "b_z"}, "model");
  ModelParams m;
  m.j_par = j.value("j_par", m.j_par);
  m.j_perp = j.value("j_perp", m.j_perp);
  m.dmi_magnitude = j.value("dmi_magnitude", m.dmi_magnitude);
  if (j.contains("dmi_mode")) m.dmi_mode = parse_dmi_mode(j["dmi_mode"]);
  m.b_z = j.value("b_z", m.b_z);
  return m;
}

json vqe_to_json(const VqeConfig& v) {
  return {{"optimizer", to_string(v.optimizer)},
          {"max_evals", v.max_evals},
          {"energy_tol", v.energy_tol},
          {"restarts", v.restarts},
          {"rng_seed", v.rng_seed},
          {"initial_strategy", to_string(v.initial_strategy)},
          {"entangler", to_string(v.layout.kind)},
          {"repetitions", v.layout.repetitions},
          {"stall_window", v.stall_window},
          {"initial_step", v.initial_step}};
}

VqeConfig vqe_from_json(const json& j) {
  reject_unknown_keys(j,
                      {"optimizer", "max_evals", "energy_tol", "restarts", "rng_seed",
                       "initial_strategy", "entangler", "repetitions", "stall_window",
                       "initial_step"},
                      "vqe");
  VqeConfig v;
  if (j.contains("optimizer")) v.optimizer = parse_optimizer(j["optimizer"]);
  v.max_evals = j.value("max_evals", v.max_evals);
  v.energy_tol = j.value("energy_tol", v.energy_tol);
  v.restarts = j.value("restarts", v.restarts);
  v.rng_seed = j.value("rng_seed", v.rng_seed);
  if (j.contains("initial_strategy"))
    v.initial_strategy = parse_initial_strategy(j["initial_strategy"]);
  if (j.contains("entangler")) v.layout.kind = parse_entangler(j["entangler"]);
  v.layout.repetitions = j.value("repetitions", v.layout.repetitions);
  v.stall_window = j.value("stall_window", v.stall_window);
  v.initial_step = j.value("initial_step", v.initial_step);
  return v;
}

json exact_to_json(const LanczosConfig& e) {
  return {{"max_krylov", e.max_krylov},
          {"residual_tol", e.residual_tol},
          {"reorthogonalize", e.reorthogonalize},
          {"rng_seed", e.rng_seed},
          {"max_restarts", e.max_restarts},
          {"keep_on_restart", e.keep_on_restart}};
}

LanczosConfig exact_from_json(const json& j) {
  reject_unknown_keys(j,
                      {"max_krylov", "residual_tol", "reorthogonalize", "rng_seed",
                       "max_restarts", "keep_on_restart"},
                      "exact");
  LanczosConfig e;
  e.max_krylov = j.value("max_krylov", e.max_krylov);
  e.residual_tol = j.value("residual_tol", e.residual_tol);
  e.reorthogonalize = j.value("reorthogonalize", e.reorthogonalize);
  e.rng_seed = j.value("rng_seed", e.rng_seed);
  e.max_restarts = j.value("max_restarts", e.max_restarts);
  e.keep_on_restart = j.value("keep_on_restart", e.keep_on_restart);
  return e;
}

json output_to_json(const OutputConfig& o) {
  return {{"dir", o.dir},
          {"field_dumps", o.field_dumps},
          {"record_wall_time", o.record_wall_time},
          {"write_traces", o.write_traces}};
}

OutputConfig output_from_json(const json& j) {
  reject_unknown_keys(j, {"dir", "field_dumps", "record_wall_time", "write_traces"},
                      "output");
  OutputConfig o;
  o.dir = j.value("dir", o.dir);
  if (j.contains("field_dumps")) o.field_dumps = j["field_dumps"].get<std::vector<double>>();
  o.record_wall_time = j.value("record_wall_time", o.record_wall_time);
  o.write_traces = j.value("write_traces", o.write_traces);
  return o;
}

json sweep_to_json(const SweepRange& s) {
  return {{"start", s.start}, {"stop", s.stop}, {"step", s.step}};
}

SweepRange sweep_from_json(const json& j) {
  reject_unknown_keys(j, {"start", "stop", "step"}, "sweep");
  SweepRange s;
  s.start = j.value("start", s.start);
  s.stop = j.value("stop", s.stop);
  s.step = j.value("step", s.step);
  return s;
}

json run_config_to_json_obj(const RunConfig& c) {
  json j;
  j["lattice"] = lattice_to_json(c.lattice);
  j["model"] = model_to_json(c.model);
  j["sweep"] = sweep_to_json(c.sweep);
  j["solver"] = to_string(c.solver);
  j["vqe"] = vqe_to_json(c.vqe);
  j["exact"] = exact_to_json(c.exact);
  j["output"] = output_to_json(c.output);
  j["rng_seed"] = c.rng_seed;
  j["transition_threshold"] = c.transition_threshold;
  return j;
}

RunConfig run_config_from_json_obj(const json& j) {
  reject_unknown_keys(j,
                      {"lattice", "model", "sweep", "solver", "vqe", "exact", "output",
                       "rng_seed", "transition_threshold", "bench"},
                      "run config");
  RunConfig c;
  if (j.contains("lattice")) c.lattice = lattice_from_json(j["lattice"]);
  if (j.contains("model")) c.model = model_from_json(j["model"]);
  if (j.contains("sweep")) c.sweep = sweep_from_json(j["sweep"]);
  if (j.contains("solver")) c.solver = parse_solver(j["solver"]);
  if (j.contains("vqe")) c.vqe = vqe_from_json(j["vqe"]);
  if (j.contains("exact")) c.exact = exact_from_json(j["exact"]);
  if (j.contains("output")) c.output = output_from_json(j["output"]);
  c.rng_seed = j.value("rng_seed", c.rng_seed);
  c.transition_threshold = j.value("transition_threshold", c.transition_threshold);
  return c;
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file: " + path);
  json j;
  try {
    f >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config parse error in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

RunConfig run_config_from_json(const std::string& text) {
  return run_config_from_json_obj(json::parse(text));
}

std::string run_config_to_json(const RunConfig& config) {
  return run_config_to_json_obj(config).dump(2) + "\n";
}

RunConfig load_run_config(const std::string& path) {
  return run_config_from_json_obj(read_json_file(path));
}

BenchConfig bench_config_from_json(const std::string& text) {
  const json root = json::parse(text);
  const json j = root.contains("bench") ? root["bench"] : root;
  reject_unknown_keys(j,
                      {"sizes", "solvers", "repetitions", "cell_time_budget_s", "model",
                       "bench_b_z", "vqe", "exact", "rng_seed"},
                      "bench");
  BenchConfig b;
  if (j.contains("sizes")) {
    b.sizes.clear();
    for (const json& s : j["sizes"]) b.sizes.push_back(lattice_from_json(s));
  }
  if (j.contains("solvers")) {
    b.solvers.clear();
    for (const json& s : j["solvers"]) b.solvers.push_back(parse_solver(s));
  }
  b.repetitions = j.value("repetitions", b.repetitions);
  b.cell_time_budget_s = j.value("cell_time_budget_s", b.cell_time_budget_s);
  if (j.contains("model")) b.model = model_from_json(j["model"]);
  b.bench_b_z = j.value("bench_b_z", b.bench_b_z);
  if (j.contains("vqe")) b.vqe = vqe_from_json(j["vqe"]);
  if (j.contains("exact")) b.exact = exact_from_json(j["exact"]);
  b.rng_seed = j.value("rng_seed", b.rng_seed);
  if (root.contains("rng_seed") && !j.contains("rng_seed"))
    b.rng_seed = root["rng_seed"].get<std::uint64_t>();
  return b;
}

BenchConfig load_bench_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return bench_config_from_json(ss.str());
}

std::string manifest_json(const RunConfig& config, const std::vector<SweepRecord>& records,
                          const std::optional<TransitionReport>& transition) {
  json j;
  j["artifact"] = "skyrm";
  j["version"] = kVersion;
  j["config"] = run_config_to_json_obj(config);
  j["record_count"] = records.size();
  json failed = json::array();
  for (std::size_t k = 0; k < records.size(); ++k)
    if (!records[k].converged) failed.push_back(k);
  j["failed_points"] = failed;
  if (transition) {
    j["transition"] = {{"b_star", transition->b_star},
                       {"delta_q", transition->delta_q},
                       {"delta_q_rel", transition->delta_q_rel},
                       {"delta_e", transition->delta_e},
                       {"delta_m", {transition->delta_m.x, transition->delta_m.y,
                                    transition->delta_m.z}},
                       {"interval_index", transition->interval_index}};
  } else {
    j["transition"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string benchmark_json(const BenchmarkResult& result, const BenchConfig& config) {
  json j;
  j["artifact"] = "skyrm";
  j["version"] = kVersion;
  j["repetitions"] = config.repetitions;
  j["bench_b_z"] = config.bench_b_z;
  json cells = json::array();
  for (const BenchCell& c : result.cells) {
    cells.push_back({{"solver", to_string(c.solver)},
                     {"lattice", lattice_to_json(c.spec)},
                     {"n_sites", c.n_sites},
                     {"times_s", c.times_s},
                     {"median_time_s", c.median_time_s},
                     {"energy", c.energy},
                     {"timed_out", c.timed_out}});
  }
  j["cells"] = cells;
  json fits;
  for (const auto& [solver, fit] : result.fits)
    fits[to_string(solver)] = {{"exponent", fit.exponent}, {"prefactor", fit.prefactor}};
  j["fits"] = fits;
  return j.dump(2) + "\n";
}

double parse_double(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw std::invalid_argument("bad number: " + text);
  return v;
}

SolverKind parse_solver(const std::string& text) {
  return enum_from<SolverKind>(text, {{"vqe", SolverKind::vqe},
                                      {"lanczos", SolverKind::lanczos},
                                      {"dense", SolverKind::dense}},
                               "solver");
}

bool operator==(const RunConfig& a, const RunConfig& b) {
  return a.lattice == b.lattice && a.model == b.model && a.sweep == b.sweep &&
         a.solver == b.solver && a.vqe == b.vqe && a.exact == b.exact &&
         a.output == b.output && a.rng_seed == b.rng_seed &&
         a.transition_threshold == b.transition_threshold;
}

}  // namespace skyrm
