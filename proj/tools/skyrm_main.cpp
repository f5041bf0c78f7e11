#include <cstdio>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "skyrm/config.hpp"
#include "skyrm/format.hpp"
#include "skyrm/sweep.hpp"
#include "skyrm/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitNoConvergence = 2;
constexpr int kExitIoError = 3;

struct CommonFlags {
  std::string config_path;
  std::string out_dir;
  std::string solver;
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool out_set = false;
  bool solver_set = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "run-configuration JSON file")->required();
  cmd->add_option("--out", flags.out_dir, "output directory (overrides config)")
      ->each([&](const std::string&) { flags.out_set = true; });
  cmd->add_option("--solver", flags.solver, "vqe | lanczos | dense (overrides config)")
      ->each([&](const std::string&) { flags.solver_set = true; });
  cmd->add_option("--seed", flags.seed, "rng seed (overrides config)")
      ->each([&](const std::string&) { flags.seed_set = true; });
}

skyrm::RunConfig resolve_config(const CommonFlags& flags) {
  skyrm::RunConfig cfg = skyrm::load_run_config(flags.config_path);
  if (flags.out_set) cfg.output.dir = flags.out_dir;
  if (flags.solver_set) cfg.solver = skyrm::parse_solver(flags.solver);
  if (flags.seed_set) cfg.rng_seed = flags.seed;
  cfg.validate();
  return cfg;
}

int run_sweep_command(const skyrm::RunConfig& cfg) {
  using namespace skyrm;
  std::printf("# skyrm %s | %s lattice, N=%d | solver=%s | %zu grid points\n", kVersion,
              to_string(cfg.lattice.kind), cfg.lattice.site_count(), to_string(cfg.solver),
              cfg.sweep.grid().size());
  SweepOutput out = run_sweep_full(cfg);
  for (const SweepRecord& r : out.records)
    std::printf("bz=%-8s E=%-14s Q=%-12s mz=%-12s%s%s\n", format_double(r.b_z).c_str(),
                format_double(r.energy).c_str(), format_double(r.q).c_str(),
                format_double(r.m_z).c_str(), r.near_degenerate ? " [near-degenerate]" : "",
                r.converged ? "" : " [FAILED]");

  std::optional<TransitionReport> transition;
  if (out.records.size() >= 4)
    transition = detect_transition(out.records, cfg.transition_threshold);
  if (transition) {
    std::printf("transition: b_star=%s dQ=%s (rel %s) dE=%s dm=(%s, %s, %s)\n",
                format_double(transition->b_star).c_str(),
                format_double(transition->delta_q).c_str(),
                format_double(transition->delta_q_rel).c_str(),
                format_double(transition->delta_e).c_str(),
                format_double(transition->delta_m.x).c_str(),
                format_double(transition->delta_m.y).c_str(),
                format_double(transition->delta_m.z).c_str());
  } else {
    std::printf("transition: none\n");
  }

  try {
    write_outputs(out, transition, cfg);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return kExitIoError;
  }
  std::printf("outputs written to %s\n", cfg.output.dir.c_str());

  bool any_converged = false;
  for (const SweepRecord& r : out.records) any_converged |= r.converged;
  return any_converged ? kExitOk : kExitNoConvergence;
}

int run_bench_command(const CommonFlags& flags) {
  using namespace skyrm;
  BenchConfig cfg = load_bench_config(flags.config_path);
  if (flags.seed_set) cfg.rng_seed = flags.seed;
  cfg.validate();
  const std::string dir = flags.out_set ? flags.out_dir : "out";

  BenchmarkResult result = run_benchmark(cfg);
  const std::string table = benchmark_table(result);
  std::fputs(table.c_str(), stdout);

  try {
    std::filesystem::create_directories(dir);
    std::ofstream txt(std::filesystem::path(dir) / "bench_report.txt");
    std::ofstream js(std::filesystem::path(dir) / "bench_report.json");
    if (!txt || !js) throw std::runtime_error("cannot open bench report files in " + dir);
    txt << table;
    js << benchmark_json(result, cfg);
    if (!txt || !js) throw std::runtime_error("bench report write failed in " + dir);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return kExitIoError;
  }
  std::printf("benchmark report written to %s\n", dir.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ground states, magnetization patterns and topological charge of the "
               "2D XXZ model with Dzyaloshinskii-Moriya interaction"};
  app.require_subcommand(1);

  CommonFlags sweep_flags, bench_flags, pattern_flags;
  double pattern_bz = 0.0;
  bool pattern_bz_set = false;

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "external-field sweep with transition detection");
  add_common(sweep_cmd, sweep_flags);
  CLI::App* bench_cmd = app.add_subcommand("bench", "solver scaling benchmark");
  add_common(bench_cmd, bench_flags);
  CLI::App* pattern_cmd =
      app.add_subcommand("pattern", "single-point solve with a magnetization field dump");
  add_common(pattern_cmd, pattern_flags);
  pattern_cmd->add_option("--bz", pattern_bz, "field value (defaults to sweep.start)")
      ->each([&](const std::string&) { pattern_bz_set = true; });

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep_cmd->parsed()) {
      return run_sweep_command(resolve_config(sweep_flags));
    }
    if (bench_cmd->parsed()) {
      return run_bench_command(bench_flags);
    }
    skyrm::RunConfig cfg = resolve_config(pattern_flags);
    const double bz = pattern_bz_set ? pattern_bz : cfg.sweep.start;
    cfg.sweep = {bz, bz, 1.0};
    cfg.output.field_dumps = {bz};
    return run_sweep_command(cfg);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  }
}
