#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skyrm/exact.hpp"
#include "skyrm/geometry.hpp"
#include "skyrm/hamiltonian.hpp"
#include "skyrm/lattice.hpp"
#include "skyrm/vqe.hpp"

namespace skyrm {

enum class SolverKind { vqe, lanczos, dense };

struct SweepRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.01;

  std::vector<double> grid() const;  // start, start+step, ..., stop (inclusive)
  void validate() const;
  bool operator==(const SweepRange&) const = default;
};

struct OutputConfig {
  std::string dir = "out";
  std::vector<double> field_dumps;   // b_z values; snapped to the nearest grid point
  bool record_wall_time = true;      // false writes 0 for reproducible bytes
  bool write_traces = false;         // per-restart VQE convergence traces
  bool operator==(const OutputConfig&) const = default;
};

struct RunConfig {
  LatticeSpec lattice{LatticeKind::square, 4, 4, 0};
  ModelParams model;                 // model.b_z is ignored; the sweep provides it
  SweepRange sweep;
  SolverKind solver = SolverKind::lanczos;
  VqeConfig vqe;
  LanczosConfig exact;
  OutputConfig output;
  std::uint64_t rng_seed = 1234;
  double transition_threshold = 5.0;

  void validate() const;
};

struct SweepRecord {
  double b_z = 0.0;
  double energy = 0.0;
  double q = 0.0;
  double m_x = 0.0, m_y = 0.0, m_z = 0.0;
  SolverKind solver = SolverKind::lanczos;
  bool near_degenerate = false;
  double wall_time_s = 0.0;
  bool converged = true;  // per-point solver failures are flagged, not fatal
};

struct TransitionReport {
  double b_star = 0.0;       // midpoint of the jump interval
  double delta_q_rel = 0.0;  // |dQ| / max(|Q before|, 1e-9)
  Vec3 delta_m;              // component jumps across the interval
  double delta_e = 0.0;      // energy first difference across the interval
  double delta_q = 0.0;
  int interval_index = 0;    // jump between records [i] and [i+1]
};

struct SweepOutput {
  std::vector<SweepRecord> records;
  // (b_z, dump text) for each requested field dump, in grid order.
  std::vector<std::pair<double, std::string>> field_dumps;
  // (point index, restart index, "eval energy" lines) when traces are enabled.
  std::vector<std::tuple<int, int, std::string>> traces;
};

SweepOutput run_sweep_full(const RunConfig& config);
std::vector<SweepRecord> run_sweep(const RunConfig& config);

// Fires when the largest |dQ| between adjacent grid points exceeds threshold
// times the median of the remaining |dQ|. Returns nullopt when no jump clears
// the threshold (that is a result, not an error).
std::optional<TransitionReport> detect_transition(const std::vector<SweepRecord>& records,
                                                  double threshold = 5.0);

struct PowerLawFit {
  double exponent = 0.0;
  double prefactor = 0.0;  // t = prefactor * N^exponent
};

// Least-squares fit of log(time) against log(n). Needs >= 2 distinct sizes.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& n_time);

struct BenchConfig {
  std::vector<LatticeSpec> sizes;
  std::vector<SolverKind> solvers{SolverKind::vqe, SolverKind::lanczos};
  int repetitions = 3;
  double cell_time_budget_s = 600.0;
  ModelParams model;  // b_z used as-is for every cell
  double bench_b_z = 1.0;
  VqeConfig vqe;
  LanczosConfig exact;
  std::uint64_t rng_seed = 1234;

  void validate() const;
};

struct BenchCell {
  LatticeSpec spec;
  int n_sites = 0;
  SolverKind solver = SolverKind::lanczos;
  std::vector<double> times_s;
  double median_time_s = 0.0;
  double energy = 0.0;
  bool timed_out = false;  // excluded from the fit
};

struct BenchmarkResult {
  std::vector<BenchCell> cells;
  std::map<SolverKind, PowerLawFit> fits;  // solvers with >= 2 valid cells
};

BenchmarkResult run_benchmark(const BenchConfig& config);

// Aligned text table with one row per cell plus the fitted exponents.
std::string benchmark_table(const BenchmarkResult& result);

// Writes <dir>/sweep.csv, the field dumps, optional traces, and
// <dir>/manifest.json (resolved config echo + version + transition report).
// I/O failures throw with the offending path in the message.
void write_outputs(const SweepOutput& output,
                   const std::optional<TransitionReport>& transition,
                   const RunConfig& config);

std::string records_to_csv(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> records_from_csv(const std::string& csv);

const char* to_string(SolverKind kind);

}  // namespace skyrm
