#include "skyrm/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "skyrm/config.hpp"
#include "skyrm/format.hpp"
#include "skyrm/observables.hpp"
#include "skyrm/version.hpp"

namespace skyrm {

void SweepRange::validate() const {
  if (!(step > 0.0)) throw std::invalid_argument("sweep step must be > 0");
  if (start > stop) throw std::invalid_argument("sweep start must be <= stop");
}

std::vector<double> SweepRange::grid() const {
  validate();
  const long long count = std::llround((stop - start) / step);
  std::vector<double> g;
  g.reserve(count + 1);
  for (long long k = 0; k <= count; ++k) g.push_back(start + k * step);
  return g;
}

void RunConfig::validate() const {
  lattice.validate();
  model.validate();
  sweep.validate();
  vqe.validate();
  exact.validate();
  const int n = lattice.site_count();
  const int cap = (solver == SolverKind::dense) ? 12 : kDefaultMaxSites;
  if (n > cap)
    throw std::invalid_argument(std::string("lattice too large for the ") +
                                to_string(solver) + " solver");
}

namespace {

std::uint64_t point_seed(std::uint64_t base, std::size_t idx) {
  return base + 0x9e3779b97f4a7c15ull * (idx + 1);
}

double now_minus(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct PointSolution {
  double energy = 0.0;
  StateVector state;
  bool near_degenerate = false;
  bool converged = true;
  std::vector<double> best_theta;  // vqe only; feeds the next point's warm start
  std::vector<std::vector<std::pair<long, double>>> traces;
};

PointSolution solve_point(const PauliSum& h, const RunConfig& cfg, std::size_t idx,
                          const std::vector<double>* warm_theta) {
  PointSolution out;
  switch (cfg.solver) {
    case SolverKind::dense: {
      GroundState gs = dense_ground(h);
      out.energy = gs.energy;
      out.state = std::move(gs.vector);
      out.near_degenerate = gs.near_degenerate;
      break;
    }
    case SolverKind::lanczos: {
      LanczosConfig lc = cfg.exact;
      lc.rng_seed = point_seed(cfg.rng_seed, idx);
      GroundState gs = lanczos_ground(h, lc);
      out.energy = gs.energy;
      out.state = std::move(gs.vector);
      out.near_degenerate = gs.near_degenerate;
      out.converged = gs.converged;
      break;
    }
    case SolverKind::vqe: {
      VqeConfig vc = cfg.vqe;
      vc.rng_seed = point_seed(cfg.rng_seed, idx);
      std::vector<std::vector<double>> starts;
      if (warm_theta != nullptr) starts.push_back(*warm_theta);
      VqeResult vr = minimize_with_starts(h, vc, starts);
      out.energy = vr.energy;
      out.state = prepare_state({vr.best_theta, vc.layout}, h.n_qubits);
      out.converged = vr.converged;
      out.best_theta = std::move(vr.best_theta);
      out.traces = std::move(vr.restart_traces);
      break;
    }
  }
  return out;
}

}  // namespace

SweepOutput run_sweep_full(const RunConfig& config) {
  config.validate();
  Lattice lattice = assign_dmi(build_lattice(config.lattice), config.model.dmi_mode,
                               config.model.dmi_magnitude);
  const PauliSum base = build_bond_terms(lattice, config.model);
  const std::vector<double> grid = config.sweep.grid();
  const bool have_triangles = lattice.n_sites() >= 3;
  const std::vector<Triangle> triangles =
      have_triangles ? triangulate(lattice) : std::vector<Triangle>{};

  // Snap requested dump fields to grid indices.
  std::vector<std::size_t> dump_idx;
  for (double want : config.output.field_dumps) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < grid.size(); ++k)
      if (std::abs(grid[k] - want) < std::abs(grid[best] - want)) best = k;
    dump_idx.push_back(best);
  }

  SweepOutput out;
  std::vector<double> warm_theta;
  bool have_warm = false;

  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const double b_z = grid[idx];
    PauliSum h = base;
    append_zeeman(h, b_z);

    SweepRecord rec;
    rec.b_z = b_z;
    rec.solver = config.solver;

    const auto t0 = std::chrono::steady_clock::now();
    try {
      PointSolution sol = solve_point(h, config, idx, have_warm ? &warm_theta : nullptr);
      rec.wall_time_s = config.output.record_wall_time ? now_minus(t0) : 0.0;
      rec.energy = sol.energy;
      rec.near_degenerate = sol.near_degenerate;
      rec.converged = sol.converged;

      const MagnetizationField field = magnetization_field(sol.state, lattice);
      const Vec3 total = total_magnetization(field);
      rec.m_x = total.x;
      rec.m_y = total.y;
      rec.m_z = total.z;
      rec.q = have_triangles ? topological_charge(triangles, lattice.sites, field) : 0.0;

      if (config.solver == SolverKind::vqe) {
        warm_theta = std::move(sol.best_theta);
        have_warm = true;
      }
      if (std::find(dump_idx.begin(), dump_idx.end(), idx) != dump_idx.end())
        out.field_dumps.emplace_back(b_z, dump_field(lattice, field));
      for (std::size_t r = 0; r < sol.traces.size(); ++r) {
        if (!config.output.write_traces) break;
        std::string lines;
        for (const auto& [ev, en] : sol.traces[r])
          lines += std::to_string(ev) + " " + format_double(en) + "\n";
        out.traces.emplace_back(static_cast<int>(idx), static_cast<int>(r), lines);
      }
    } catch (const std::exception&) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      rec.wall_time_s = config.output.record_wall_time ? now_minus(t0) : 0.0;
      rec.energy = rec.q = rec.m_x = rec.m_y = rec.m_z = nan;
      rec.converged = false;
    }
    out.records.push_back(rec);
  }
  return out;
}

std::vector<SweepRecord> run_sweep(const RunConfig& config) {
  return run_sweep_full(config).records;
}

std::optional<TransitionReport> detect_transition(const std::vector<SweepRecord>& records,
                                                  double threshold) {
  if (records.size() < 4)
    throw std::invalid_argument("detect_transition needs at least 4 records");

  struct Diff {
    std::size_t k;
    double abs_dq;
  };
  std::vector<Diff> diffs;
  for (std::size_t k = 0; k + 1 < records.size(); ++k) {
    const double dq = records[k + 1].q - records[k].q;
    if (std::isfinite(dq)) diffs.push_back({k, std::abs(dq)});
  }
  if (diffs.size() < 2) return std::nullopt;

  std::size_t imax = 0;
  for (std::size_t i = 1; i < diffs.size(); ++i)
    if (diffs[i].abs_dq > diffs[imax].abs_dq) imax = i;

  std::vector<double> others;
  for (std::size_t i = 0; i < diffs.size(); ++i)
    if (i != imax) others.push_back(diffs[i].abs_dq);
  std::sort(others.begin(), others.end());
  const std::size_t mid = others.size() / 2;
  const double median = (others.size() % 2 == 1)
                            ? others[mid]
                            : 0.5 * (others[mid - 1] + others[mid]);

  const double max_dq = diffs[imax].abs_dq;
  if (max_dq <= 1e-12) return std::nullopt;          // flat series
  if (max_dq <= threshold * median) return std::nullopt;

  const std::size_t k = diffs[imax].k;
  TransitionReport rep;
  rep.interval_index = static_cast<int>(k);
  rep.b_star = 0.5 * (records[k].b_z + records[k + 1].b_z);
  rep.delta_q = records[k + 1].q - records[k].q;
  rep.delta_q_rel = max_dq / std::max(std::abs(records[k].q), 1e-9);
  rep.delta_m = Vec3{records[k + 1].m_x - records[k].m_x,
                     records[k + 1].m_y - records[k].m_y,
                     records[k + 1].m_z - records[k].m_z};
  rep.delta_e = records[k + 1].energy - records[k].energy;
  return rep;
}

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& n_time) {
  if (n_time.size() < 2) throw std::invalid_argument("fit needs at least 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, t] : n_time) {
    if (!(n > 0.0) || !(t > 0.0))
      throw std::invalid_argument("fit needs positive sizes and times");
    const double x = std::log(n), y = std::log(t);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double m = static_cast<double>(n_time.size());
  const double denom = m * sxx - sx * sx;
  if (std::abs(denom) < 1e-12)
    throw std::invalid_argument("fit needs at least 2 distinct sizes");
  PowerLawFit fit;
  fit.exponent = (m * sxy - sx * sy) / denom;
  fit.prefactor = std::exp((sy - fit.exponent * sx) / m);
  return fit;
}

void BenchConfig::validate() const {
  if (sizes.empty()) throw std::invalid_argument("benchmark needs at least one size");
  if (solvers.empty()) throw std::invalid_argument("benchmark needs at least one solver");
  if (repetitions < 3) throw std::invalid_argument("benchmark needs >= 3 repetitions");
  if (!(cell_time_budget_s > 0.0)) throw std::invalid_argument("cell budget must be > 0");
  for (const LatticeSpec& s : sizes) s.validate();
  model.validate();
  vqe.validate();
  exact.validate();
}

BenchmarkResult run_benchmark(const BenchConfig& config) {
  config.validate();
  std::vector<LatticeSpec> sizes = config.sizes;
  std::sort(sizes.begin(), sizes.end(), [](const LatticeSpec& a, const LatticeSpec& b) {
    return a.site_count() < b.site_count();
  });

  BenchmarkResult result;
  for (SolverKind solver : config.solvers) {
    bool budget_blown = false;
    for (std::size_t s = 0; s < sizes.size(); ++s) {
      BenchCell cell;
      cell.spec = sizes[s];
      cell.n_sites = sizes[s].site_count();
      cell.solver = solver;
      if (budget_blown) {
        cell.timed_out = true;
        result.cells.push_back(cell);
        continue;
      }

      Lattice lattice = assign_dmi(build_lattice(sizes[s]), config.model.dmi_mode,
                                   config.model.dmi_magnitude);
      PauliSum h = build_bond_terms(lattice, config.model);
      append_zeeman(h, config.bench_b_z);

      for (int rep = 0; rep < config.repetitions; ++rep) {
        const std::uint64_t seed =
            config.rng_seed + 1000003ull * (s + 1) + 7919ull * (rep + 1);
        const auto t0 = std::chrono::steady_clock::now();
        if (solver == SolverKind::lanczos) {
          LanczosConfig lc = config.exact;
          lc.rng_seed = seed;
          cell.energy = lanczos_ground(h, lc).energy;
        } else if (solver == SolverKind::vqe) {
          VqeConfig vc = config.vqe;
          vc.rng_seed = seed;
          cell.energy = minimize(h, vc).energy;
        } else {
          cell.energy = dense_ground(h).energy;
        }
        cell.times_s.push_back(now_minus(t0));
        if (cell.times_s.back() > config.cell_time_budget_s) {
          cell.timed_out = true;
          budget_blown = true;  // larger sizes for this solver are skipped
          break;
        }
      }
      if (!cell.times_s.empty()) {
        std::vector<double> ts = cell.times_s;
        std::sort(ts.begin(), ts.end());
        cell.median_time_s = ts[ts.size() / 2];
      }
      result.cells.push_back(cell);
    }
  }

  for (SolverKind solver : config.solvers) {
    std::vector<std::pair<double, double>> pts;
    for (const BenchCell& c : result.cells)
      if (c.solver == solver && !c.timed_out && c.median_time_s > 0.0)
        pts.emplace_back(double(c.n_sites), c.median_time_s);
    if (pts.size() >= 2) {
      try {
        result.fits[solver] = fit_power_law(pts);
      } catch (const std::invalid_argument&) {
        // all sizes identical; no fit for this solver
      }
    }
  }
  return result;
}

std::string benchmark_table(const BenchmarkResult& result) {
  std::ostringstream os;
  os << "solver    lattice      N    reps  median_s      status\n";
  for (const BenchCell& c : result.cells) {
    std::ostringstream lat;
    lat << to_string(c.spec.kind);
    if (c.spec.kind == LatticeKind::square)
      lat << " " << c.spec.nx << "x" << c.spec.ny;
    else
      lat << " s" << c.spec.shells;
    os << to_string(c.solver);
    for (std::size_t k = std::strlen(to_string(c.solver)); k < 10; ++k) os << ' ';
    std::string l = lat.str();
    os << l;
    for (std::size_t k = l.size(); k < 13; ++k) os << ' ';
    std::string n = std::to_string(c.n_sites);
    os << n;
    for (std::size_t k = n.size(); k < 5; ++k) os << ' ';
    std::string reps = std::to_string(c.times_s.size());
    os << reps;
    for (std::size_t k = reps.size(); k < 6; ++k) os << ' ';
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%-12.6f", c.median_time_s);
    os << buf << (c.timed_out ? "timed_out" : "ok") << "\n";
  }
  for (const auto& [solver, fit] : result.fits) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "fit %s: t ~ %.3e * N^%.3f\n",
                  to_string(solver), fit.prefactor, fit.exponent);
    os << buf;
  }
  return os.str();
}

std::string records_to_csv(const std::vector<SweepRecord>& records) {
  std::string csv = "bz,energy,q,mx,my,mz,solver,near_degenerate,wall_time_s\n";
  for (const SweepRecord& r : records) {
    csv += format_double(r.b_z) + "," + format_double(r.energy) + "," +
           format_double(r.q) + "," + format_double(r.m_x) + "," +
           format_double(r.m_y) + "," + format_double(r.m_z) + "," +
           to_string(r.solver) + "," + (r.near_degenerate ? "1" : "0") + "," +
           format_double(r.wall_time_s) + "\n";
  }
  return csv;
}

std::vector<SweepRecord> records_from_csv(const std::string& csv) {
  std::istringstream is(csv);
  std::string line;
  if (!std::getline(is, line) || line != "bz,energy,q,mx,my,mz,solver,near_degenerate,wall_time_s")
    throw std::invalid_argument("bad CSV header");
  std::vector<SweepRecord> records;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      cells.push_back(line.substr(pos, comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (cells.size() != 9) throw std::invalid_argument("bad CSV row: " + line);
    SweepRecord r;
    r.b_z = parse_double(cells[0]);
    r.energy = parse_double(cells[1]);
    r.q = parse_double(cells[2]);
    r.m_x = parse_double(cells[3]);
    r.m_y = parse_double(cells[4]);
    r.m_z = parse_double(cells[5]);
    r.solver = parse_solver(cells[6]);
    r.near_degenerate = cells[7] == "1";
    r.wall_time_s = parse_double(cells[8]);
    records.push_back(r);
  }
  return records;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

void write_outputs(const SweepOutput& output,
                   const std::optional<TransitionReport>& transition,
                   const RunConfig& config) {
  if (output.records.empty()) throw std::invalid_argument("no records to write");
  const std::filesystem::path dir(config.output.dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output dir: " + dir.string());

  write_file(dir / "sweep.csv", records_to_csv(output.records));
  for (const auto& [b_z, text] : output.field_dumps)
    write_file(dir / ("field_bz_" + format_double(b_z) + ".dat"), text);
  if (!output.traces.empty()) {
    std::filesystem::create_directories(dir / "traces", ec);
    if (ec) throw std::runtime_error("cannot create traces dir");
    for (const auto& [point, restart, lines] : output.traces)
      write_file(dir / "traces" /
                     ("point_" + std::to_string(point) + "_restart_" +
                      std::to_string(restart) + ".dat"),
                 lines);
  }
  write_file(dir / "manifest.json", manifest_json(config, output.records, transition));
}

const char* to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::vqe: return "vqe";
    case SolverKind::lanczos: return "lanczos";
    default: return "dense";
  }
}

}  // namespace skyrm
