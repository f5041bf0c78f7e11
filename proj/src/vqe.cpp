#include "skyrm/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace skyrm {

void VqeConfig::validate() const {
  if (max_evals < 1) throw std::invalid_argument("max_evals must be >= 1");
  if (!(energy_tol > 0.0)) throw std::invalid_argument("energy_tol must be > 0");
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (stall_window < 1) throw std::invalid_argument("stall_window must be >= 1");
  layout.validate();
}

double ansatz_energy(const AnsatzParams& params, const PauliSum& hamiltonian) {
  return expectation(prepare_state(params, hamiltonian.n_qubits), hamiltonian);
}

namespace {

struct LocalResult {
  std::vector<double> theta;
  double energy = 0.0;
  long evals = 0;
  bool converged = false;
  std::vector<std::pair<long, double>> trace;  // (eval count, energy)
};

// Steepest descent on the parameter-shift gradient with a backtracking step:
// grow on acceptance, halve on non-improvement.
LocalResult gradient_descent(const PauliSum& h, const VqeConfig& cfg,
                             std::vector<double> theta0) {
  const int n = h.n_qubits;
  AnsatzParams p{std::move(theta0), cfg.layout};
  const std::size_t np = p.theta.size();

  LocalResult res;
  long evals = 0;
  auto energy_of = [&](const AnsatzParams& q) {
    ++evals;
    return ansatz_energy(q, h);
  };

  double e = energy_of(p);
  res.trace.emplace_back(evals, e);
  double step = cfg.initial_step;
  double best = e;
  int since_improve = 0;

  AnsatzParams cand = p;
  while (evals + 2 * static_cast<long>(np) + 1 <= cfg.max_evals) {
    std::vector<double> g(np);
    {  // parameter-shift gradient, counting its evaluations
      const double half_pi = std::acos(0.0);
      AnsatzParams shifted = p;
      for (std::size_t k = 0; k < np; ++k) {
        shifted.theta[k] = p.theta[k] + half_pi;
        const double ep = energy_of(shifted);
        shifted.theta[k] = p.theta[k] - half_pi;
        const double em = energy_of(shifted);
        shifted.theta[k] = p.theta[k];
        g[k] = 0.5 * (ep - em);
      }
    }
    const double gnorm = std::sqrt(
        std::inner_product(g.begin(), g.end(), g.begin(), 0.0));
    if (gnorm < 1e-12) {
      res.converged = true;
      break;
    }

    bool accepted = false;
    for (int half = 0; half < 40 && evals < cfg.max_evals; ++half) {
      for (std::size_t k = 0; k < np; ++k) cand.theta[k] = p.theta[k] - step * g[k];
      const double ec = energy_of(cand);
      if (ec < e) {
        p.theta.swap(cand.theta);
        e = ec;
        step *= 1.25;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (accepted) res.trace.emplace_back(evals, e);
    if (e < best - cfg.energy_tol) {
      best = e;
      since_improve = 0;
    } else if (++since_improve >= cfg.stall_window) {
      res.converged = true;
      break;
    }
    if (!accepted && step < 1e-14) {
      res.converged = true;  // no descent direction at step resolution
      break;
    }
  }

  res.theta = std::move(p.theta);
  res.energy = e;
  res.evals = evals;
  return res;
}

// Nelder-Mead fallback; derivative-free.
LocalResult nelder_mead(const PauliSum& h, const VqeConfig& cfg,
                        std::vector<double> theta0) {
  const std::size_t np = theta0.size();
  LocalResult res;
  long evals = 0;
  auto f = [&](const std::vector<double>& t) {
    ++evals;
    return ansatz_energy({t, cfg.layout}, h);
  };

  std::vector<std::vector<double>> verts(np + 1, theta0);
  std::vector<double> fv(np + 1);
  for (std::size_t k = 0; k < np; ++k) verts[k + 1][k] += 0.25;
  for (std::size_t k = 0; k <= np; ++k) fv[k] = f(verts[k]);

  std::vector<std::size_t> order(np + 1);
  std::vector<double> centroid(np), xr(np), xe(np), xc(np);
  int since_improve = 0;
  double best_seen = *std::min_element(fv.begin(), fv.end());
  res.trace.emplace_back(evals, best_seen);

  while (evals + 2 <= cfg.max_evals) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t lo = order[0], hi = order[np], second_hi = order[np - 1];
    if (std::abs(fv[hi] - fv[lo]) < cfg.energy_tol) {
      res.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k <= np; ++k) {
      if (k == hi) continue;
      for (std::size_t d = 0; d < np; ++d) centroid[d] += verts[k][d];
    }
    for (double& c : centroid) c /= static_cast<double>(np);

    for (std::size_t d = 0; d < np; ++d) xr[d] = centroid[d] + (centroid[d] - verts[hi][d]);
    const double fr = f(xr);
    if (fr < fv[lo]) {
      for (std::size_t d = 0; d < np; ++d) xe[d] = centroid[d] + 2.0 * (centroid[d] - verts[hi][d]);
      const double fe = f(xe);
      if (fe < fr) { verts[hi] = xe; fv[hi] = fe; }
      else         { verts[hi] = xr; fv[hi] = fr; }
    } else if (fr < fv[second_hi]) {
      verts[hi] = xr;
      fv[hi] = fr;
    } else {
      for (std::size_t d = 0; d < np; ++d) xc[d] = centroid[d] + 0.5 * (verts[hi][d] - centroid[d]);
      const double fc = f(xc);
      if (fc < fv[hi]) {
        verts[hi] = xc;
        fv[hi] = fc;
      } else {
        for (std::size_t k = 0; k <= np; ++k) {
          if (k == lo) continue;
          for (std::size_t d = 0; d < np; ++d)
            verts[k][d] = verts[lo][d] + 0.5 * (verts[k][d] - verts[lo][d]);
          fv[k] = f(verts[k]);
          if (evals >= cfg.max_evals) break;
        }
      }
    }

    const double cur_best = *std::min_element(fv.begin(), fv.end());
    if (cur_best < best_seen - cfg.energy_tol) {
      best_seen = cur_best;
      res.trace.emplace_back(evals, cur_best);
      since_improve = 0;
    } else if (++since_improve >= cfg.stall_window) {
      res.converged = true;
      break;
    }
  }

  const std::size_t lo = static_cast<std::size_t>(
      std::min_element(fv.begin(), fv.end()) - fv.begin());
  res.theta = verts[lo];
  res.energy = fv[lo];
  res.evals = evals;
  return res;
}

LocalResult optimize_from(const PauliSum& h, const VqeConfig& cfg,
                          std::vector<double> start) {
  if (cfg.optimizer == VqeOptimizer::gradient_descent_parameter_shift)
    return gradient_descent(h, cfg, std::move(start));
  return nelder_mead(h, cfg, std::move(start));
}

}  // namespace

VqeResult minimize_with_starts(const PauliSum& hamiltonian, const VqeConfig& config,
                               const std::vector<std::vector<double>>& extra_starts) {
  config.validate();
  const int n = hamiltonian.n_qubits;
  const int np = config.layout.param_count(n);

  std::mt19937_64 rng(config.rng_seed);
  std::uniform_real_distribution<double> uni(-std::acos(0.0) * 2.0, std::acos(0.0) * 2.0);

  std::vector<std::vector<double>> starts;
  for (const auto& s : extra_starts) {
    if (static_cast<int>(s.size()) != np)
      throw std::invalid_argument("warm start has wrong parameter count");
    starts.push_back(s);
  }
  for (int r = 0; r < config.restarts; ++r) {
    if (r == 0 && config.initial_strategy == InitialStrategy::zeros_plus_random) {
      starts.emplace_back(np, 0.0);
    } else {
      std::vector<double> s(np);
      for (double& v : s) v = uni(rng);
      starts.push_back(std::move(s));
    }
  }

  VqeResult out;
  out.energy = std::numeric_limits<double>::infinity();
  std::size_t best_idx = 0;
  std::vector<LocalResult> locals;
  locals.reserve(starts.size());
  for (std::size_t r = 0; r < starts.size(); ++r) {
    locals.push_back(optimize_from(hamiltonian, config, std::move(starts[r])));
    const LocalResult& lr = locals.back();
    out.restart_energies.push_back(lr.energy);
    out.restart_traces.push_back(lr.trace);
    out.evaluations += lr.evals;
    if (lr.energy < out.energy) {
      out.energy = lr.energy;
      best_idx = r;
    }
  }
  out.best_theta = locals[best_idx].theta;
  out.converged = locals[best_idx].converged;
  return out;
}

VqeResult minimize(const PauliSum& hamiltonian, const VqeConfig& config) {
  return minimize_with_starts(hamiltonian, config, {});
}

const char* to_string(VqeOptimizer opt) {
  return opt == VqeOptimizer::gradient_descent_parameter_shift
             ? "gradient_descent_parameter_shift"
             : "derivative_free_simplex";
}

const char* to_string(InitialStrategy s) {
  return s == InitialStrategy::zeros_plus_random ? "zeros_plus_random" : "all_random";
}

}  // namespace skyrm
