#pragma once

#include <cstdint>
#include <vector>

#include "skyrm/ansatz.hpp"
#include "skyrm/pauli.hpp"

namespace skyrm {

enum class VqeOptimizer { gradient_descent_parameter_shift, derivative_free_simplex };
enum class InitialStrategy { zeros_plus_random, all_random };

struct VqeConfig {
  VqeOptimizer optimizer = VqeOptimizer::gradient_descent_parameter_shift;
  long max_evals = 2'000'000;  // energy evaluations per restart
  double energy_tol = 1e-8;
  int restarts = 8;
  std::uint64_t rng_seed = 1234;
  InitialStrategy initial_strategy = InitialStrategy::zeros_plus_random;
  EntanglerLayout layout;
  int stall_window = 50;     // iterations without energy_tol improvement
  double initial_step = 0.2;

  void validate() const;
  bool operator==(const VqeConfig&) const = default;
};

struct VqeResult {
  std::vector<double> best_theta;
  double energy = 0.0;
  long evaluations = 0;
  std::vector<double> restart_energies;
  bool converged = false;
  // (evaluation count, best energy) at each improvement, one trace per start.
  std::vector<std::vector<std::pair<long, double>>> restart_traces;
};

// expectation(prepare_state(theta), H)
double ansatz_energy(const AnsatzParams& params, const PauliSum& hamiltonian);

VqeResult minimize(const PauliSum& hamiltonian, const VqeConfig& config);

// Same, with extra starting points prepended (sweep warm starts). The result
// is the minimum over the union of starts.
VqeResult minimize_with_starts(const PauliSum& hamiltonian, const VqeConfig& config,
                               const std::vector<std::vector<double>>& extra_starts);

const char* to_string(VqeOptimizer opt);
const char* to_string(InitialStrategy s);

}  // namespace skyrm
