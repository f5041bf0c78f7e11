#pragma once

#include <cstdint>
#include <vector>

#include "skyrm/pauli.hpp"
#include "skyrm/statevector.hpp"

namespace skyrm {

struct LanczosConfig {
  int max_krylov = 80;          // basis size before a thick restart
  double residual_tol = 1e-10;  // scaled by max(1, |E|)
  bool reorthogonalize = true;  // full reorthogonalization against the stored basis
  std::uint64_t rng_seed = 1234;
  int max_restarts = 60;
  int keep_on_restart = 8;      // Ritz pairs carried across a thick restart
  bool collect_basis = false;   // diagnostics: copy the final Krylov basis out

  void validate() const;
  bool operator==(const LanczosConfig&) const = default;
};

struct GroundState {
  double energy = 0.0;
  StateVector vector;
  double residual = 0.0;      // ||H v - E v||, computed explicitly
  double gap_estimate = 0.0;  // distance to the second Ritz value
  bool near_degenerate = false;
  bool converged = true;
  int matvec_count = 0;
  std::vector<double> ritz_trace;  // lowest Ritz value after each step
  std::vector<std::vector<cplx>> debug_basis;  // only with collect_basis
};

// Lowest eigenpair via reorthogonalized Lanczos with thick restarts, using the
// matrix-free matvec. Non-convergence is reported via converged=false with the
// best residual reached, not an exception.
GroundState lanczos_ground(const PauliSum& hamiltonian, const LanczosConfig& config = {});

// Full dense diagonalization, N <= 12. Oracle for the iterative path.
GroundState dense_ground(const PauliSum& hamiltonian);

}  // namespace skyrm
