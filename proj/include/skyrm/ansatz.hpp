#pragma once

#include <utility>
#include <vector>

#include "skyrm/pauli.hpp"
#include "skyrm/statevector.hpp"

namespace skyrm {

enum class EntanglerKind { cnot_chain, cz_chain, cnot_ring };

// Entangler placement plus the layer repetition count. One repetition is the
// plain hardware-efficient ansatz: rotations, entangler, rotations (6N
// angles); each extra repetition appends another entangler + rotation block.
struct EntanglerLayout {
  EntanglerKind kind = EntanglerKind::cnot_chain;
  int repetitions = 1;

  // Ordered (control, target) pairs for n qubits.
  std::vector<std::pair<int, int>> pairs(int n) const;
  int param_count(int n) const { return 3 * n * (repetitions + 1); }
  void validate() const;
  bool operator==(const EntanglerLayout&) const = default;
};

// theta laid out in execution order: 3 angles (theta1, theta2, theta3) per
// qubit for the first-executed rotation block, then the next block, etc.
// Each per-qubit rotation executes Rz(theta3), Rx(theta2), Rz(theta1).
struct AnsatzParams {
  std::vector<double> theta;
  EntanglerLayout layout;
};

StateVector prepare_state(const AnsatzParams& params, int n);

// d E / d theta_k = [E(theta_k + pi/2) - E(theta_k - pi/2)] / 2, exact for
// this gate set.
std::vector<double> parameter_shift_gradient(const AnsatzParams& params,
                                             const PauliSum& hamiltonian);

const char* to_string(EntanglerKind kind);

}  // namespace skyrm
