#include "skyrm/ansatz.hpp"

#include <stdexcept>

namespace skyrm {

void EntanglerLayout::validate() const {
  if (repetitions < 1) throw std::invalid_argument("entangler repetitions must be >= 1");
}

std::vector<std::pair<int, int>> EntanglerLayout::pairs(int n) const {
  std::vector<std::pair<int, int>> p;
  for (int q = 0; q + 1 < n; ++q) p.emplace_back(q, q + 1);
  if (kind == EntanglerKind::cnot_ring && n >= 2) p.emplace_back(n - 1, 0);
  return p;
}

StateVector prepare_state(const AnsatzParams& params, int n) {
  params.layout.validate();
  const int expected = params.layout.param_count(n);
  if (static_cast<int>(params.theta.size()) != expected)
    throw std::invalid_argument("ansatz expects " + std::to_string(expected) +
                                " parameters, got " + std::to_string(params.theta.size()));

  StateVector state = zero_state(n);
  const auto ent_pairs = params.layout.pairs(n);
  const int blocks = params.layout.repetitions + 1;
  for (int b = 0; b < blocks; ++b) {
    const double* th = params.theta.data() + 3 * n * b;
    for (int q = 0; q < n; ++q) {
      apply_rz(state, q, th[3 * q + 2]);
      apply_rx(state, q, th[3 * q + 1]);
      apply_rz(state, q, th[3 * q + 0]);
    }
    if (b + 1 < blocks) {
      for (const auto& [c, t] : ent_pairs) {
        if (params.layout.kind == EntanglerKind::cz_chain)
          apply_cz(state, c, t);
        else
          apply_cnot(state, c, t);
      }
    }
  }
  return state;
}

std::vector<double> parameter_shift_gradient(const AnsatzParams& params,
                                             const PauliSum& hamiltonian) {
  const double half_pi = std::acos(0.0);
  AnsatzParams shifted = params;
  std::vector<double> grad(params.theta.size());
  const int n = hamiltonian.n_qubits;
  for (std::size_t k = 0; k < params.theta.size(); ++k) {
    shifted.theta[k] = params.theta[k] + half_pi;
    const double ep = expectation(prepare_state(shifted, n), hamiltonian);
    shifted.theta[k] = params.theta[k] - half_pi;
    const double em = expectation(prepare_state(shifted, n), hamiltonian);
    shifted.theta[k] = params.theta[k];
    grad[k] = 0.5 * (ep - em);
  }
  return grad;
}

const char* to_string(EntanglerKind kind) {
  switch (kind) {
    case EntanglerKind::cnot_chain: return "cnot_chain";
    case EntanglerKind::cz_chain: return "cz_chain";
    default: return "cnot_ring";
  }
}

}  // namespace skyrm
