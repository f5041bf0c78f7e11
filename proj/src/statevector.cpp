#include "skyrm/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace skyrm {

double StateVector::norm() const {
  double s = 0.0;
  for (const cplx& a : amp) s += std::norm(a);
  return std::sqrt(s);
}

StateVector zero_state(int n, int max_qubits) {
  if (n < 1) throw std::invalid_argument("zero_state: need at least one qubit");
  if (n > max_qubits)
    throw std::invalid_argument("zero_state: " + std::to_string(n) +
                                " qubits exceeds the cap of " + std::to_string(max_qubits));
  StateVector s;
  s.n_qubits = n;
  s.amp.assign(std::size_t{1} << n, cplx{0.0, 0.0});
  s.amp[0] = 1.0;
  return s;
}

namespace {

void check_qubit(const StateVector& s, int q) {
  if (q < 0 || q >= s.n_qubits) throw std::invalid_argument("qubit index out of range");
}

}  // namespace

void apply_rx(StateVector& state, int qubit, double theta) {
  check_qubit(state, qubit);
  const double c = std::cos(theta / 2.0);
  const cplx ms{0.0, -std::sin(theta / 2.0)};
  const std::size_t stride = std::size_t{1} << qubit;
  const std::size_t dim = state.dim();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t k = base; k < base + stride; ++k) {
      const cplx a0 = state.amp[k];
      const cplx a1 = state.amp[k + stride];
      state.amp[k] = c * a0 + ms * a1;
      state.amp[k + stride] = ms * a0 + c * a1;
    }
  }
}

void apply_rz(StateVector& state, int qubit, double theta) {
  check_qubit(state, qubit);
  const cplx ph0 = std::polar(1.0, -theta / 2.0);
  const cplx ph1 = std::polar(1.0, theta / 2.0);
  const std::size_t stride = std::size_t{1} << qubit;
  const std::size_t dim = state.dim();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t k = base; k < base + stride; ++k) {
      state.amp[k] *= ph0;
      state.amp[k + stride] *= ph1;
    }
  }
}

void apply_cnot(StateVector& state, int control, int target) {
  check_qubit(state, control);
  check_qubit(state, target);
  if (control == target) throw std::invalid_argument("cnot: control equals target");
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  const std::size_t dim = state.dim();
  for (std::size_t k = 0; k < dim; ++k)
    if ((k & cbit) && !(k & tbit)) std::swap(state.amp[k], state.amp[k | tbit]);
}

void apply_cz(StateVector& state, int a, int b) {
  check_qubit(state, a);
  check_qubit(state, b);
  if (a == b) throw std::invalid_argument("cz: identical qubits");
  const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
  const std::size_t dim = state.dim();
  for (std::size_t k = 0; k < dim; ++k)
    if ((k & mask) == mask) state.amp[k] = -state.amp[k];
}

std::vector<CompiledTerm> compile_terms(const PauliSum& sum) {
  static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<CompiledTerm> out;
  out.reserve(sum.terms.size());
  for (const PauliString& t : sum.terms) {
    CompiledTerm ct;
    int ny = 0;
    for (const PauliFactor& f : t.factors) {
      if (f.site < 0 || f.site >= sum.n_qubits)
        throw std::invalid_argument("Pauli factor site out of range");
      const std::uint64_t bit = std::uint64_t{1} << f.site;
      switch (f.axis) {
        case Axis::X: ct.flip |= bit; break;
        case Axis::Y: ct.flip |= bit; ct.parity |= bit; ++ny; break;
        case Axis::Z: ct.parity |= bit; break;
      }
    }
    ct.base = ipow[ny & 3] * t.coefficient;
    out.push_back(ct);
  }
  return out;
}

double expectation(const StateVector& state, const PauliSum& sum) {
  if (sum.n_qubits != state.n_qubits)
    throw std::invalid_argument("expectation: qubit count mismatch");
  const auto terms = compile_terms(sum);
  const std::size_t dim = state.dim();
  cplx acc{0.0, 0.0};
  for (const CompiledTerm& t : terms) {
    cplx term_acc{0.0, 0.0};
    for (std::size_t b = 0; b < dim; ++b) {
      const cplx v = (std::popcount(b & t.parity) & 1) ? -state.amp[b] : state.amp[b];
      term_acc += std::conj(state.amp[b ^ t.flip]) * v;
    }
    acc += t.base * term_acc;
  }
  const double scale = std::max(1.0, std::abs(acc.real()));
  if (std::abs(acc.imag()) > 1e-10 * scale)
    throw std::runtime_error("expectation: non-real result, operator not Hermitian");
  return acc.real();
}

void matvec(const PauliSum& sum, std::span<const cplx> in, std::span<cplx> out) {
  const std::size_t dim = std::size_t{1} << sum.n_qubits;
  if (in.size() != dim || out.size() != dim)
    throw std::invalid_argument("matvec: dimension mismatch");
  const auto terms = compile_terms(sum);
  std::fill(out.begin(), out.end(), cplx{0.0, 0.0});
  for (const CompiledTerm& t : terms) {
    for (std::size_t b = 0; b < dim; ++b) {
      const cplx v = (std::popcount(b & t.parity) & 1) ? -in[b] : in[b];
      out[b ^ t.flip] += t.base * v;
    }
  }
}

std::vector<cplx> matvec(const PauliSum& sum, const std::vector<cplx>& in) {
  std::vector<cplx> out(in.size());
  matvec(sum, std::span<const cplx>(in), std::span<cplx>(out));
  return out;
}

}  // namespace skyrm
