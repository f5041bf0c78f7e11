#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "skyrm/pauli.hpp"

namespace skyrm {

using cplx = std::complex<double>;

// Dense amplitudes over the 2^N computational basis states, qubit 0 stored in
// the least-significant bit of the basis index.
struct StateVector {
  int n_qubits = 0;
  std::vector<cplx> amp;

  std::size_t dim() const { return amp.size(); }
  double norm() const;
};

StateVector zero_state(int n, int max_qubits = 26);

// exp(-i theta X/2) / exp(-i theta Z/2) on one qubit, in place.
void apply_rx(StateVector& state, int qubit, double theta);
void apply_rz(StateVector& state, int qubit, double theta);
void apply_cnot(StateVector& state, int control, int target);
void apply_cz(StateVector& state, int a, int b);

// <state| sum |state>. The imaginary residue must stay below 1e-10 (real
// coefficients guarantee Hermiticity); it is asserted, then discarded.
double expectation(const StateVector& state, const PauliSum& sum);

// out = H * in without materializing the dense matrix.
void matvec(const PauliSum& sum, std::span<const cplx> in, std::span<cplx> out);
std::vector<cplx> matvec(const PauliSum& sum, const std::vector<cplx>& in);

// Per-term bitmask form used by the matvec/expectation kernels.
struct CompiledTerm {
  std::uint64_t flip = 0;    // X and Y sites
  std::uint64_t parity = 0;  // Y and Z sites
  cplx base;                 // i^{#Y} * coefficient
};
std::vector<CompiledTerm> compile_terms(const PauliSum& sum);

}  // namespace skyrm
