#include "skyrm/hamiltonian.hpp"

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace skyrm {

void ModelParams::validate() const {
  if (!(j_par < 0.0)) throw std::invalid_argument("j_par must be < 0");
  if (!(j_perp > 0.0)) throw std::invalid_argument("j_perp must be > 0");
  if (dmi_magnitude < 0.0) throw std::invalid_argument("dmi_magnitude must be >= 0");
}

namespace {

constexpr double kDropTol = 1e-15;

void push(PauliSum& sum, double coeff, std::vector<PauliFactor> factors) {
  if (std::abs(coeff) <= kDropTol) return;
  sum.terms.push_back(make_string(coeff, std::move(factors)));
}

}  // namespace

PauliSum build_bond_terms(const Lattice& lattice, const ModelParams& params) {
  params.validate();
  if (!lattice.dmi_mode.has_value() && params.dmi_magnitude > 0.0)
    throw std::invalid_argument("lattice has no DMI vectors; call assign_dmi first");
  if (lattice.dmi_mode.has_value() && *lattice.dmi_mode != params.dmi_mode)
    throw std::invalid_argument("lattice DMI mode differs from model params");

  PauliSum sum;
  sum.n_qubits = lattice.n_sites();
  for (const Bond& b : lattice.bonds) {
    const int i = b.i, j = b.j;
    push(sum, params.j_par, {{i, Axis::X}, {j, Axis::X}});
    push(sum, params.j_par, {{i, Axis::Y}, {j, Axis::Y}});
    push(sum, params.j_perp, {{i, Axis::Z}, {j, Axis::Z}});
    // D . (sigma_i x sigma_j), cross product expanded per component
    push(sum, b.d_ij.x, {{i, Axis::Y}, {j, Axis::Z}});
    push(sum, -b.d_ij.x, {{i, Axis::Z}, {j, Axis::Y}});
    push(sum, b.d_ij.y, {{i, Axis::Z}, {j, Axis::X}});
    push(sum, -b.d_ij.y, {{i, Axis::X}, {j, Axis::Z}});
    push(sum, b.d_ij.z, {{i, Axis::X}, {j, Axis::Y}});
    push(sum, -b.d_ij.z, {{i, Axis::Y}, {j, Axis::X}});
  }
  return sum;
}

void append_zeeman(PauliSum& sum, double b_z) {
  if (std::abs(b_z) <= kDropTol) return;
  for (int i = 0; i < sum.n_qubits; ++i)
    sum.terms.push_back(make_string(b_z, {{i, Axis::Z}}));
}

PauliSum build_hamiltonian(const Lattice& lattice, const ModelParams& params) {
  PauliSum sum = build_bond_terms(lattice, params);
  append_zeeman(sum, params.b_z);
  return sum;
}

Eigen::MatrixXcd dense_matrix(const PauliSum& sum, int max_qubits) {
  if (sum.n_qubits < 1) throw std::invalid_argument("dense_matrix: empty operator");
  if (sum.n_qubits > max_qubits)
    throw std::invalid_argument("dense_matrix: " + std::to_string(sum.n_qubits) +
                                " qubits exceeds the cap of " + std::to_string(max_qubits));
  const std::size_t dim = std::size_t{1} << sum.n_qubits;
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
  const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const PauliString& t : sum.terms) {
    std::uint64_t flip = 0, parity = 0;
    int ny = 0;
    for (const PauliFactor& f : t.factors) {
      if (f.site >= sum.n_qubits) throw std::invalid_argument("factor site out of range");
      const std::uint64_t bit = std::uint64_t{1} << f.site;
      if (f.axis == Axis::X) flip |= bit;
      if (f.axis == Axis::Y) { flip |= bit; parity |= bit; ++ny; }
      if (f.axis == Axis::Z) parity |= bit;
    }
    const std::complex<double> base = ipow[ny & 3] * t.coefficient;
    // P|b> = phase(b) |b ^ flip>, phase(b) = i^ny * (-1)^popcount(b & parity)
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t row = col ^ flip;
      mat(row, col) += (std::popcount(col & parity) & 1) ? -base : base;
    }
  }
  return mat;
}

}  // namespace skyrm
