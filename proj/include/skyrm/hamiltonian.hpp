#pragma once

#include <Eigen/Dense>

#include "skyrm/lattice.hpp"
#include "skyrm/pauli.hpp"

namespace skyrm {

// Couplings in units of |J_par|; b_z dimensionless. Spin operators are Pauli
// matrices with eigenvalues +-1, not spin-1/2 operators.
struct ModelParams {
  double j_par = -1.0;         // in-plane exchange, < 0 (ferromagnetic)
  double j_perp = 0.5;         // z exchange, > 0
  double dmi_magnitude = 1.0;  // |D|, >= 0
  DmiMode dmi_mode = DmiMode::parallel;
  double b_z = 0.0;            // out-of-plane field

  void validate() const;
  bool operator==(const ModelParams&) const = default;
};

// Per bond (i,j): j_par (XiXj + YiYj) + j_perp ZiZj
//               + dx (YiZj - ZiYj) + dy (ZiXj - XiZj) + dz (XiYj - YiXj),
// then b_z Zi per site. Zero-coefficient strings are dropped (tol 1e-15);
// term order is deterministic (bond order, fixed intra-bond order, Zeeman).
PauliSum build_hamiltonian(const Lattice& lattice, const ModelParams& params);

// The b_z-independent bond part; run_sweep appends Zeeman terms per grid point.
PauliSum build_bond_terms(const Lattice& lattice, const ModelParams& params);
void append_zeeman(PauliSum& sum, double b_z);

// Kronecker-product expansion with qubit 0 as the least-significant bit.
// Guarded by a size cap: 2^12 x 2^12 is the largest dense matrix allowed.
Eigen::MatrixXcd dense_matrix(const PauliSum& sum, int max_qubits = 12);

}  // namespace skyrm
