#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skyrm {

enum class Axis : std::uint8_t { X, Y, Z };

struct PauliFactor {
  int site = 0;
  Axis axis = Axis::Z;
};

// Product of single-site Pauli factors with a real weight. Real coefficients
// keep every term (and any sum of terms) Hermitian by construction. An empty
// factor list is the identity.
struct PauliString {
  std::vector<PauliFactor> factors;  // sorted by site, at most one per site
  double coefficient = 0.0;
};

struct PauliSum {
  std::vector<PauliString> terms;
  int n_qubits = 0;
};

// Builds a term with factors sorted by site; rejects duplicate sites.
PauliString make_string(double coefficient, std::vector<PauliFactor> factors);

// One term per line, "coeff site:axis site:axis ..." in stored order.
std::string to_text(const PauliSum& sum);

char axis_char(Axis a);

}  // namespace skyrm
