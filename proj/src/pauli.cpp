#include "skyrm/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "skyrm/format.hpp"

namespace skyrm {

PauliString make_string(double coefficient, std::vector<PauliFactor> factors) {
  if (!std::isfinite(coefficient)) throw std::invalid_argument("non-finite coefficient");
  std::sort(factors.begin(), factors.end(),
            [](const PauliFactor& a, const PauliFactor& b) { return a.site < b.site; });
  for (size_t k = 1; k < factors.size(); ++k)
    if (factors[k].site == factors[k - 1].site)
      throw std::invalid_argument("duplicate site in Pauli string");
  for (const PauliFactor& f : factors)
    if (f.site < 0) throw std::invalid_argument("negative site index");
  return {std::move(factors), coefficient};
}

char axis_char(Axis a) {
  switch (a) {
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    default: return 'Z';
  }
}

std::string to_text(const PauliSum& sum) {
  std::string out;
  for (const PauliString& t : sum.terms) {
    out += format_double(t.coefficient);
    for (const PauliFactor& f : t.factors) {
      out += ' ';
      out += std::to_string(f.site);
      out += ':';
      out += axis_char(f.axis);
    }
    out += '\n';
  }
  return out;
}

}  // namespace skyrm
