#pragma once

// Brute-force reference implementations, kept independent of the library
// kernels they check: explicit Kronecker products here versus bit arithmetic
// in the library.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "skyrm/pauli.hpp"
#include "skyrm/statevector.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat pauli_matrix(skyrm::Axis a) {
  Mat m(2, 2);
  switch (a) {
    case skyrm::Axis::X: m << 0, 1, 1, 0; break;
    case skyrm::Axis::Y: m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Qubit 0 is the least-significant bit: full = op_{n-1} x ... x op_1 x op_0.
inline Mat string_matrix(const skyrm::PauliString& s, int n) {
  std::vector<Mat> ops(n, Mat::Identity(2, 2));
  for (const skyrm::PauliFactor& f : s.factors) ops[f.site] = pauli_matrix(f.axis);
  Mat full = ops[n - 1];
  for (int q = n - 2; q >= 0; --q) full = kron(full, ops[q]);
  return full * s.coefficient;
}

inline Mat sum_matrix(const skyrm::PauliSum& sum) {
  const Eigen::Index dim = Eigen::Index(1) << sum.n_qubits;
  Mat full = Mat::Zero(dim, dim);
  for (const skyrm::PauliString& t : sum.terms) full += string_matrix(t, sum.n_qubits);
  return full;
}

// Embeds a 2x2 gate on one qubit as a full 2^n matrix.
inline Mat gate_matrix(const Mat& gate, int qubit, int n) {
  std::vector<Mat> ops(n, Mat::Identity(2, 2));
  ops[qubit] = gate;
  Mat full = ops[n - 1];
  for (int q = n - 2; q >= 0; --q) full = kron(full, ops[q]);
  return full;
}

inline Mat rx_matrix(double theta) {
  Mat m(2, 2);
  m << std::cos(theta / 2), cplx(0, -std::sin(theta / 2)),
       cplx(0, -std::sin(theta / 2)), std::cos(theta / 2);
  return m;
}

inline Mat rz_matrix(double theta) {
  Mat m(2, 2);
  m << std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2);
  return m;
}

inline Vec to_eigen(const skyrm::StateVector& s) {
  Vec v(s.amp.size());
  for (std::size_t k = 0; k < s.amp.size(); ++k) v(k) = s.amp[k];
  return v;
}

inline skyrm::StateVector random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  skyrm::StateVector s;
  s.n_qubits = n;
  s.amp.resize(std::size_t{1} << n);
  double norm2 = 0;
  for (cplx& a : s.amp) {
    a = cplx(gauss(rng), gauss(rng));
    norm2 += std::norm(a);
  }
  for (cplx& a : s.amp) a /= std::sqrt(norm2);
  return s;
}

inline skyrm::PauliSum random_pauli_sum(int n, int n_terms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> axis_dist(0, 2);
  std::uniform_int_distribution<int> weight_dist(1, n);
  std::uniform_real_distribution<double> coeff_dist(-2.0, 2.0);
  skyrm::PauliSum sum;
  sum.n_qubits = n;
  for (int t = 0; t < n_terms; ++t) {
    const int weight = weight_dist(rng);
    std::vector<int> sites(n);
    std::iota(sites.begin(), sites.end(), 0);
    std::shuffle(sites.begin(), sites.end(), rng);
    std::vector<skyrm::PauliFactor> factors;
    for (int w = 0; w < weight; ++w)
      factors.push_back({sites[w], static_cast<skyrm::Axis>(axis_dist(rng))});
    sum.terms.push_back(skyrm::make_string(coeff_dist(rng), std::move(factors)));
  }
  return sum;
}

}  // namespace oracle
