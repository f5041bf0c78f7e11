#pragma once

#include <string>
#include <vector>

#include "skyrm/geometry.hpp"
#include "skyrm/lattice.hpp"
#include "skyrm/statevector.hpp"

namespace skyrm {

// Raw per-site expectation vectors m_i = (<sx_i>, <sy_i>, <sz_i>); quantum
// states give |m_i| <= 1 but generally not unit length.
struct MagnetizationField {
  std::vector<Vec3> m;
};

// Coefficients of the linear interpolant m_t(x, y) = a x + b y + c on one
// triangle.
struct TriangleCoefficients {
  Vec3 a, b, c;
};

MagnetizationField magnetization_field(const StateVector& state, const Lattice& lattice);

Vec3 total_magnetization(const MagnetizationField& field);

TriangleCoefficients triangle_coefficients(const Triangle& tri,
                                           const MagnetizationField& field,
                                           const std::vector<Site>& sites);

// Q = (1/4pi) sum_t S_t (a_t x b_t) . c_t over the counterclockwise
// triangulation. The triple product is origin-independent, so each triangle is
// evaluated in local coordinates with its first vertex at the origin.
// normalize rescales each site vector to unit length first (off by default;
// the raw expectation values are the literal construction).
double topological_charge(const Lattice& lattice, const MagnetizationField& field,
                          bool normalize = false);
double topological_charge(const std::vector<Triangle>& triangles,
                          const std::vector<Site>& sites,
                          const MagnetizationField& field, bool normalize = false);

// One line per site: "index x y mx my mz".
std::string dump_field(const Lattice& lattice, const MagnetizationField& field);

}  // namespace skyrm
