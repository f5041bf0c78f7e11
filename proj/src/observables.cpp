#include "skyrm/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "skyrm/format.hpp"

namespace skyrm {

MagnetizationField magnetization_field(const StateVector& state, const Lattice& lattice) {
  if (state.n_qubits != lattice.n_sites())
    throw std::invalid_argument("state qubit count differs from lattice site count");
  MagnetizationField field;
  field.m.resize(lattice.n_sites());
  PauliSum single;
  single.n_qubits = state.n_qubits;
  single.terms.resize(1);
  for (int i = 0; i < lattice.n_sites(); ++i) {
    Vec3 m;
    for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
      single.terms[0] = make_string(1.0, {{i, ax}});
      const double v = expectation(state, single);
      if (ax == Axis::X) m.x = v;
      else if (ax == Axis::Y) m.y = v;
      else m.z = v;
    }
    field.m[i] = m;
  }
  return field;
}

Vec3 total_magnetization(const MagnetizationField& field) {
  Vec3 total;
  for (const Vec3& m : field.m) total = total + m;
  return total;
}

namespace {

Vec3 site_vector(const MagnetizationField& field, int i, bool normalize) {
  Vec3 m = field.m[i];
  if (normalize) {
    const double len = m.norm();
    if (len > 1e-12) m = m * (1.0 / len);
  }
  return m;
}

}  // namespace

TriangleCoefficients triangle_coefficients(const Triangle& tri,
                                           const MagnetizationField& field,
                                           const std::vector<Site>& sites) {
  if (!(tri.signed_area > 0.0))
    throw std::invalid_argument("degenerate triangle (collinear vertices)");
  const Vec2 pi = sites[tri.v[0]].pos;
  const Vec2 pj = sites[tri.v[1]].pos;
  const Vec2 pk = sites[tri.v[2]].pos;
  const Vec3 mi = field.m[tri.v[0]];
  const Vec3 mj = field.m[tri.v[1]];
  const Vec3 mk = field.m[tri.v[2]];

  // Solve [xj-xi yj-yi; xk-xi yk-yi] (a b)^T = (mj-mi mk-mi)^T per component;
  // the determinant equals twice the signed area.
  const double det = 2.0 * tri.signed_area;
  const Vec2 ej = pj - pi;
  const Vec2 ek = pk - pi;
  const Vec3 dj = mj - mi;
  const Vec3 dk = mk - mi;
  TriangleCoefficients out;
  out.a = (dj * ek.y - dk * ej.y) * (1.0 / det);
  out.b = (dk * ej.x - dj * ek.x) * (1.0 / det);
  out.c = mi - (out.a * pi.x + out.b * pi.y);
  return out;
}

double topological_charge(const std::vector<Triangle>& triangles,
                          const std::vector<Site>& sites,
                          const MagnetizationField& field, bool normalize) {
  double q = 0.0;
  for (const Triangle& tri : triangles) {
    if (!(tri.signed_area > 0.0))
      throw std::invalid_argument("degenerate triangle (collinear vertices)");
    const Vec2 pi = sites[tri.v[0]].pos;
    const Vec2 ej = sites[tri.v[1]].pos - pi;
    const Vec2 ek = sites[tri.v[2]].pos - pi;
    const Vec3 mi = site_vector(field, tri.v[0], normalize);
    const Vec3 dj = site_vector(field, tri.v[1], normalize) - mi;
    const Vec3 dk = site_vector(field, tri.v[2], normalize) - mi;
    const double det = 2.0 * tri.signed_area;
    // Local coordinates with vertex i at the origin; c is then just m_i.
    const Vec3 a = (dj * ek.y - dk * ej.y) * (1.0 / det);
    const Vec3 b = (dk * ej.x - dj * ek.x) * (1.0 / det);
    q += tri.signed_area * triple(a, b, mi);
  }
  return q / (4.0 * std::numbers::pi);
}

double topological_charge(const Lattice& lattice, const MagnetizationField& field,
                          bool normalize) {
  return topological_charge(triangulate(lattice), lattice.sites, field, normalize);
}

std::string dump_field(const Lattice& lattice, const MagnetizationField& field) {
  std::string out;
  for (const Site& s : lattice.sites) {
    const Vec3& m = field.m[s.index];
    out += std::to_string(s.index) + " " + format_double(s.pos.x) + " " +
           format_double(s.pos.y) + " " + format_double(m.x) + " " +
           format_double(m.y) + " " + format_double(m.z) + "\n";
  }
  return out;
}

}  // namespace skyrm
