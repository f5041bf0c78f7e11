#include "skyrm/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "skyrm/format.hpp"

namespace skyrm {

int LatticeSpec::site_count() const {
  if (kind == LatticeKind::square) return nx * ny;
  return 3 * shells * (shells + 1) + 1;
}

void LatticeSpec::validate() const {
  if (kind == LatticeKind::square) {
    if (nx < 1 || ny < 1) throw std::invalid_argument("square lattice needs nx, ny >= 1");
  } else {
    if (shells < 0) throw std::invalid_argument("triangular lattice needs shells >= 0");
  }
}

namespace {

std::vector<Site> square_sites(int nx, int ny) {
  std::vector<Site> sites;
  sites.reserve(static_cast<size_t>(nx) * ny);
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix)
      sites.push_back({ix + iy * nx, {double(ix), double(iy)}});  // row-major index
  return sites;
}

// Centered hexagonal cluster: axial coordinates (q, r) with
// max(|q|, |r|, |q+r|) <= shells, embedded at unit nearest-neighbor distance.
std::vector<Site> triangular_sites(int shells) {
  std::vector<std::pair<int, int>> axial;
  for (int r = -shells; r <= shells; ++r)
    for (int q = -shells; q <= shells; ++q)
      if (std::abs(q + r) <= shells) axial.emplace_back(q, r);
  // Deterministic ordering: by (y, x) of the embedding, like the square case.
  std::sort(axial.begin(), axial.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  std::vector<Site> sites;
  sites.reserve(axial.size());
  const double sqrt3_2 = std::sqrt(3.0) / 2.0;
  for (size_t k = 0; k < axial.size(); ++k) {
    auto [q, r] = axial[k];
    sites.push_back({int(k), {q + 0.5 * r, sqrt3_2 * r}});
  }
  return sites;
}

std::vector<Bond> nearest_neighbor_bonds(const std::vector<Site>& sites) {
  std::vector<Bond> bonds;
  const double tol = 1e-9;
  for (size_t a = 0; a < sites.size(); ++a) {
    for (size_t b = a + 1; b < sites.size(); ++b) {
      Vec2 d = sites[b].pos - sites[a].pos;
      if (std::abs(d.norm() - 1.0) < tol)
        bonds.push_back({int(a), int(b), d, {}});
    }
  }
  std::sort(bonds.begin(), bonds.end(), [](const Bond& x, const Bond& y) {
    return std::tie(x.i, x.j) < std::tie(y.i, y.j);
  });
  return bonds;
}

}  // namespace

Lattice build_lattice(const LatticeSpec& spec, int max_sites) {
  spec.validate();
  const int n = spec.site_count();
  if (n < 1) throw std::invalid_argument("lattice has no sites");
  if (n > max_sites)
    throw std::invalid_argument("lattice with " + std::to_string(n) +
                                " sites exceeds the cap of " + std::to_string(max_sites));
  Lattice lat;
  lat.spec = spec;
  lat.sites = (spec.kind == LatticeKind::square) ? square_sites(spec.nx, spec.ny)
                                                 : triangular_sites(spec.shells);
  lat.bonds = nearest_neighbor_bonds(lat.sites);
  return lat;
}

Lattice assign_dmi(Lattice lattice, DmiMode mode, double magnitude) {
  if (magnitude < 0.0) throw std::invalid_argument("DMI magnitude must be >= 0");
  for (Bond& b : lattice.bonds) {
    if (mode == DmiMode::parallel)
      b.d_ij = Vec3{b.r_ij.x, b.r_ij.y, 0.0} * magnitude;
    else
      b.d_ij = Vec3{-b.r_ij.y, b.r_ij.x, 0.0} * magnitude;  // z_hat x r_ij
  }
  lattice.dmi_mode = mode;
  lattice.dmi_magnitude = magnitude;
  return lattice;
}

std::vector<Triangle> triangulate(const Lattice& lattice) {
  if (lattice.n_sites() < 3)
    throw std::invalid_argument("triangulation needs at least 3 sites");

  auto signed_area = [&](int i, int j, int k) {
    const Vec2& a = lattice.sites[i].pos;
    const Vec2& b = lattice.sites[j].pos;
    const Vec2& c = lattice.sites[k].pos;
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
  };
  auto make_ccw = [&](int i, int j, int k) {
    double s = signed_area(i, j, k);
    if (s < 0.0) {
      std::swap(j, k);
      s = -s;
    }
    return Triangle{{i, j, k}, s};
  };

  std::vector<Triangle> tris;
  if (lattice.spec.kind == LatticeKind::square) {
    const int nx = lattice.spec.nx, ny = lattice.spec.ny;
    for (int iy = 0; iy + 1 < ny; ++iy) {
      for (int ix = 0; ix + 1 < nx; ++ix) {
        const int ll = ix + iy * nx;
        const int lr = ll + 1;
        const int ul = ll + nx;
        const int ur = ul + 1;
        tris.push_back(make_ccw(ll, lr, ur));  // below the ll -> ur diagonal
        tris.push_back(make_ccw(ll, ur, ul));  // above it
      }
    }
  } else {
    // Elementary triangles = 3-cliques of the nearest-neighbor graph.
    std::vector<std::vector<int>> nb(lattice.n_sites());
    for (const Bond& b : lattice.bonds) {
      nb[b.i].push_back(b.j);
      nb[b.j].push_back(b.i);
    }
    std::set<std::array<int, 3>> seen;
    for (const Bond& b : lattice.bonds) {
      for (int k : nb[b.i]) {
        if (k == b.j) continue;
        if (std::find(nb[b.j].begin(), nb[b.j].end(), k) == nb[b.j].end()) continue;
        std::array<int, 3> key{b.i, b.j, k};
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) tris.push_back(make_ccw(key[0], key[1], key[2]));
      }
    }
    std::sort(tris.begin(), tris.end(),
              [](const Triangle& a, const Triangle& b) { return a.v < b.v; });
  }
  return tris;
}

std::string dump_sites(const Lattice& lattice) {
  std::string out;
  for (const Site& s : lattice.sites)
    out += std::to_string(s.index) + " " + format_double(s.pos.x) + " " +
           format_double(s.pos.y) + "\n";
  return out;
}

std::string dump_bonds(const Lattice& lattice) {
  std::string out;
  for (const Bond& b : lattice.bonds)
    out += std::to_string(b.i) + " " + std::to_string(b.j) + " " +
           format_double(b.d_ij.x) + " " + format_double(b.d_ij.y) + " " +
           format_double(b.d_ij.z) + "\n";
  return out;
}

const char* to_string(LatticeKind kind) {
  return kind == LatticeKind::square ? "square" : "triangular";
}

const char* to_string(DmiMode mode) {
  return mode == DmiMode::parallel ? "parallel" : "perpendicular";
}

}  // namespace skyrm
