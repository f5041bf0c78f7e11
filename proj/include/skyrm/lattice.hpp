#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "skyrm/geometry.hpp"

namespace skyrm {

// One qubit per lattice site; the statevector size caps the usable N.
inline constexpr int kDefaultMaxSites = 26;

enum class LatticeKind { square, triangular };

// DMI vector orientation relative to the bond direction r_ij:
// parallel gives Bloch-type textures, perpendicular Neel-type.
enum class DmiMode { parallel, perpendicular };

struct LatticeSpec {
  LatticeKind kind = LatticeKind::square;
  int nx = 0;      // square only
  int ny = 0;      // square only
  int shells = 0;  // triangular only: centered hexagonal cluster

  // N = nx*ny (square) or 3*shells*(shells+1)+1 (triangular).
  int site_count() const;
  void validate() const;
  bool operator==(const LatticeSpec&) const = default;
};

struct Site {
  int index = 0;
  Vec2 pos;
};

// Stored once with i < j; r_ij is the unit vector from site i to site j.
struct Bond {
  int i = 0;
  int j = 0;
  Vec2 r_ij;
  Vec3 d_ij;  // DMI vector, zero until assign_dmi
};

// Counterclockwise-oriented triangle of mutually neighboring sites.
struct Triangle {
  std::array<int, 3> v{};
  double signed_area = 0.0;
};

struct Lattice {
  LatticeSpec spec;
  std::vector<Site> sites;
  std::vector<Bond> bonds;
  std::optional<DmiMode> dmi_mode;  // set by assign_dmi
  double dmi_magnitude = 0.0;

  int n_sites() const { return static_cast<int>(sites.size()); }
};

// Enumerates sites and nearest-neighbor bonds under open boundary conditions.
// Bonds come out sorted by (i, j) with r_ij pointing from i to j.
Lattice build_lattice(const LatticeSpec& spec, int max_sites = kDefaultMaxSites);

// parallel:      d_ij = magnitude * (r_ij, 0)
// perpendicular: d_ij = magnitude * (z_hat x r_ij), i.e. r_ij rotated +90 deg.
Lattice assign_dmi(Lattice lattice, DmiMode mode, double magnitude);

// Square cells split along the lower-left -> upper-right diagonal; triangular
// lattices use their elementary triangles. All triangles counterclockwise.
std::vector<Triangle> triangulate(const Lattice& lattice);

// Debug dumps, whitespace-separated: "index x y" / "i j dx dy dz" per line.
std::string dump_sites(const Lattice& lattice);
std::string dump_bonds(const Lattice& lattice);

const char* to_string(LatticeKind kind);
const char* to_string(DmiMode mode);

}  // namespace skyrm
