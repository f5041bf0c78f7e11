#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "skyrm/lattice.hpp"

using namespace skyrm;

namespace {

// Brute-force oracle: every pair at unit distance, independent of the
// enumeration order in build_lattice.
std::set<std::pair<int, int>> unit_distance_pairs(const std::vector<Site>& sites) {
  std::set<std::pair<int, int>> pairs;
  for (std::size_t a = 0; a < sites.size(); ++a)
    for (std::size_t b = a + 1; b < sites.size(); ++b)
      if (std::abs((sites[b].pos - sites[a].pos).norm() - 1.0) < 1e-9)
        pairs.insert({int(a), int(b)});
  return pairs;
}

Lattice square(int nx, int ny) { return build_lattice({LatticeKind::square, nx, ny, 0}); }
Lattice hex(int shells) { return build_lattice({LatticeKind::triangular, 0, 0, shells}); }

}  // namespace

TEST_CASE("square 2x2 enumeration") {
  Lattice lat = square(2, 2);
  CHECK(lat.n_sites() == 4);
  CHECK(lat.bonds.size() == 4);
  // row-major indexing: site 3 is (1, 1)
  CHECK(lat.sites[3].pos.x == 1.0);
  CHECK(lat.sites[3].pos.y == 1.0);
}

TEST_CASE("square 4x4 bonds match the brute-force pair oracle") {
  Lattice lat = square(4, 4);
  CHECK(lat.n_sites() == 16);
  CHECK(lat.bonds.size() == 24);  // nx(ny-1) + ny(nx-1)
  auto expected = unit_distance_pairs(lat.sites);
  std::set<std::pair<int, int>> got;
  for (const Bond& b : lat.bonds) {
    CHECK(b.i < b.j);
    CHECK(std::abs(b.r_ij.norm() - 1.0) < 1e-12);
    got.insert({b.i, b.j});
  }
  CHECK(got == expected);
  CHECK(std::is_sorted(lat.bonds.begin(), lat.bonds.end(), [](auto& a, auto& b) {
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }));
}

TEST_CASE("triangular shells=1 cluster") {
  Lattice lat = hex(1);
  CHECK(lat.n_sites() == 7);
  CHECK(lat.bonds.size() == 12);
  CHECK(unit_distance_pairs(lat.sites).size() == 12);
}

TEST_CASE("triangular shells=2 cluster") {
  Lattice lat = hex(2);
  CHECK(lat.n_sites() == 19);
  auto expected = unit_distance_pairs(lat.sites);
  CHECK(lat.bonds.size() == expected.size());
}

TEST_CASE("site count guards") {
  CHECK_THROWS_AS(build_lattice({LatticeKind::square, 0, 3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice({LatticeKind::square, 6, 5, 0}), std::invalid_argument);
  CHECK_NOTHROW(build_lattice({LatticeKind::square, 5, 5, 0}));
  CHECK_THROWS_AS(build_lattice({LatticeKind::triangular, 0, 0, -1}), std::invalid_argument);
}

TEST_CASE("DMI assignment definitions") {
  Lattice lat = assign_dmi(square(2, 1), DmiMode::parallel, 1.0);
  REQUIRE(lat.bonds.size() == 1);
  CHECK(lat.bonds[0].d_ij.x == doctest::Approx(1.0));
  CHECK(lat.bonds[0].d_ij.y == doctest::Approx(0.0));
  CHECK(lat.bonds[0].d_ij.z == 0.0);

  lat = assign_dmi(square(2, 1), DmiMode::perpendicular, 1.0);
  CHECK(lat.bonds[0].d_ij.x == doctest::Approx(0.0));
  CHECK(lat.bonds[0].d_ij.y == doctest::Approx(1.0));  // z_hat x x_hat = y_hat
  CHECK(lat.bonds[0].d_ij.z == 0.0);

  // triangular bond along (1/2, sqrt(3)/2)
  Lattice tri = assign_dmi(hex(1), DmiMode::parallel, 1.0);
  bool found = false;
  for (const Bond& b : tri.bonds) {
    if (std::abs(b.r_ij.x - 0.5) < 1e-12 && std::abs(b.r_ij.y - std::sqrt(3.0) / 2) < 1e-12) {
      CHECK(b.d_ij.x == doctest::Approx(0.5));
      CHECK(b.d_ij.y == doctest::Approx(std::sqrt(3.0) / 2));
      CHECK(b.d_ij.z == 0.0);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("DMI vector invariants") {
  for (DmiMode mode : {DmiMode::parallel, DmiMode::perpendicular}) {
    for (double mag : {0.0, 0.7, 1.0}) {
      Lattice lat = assign_dmi(square(3, 4), mode, mag);
      Lattice tri = assign_dmi(hex(2), mode, mag);
      for (const Lattice* l : {&lat, &tri}) {
        for (const Bond& b : l->bonds) {
          CHECK(b.d_ij.z == 0.0);
          CHECK(std::abs(b.d_ij.norm() - mag) < 1e-12);
          const double dot_r = b.d_ij.x * b.r_ij.x + b.d_ij.y * b.r_ij.y;
          const double cross_z = b.r_ij.x * b.d_ij.y - b.r_ij.y * b.d_ij.x;
          if (mode == DmiMode::perpendicular) CHECK(std::abs(dot_r) < 1e-12);
          else CHECK(std::abs(cross_z) < 1e-12);
        }
      }
    }
  }
  CHECK_THROWS_AS(assign_dmi(square(2, 2), DmiMode::parallel, -0.5), std::invalid_argument);
}

TEST_CASE("bond set closed under 90-degree rotation of the square lattice") {
  Lattice lat = square(4, 4);
  // rotation about the lattice center: (x, y) -> (y, 3 - x)
  auto rotate_index = [&](int idx) {
    const Vec2 p = lat.sites[idx].pos;
    const int rx = int(std::lround(p.y));
    const int ry = int(std::lround(3.0 - p.x));
    return rx + ry * 4;
  };
  std::set<std::pair<int, int>> bonds;
  for (const Bond& b : lat.bonds) bonds.insert({b.i, b.j});
  for (const Bond& b : lat.bonds) {
    int i = rotate_index(b.i), j = rotate_index(b.j);
    if (i > j) std::swap(i, j);
    CHECK(bonds.count({i, j}) == 1);
  }
}

TEST_CASE("square triangulation") {
  auto tris = triangulate(square(2, 2));
  REQUIRE(tris.size() == 2);
  CHECK(tris[0].signed_area == doctest::Approx(0.5));
  CHECK(tris[1].signed_area == doctest::Approx(0.5));

  CHECK(triangulate(square(4, 4)).size() == 18);  // (nx-1)(ny-1)*2
  CHECK_THROWS_AS(triangulate(square(2, 1)), std::invalid_argument);
}

TEST_CASE("triangular shells=1 has the six elementary triangles") {
  auto tris = triangulate(hex(1));
  CHECK(tris.size() == 6);
  for (const Triangle& t : tris)
    CHECK(t.signed_area == doctest::Approx(std::sqrt(3.0) / 4).epsilon(1e-12));
}

TEST_CASE("triangle areas tile the convex hull") {
  auto area_sum = [](const std::vector<Triangle>& tris) {
    double s = 0;
    for (const Triangle& t : tris) {
      REQUIRE(t.signed_area > 0.0);
      s += t.signed_area;
    }
    return s;
  };
  CHECK(area_sum(triangulate(square(4, 4))) == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(area_sum(triangulate(square(3, 5))) == doctest::Approx(8.0).epsilon(1e-12));
  // hexagon of unit side: 6 * sqrt(3)/4
  CHECK(area_sum(triangulate(hex(1))) ==
        doctest::Approx(6.0 * std::sqrt(3.0) / 4).epsilon(1e-12));
  CHECK(area_sum(triangulate(hex(2))) ==
        doctest::Approx(24.0 * std::sqrt(3.0) / 4).epsilon(1e-12));
}

TEST_CASE("debug dumps") {
  Lattice lat = assign_dmi(square(2, 2), DmiMode::parallel, 1.0);
  const std::string sites = dump_sites(lat);
  CHECK(sites == "0 0 0\n1 1 0\n2 0 1\n3 1 1\n");
  const std::string bonds = dump_bonds(lat);
  CHECK(bonds.find("0 1 1 0 0\n") == 0);
  CHECK(std::count(bonds.begin(), bonds.end(), '\n') == 4);
}
