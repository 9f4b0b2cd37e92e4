#include <doctest.h>

#include <algorithm>
#include <set>

#include "crit/lattice.hpp"

using namespace crit;

TEST_CASE("2x2 free grid has 4 sites and 4 interior edges") {
  Lattice lat(2, BoundaryCondition::Free);
  CHECK(lat.sites() == 4);
  CHECK(lat.edges().size() == 4);
  CHECK(lat.interior_edge_count() == 4);
  CHECK(!lat.wired());
  CHECK(lat.ghost_degree(0) == 0);
  CHECK(lat.mesh() == doctest::Approx(0.5));
}

TEST_CASE("2x2 plus grid wires each corner twice") {
  Lattice lat(2, BoundaryCondition::Plus);
  CHECK(lat.wired());
  CHECK(lat.edges().size() == 4 + 8);
  for (int i = 0; i < 4; ++i) CHECK(lat.ghost_degree(i) == 2);
  std::size_t ghost_bonds = 0;
  for (std::size_t e = lat.interior_edge_count(); e < lat.edges().size(); ++e) {
    CHECK(lat.edges()[e].b == lat.ghost());
    ++ghost_bonds;
  }
  CHECK(ghost_bonds == 8);
}

TEST_CASE("3x3 plus grid: 12 interior edges, 8 ghost-adjacent sites, 12 ghost bonds") {
  Lattice lat(3, BoundaryCondition::Plus);
  CHECK(lat.sites() == 9);
  CHECK(lat.interior_edge_count() == 12);
  CHECK(lat.edges().size() == 24);
  int adjacent = 0, bonds = 0;
  for (int i = 0; i < lat.sites(); ++i) {
    if (lat.ghost_degree(i) > 0) ++adjacent;
    bonds += lat.ghost_degree(i);
  }
  CHECK(adjacent == 8);
  CHECK(bonds == 12);
  CHECK(lat.ghost_degree(lat.index(1, 1)) == 0);
}

TEST_CASE("indexing, neighbors, cell centers") {
  Lattice lat(4, BoundaryCondition::Free);
  CHECK(lat.index(2, 3) == 11);
  CHECK(lat.row(11) == 2);
  CHECK(lat.col(11) == 3);
  CHECK(lat.on_boundary(lat.index(0, 2)));
  CHECK(!lat.on_boundary(lat.index(1, 2)));
  auto nb = lat.neighbors(lat.index(1, 1));
  CHECK(nb.size() == 4);
  CHECK(lat.neighbors(0).size() == 2);
  auto c = lat.center(lat.index(1, 2));
  CHECK(c[0] == doctest::Approx(2.5 / 4));
  CHECK(c[1] == doctest::Approx(1.5 / 4));
}

TEST_CASE("CSR adjacency is consistent with edges") {
  for (auto bc : {BoundaryCondition::Free, BoundaryCondition::Plus}) {
    Lattice lat(5, bc);
    for (int i = 0; i < lat.sites(); ++i) {
      std::multiset<int> from_csr(lat.adj_begin(i), lat.adj_end(i));
      std::multiset<int> expected;
      for (int n : lat.neighbors(i)) expected.insert(n);
      for (int k = 0; k < lat.ghost_degree(i); ++k) expected.insert(lat.ghost());
      CHECK(from_csr == expected);
    }
  }
}

TEST_CASE("dyadic blocks tile the grid") {
  Lattice lat(8, BoundaryCondition::Free);
  auto blocks = dyadic_blocks(lat, 4);
  REQUIRE(blocks.size() == 16);
  std::set<int> covered;
  for (const auto& q : blocks) {
    CHECK(q.side == 2);
    for (int r = q.row0; r < q.row0 + q.side; ++r)
      for (int c = q.col0; c < q.col0 + q.side; ++c) covered.insert(lat.index(r, c));
  }
  CHECK(static_cast<int>(covered.size()) == lat.sites());
  CHECK_THROWS(dyadic_blocks(lat, 3));
}

TEST_CASE("annulus target: interior block gives the full ring") {
  Lattice lat(8, BoundaryCondition::Free);
  SubSquare q{3, 3, 1};  // 3Q is the 3x3 square centered on (3,3)
  auto t = annulus_target(lat, q);
  CHECK(!t.domain_boundary);
  CHECK(t.sites.size() == 8);
  CHECK(std::find(t.sites.begin(), t.sites.end(), lat.index(3, 3)) == t.sites.end());
  CHECK(std::find(t.sites.begin(), t.sites.end(), lat.index(2, 2)) != t.sites.end());
}

TEST_CASE("annulus target: corner block keeps only the surviving ring edges") {
  Lattice lat(8, BoundaryCondition::Plus);
  SubSquare q{0, 0, 2};
  auto t = annulus_target(lat, q);
  CHECK(t.domain_boundary);
  // 3Q spans rows/cols [-2, 4); the surviving ring edges are row 3 and col 3
  CHECK(t.sites.size() == 7);
  CHECK(std::find(t.sites.begin(), t.sites.end(), lat.index(3, 1)) != t.sites.end());
  CHECK(std::find(t.sites.begin(), t.sites.end(), lat.index(1, 3)) != t.sites.end());
  // sites off the clipped ring, grid boundary included, are not targets
  CHECK(std::find(t.sites.begin(), t.sites.end(), lat.index(0, 0)) == t.sites.end());
  CHECK(std::find(t.sites.begin(), t.sites.end(), lat.index(2, 2)) == t.sites.end());
}
