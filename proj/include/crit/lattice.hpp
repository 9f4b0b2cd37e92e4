#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace crit {

enum class BoundaryCondition { Plus, Minus, Free };

const char* to_string(BoundaryCondition bc);
BoundaryCondition boundary_from_string(const std::string& s);

// Undirected bond; b may equal Lattice::ghost() for wired boundary bonds.
struct Edge {
  std::int32_t a;
  std::int32_t b;
};

// Axis-aligned block of cells, origin at (row0, col0), `side` cells per side.
struct SubSquare {
  int row0;
  int col0;
  int side;
};

// N x N grid of sites mapped onto [0,1]^2 with mesh a = 1/N. Site (r, c) has
// index r*N + c and owns the cell of side a centered at ((c+1/2)/N, (r+1/2)/N).
// Under Plus/Minus boundary conditions a single ghost element (index N^2)
// carries one bond per missing in-grid neighbor of each boundary site.
class Lattice {
 public:
  Lattice(int n_side, BoundaryCondition bc);

  int side() const { return n_; }
  BoundaryCondition boundary() const { return bc_; }
  bool wired() const { return bc_ != BoundaryCondition::Free; }
  double mesh() const { return 1.0 / n_; }

  int sites() const { return n_ * n_; }
  int ghost() const { return n_ * n_; }

  int index(int row, int col) const { return row * n_ + col; }
  int row(int i) const { return i / n_; }
  int col(int i) const { return i % n_; }
  bool on_boundary(int i) const {
    int r = row(i), c = col(i);
    return r == 0 || c == 0 || r == n_ - 1 || c == n_ - 1;
  }
  std::array<double, 2> center(int i) const {
    return {(col(i) + 0.5) / n_, (row(i) + 0.5) / n_};
  }

  // in-grid neighbors only (2-4 of them)
  std::vector<int> neighbors(int i) const;

  // number of ghost bonds at a site (0 under Free)
  int ghost_degree(int i) const;

  // interior edges first, then ghost edges (wired only)
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t interior_edge_count() const { return interior_edges_; }

  // CSR adjacency over sites plus ghost (ghost multi-edges repeated)
  const std::int32_t* adj_begin(int i) const { return adj_to_.data() + adj_off_[i]; }
  const std::int32_t* adj_end(int i) const { return adj_to_.data() + adj_off_[i + 1]; }

 private:
  int n_;
  BoundaryCondition bc_;
  std::vector<Edge> edges_;
  std::size_t interior_edges_;
  std::vector<std::int32_t> adj_off_;
  std::vector<std::int32_t> adj_to_;
};

// Disjoint tiling of the grid into rho_inv^2 blocks of side n/rho_inv cells.
std::vector<SubSquare> dyadic_blocks(const Lattice& lat, int rho_inv);

// Discrete target set for the event "x is connected to the boundary of 3Q".
// Sites on the inner ring of the concentric square of triple side, clipped to
// the grid; `domain_boundary` is set when the ring overflows the grid, in
// which case the ghost participates as a target under wired boundary
// conditions.
struct AnnulusTarget {
  std::vector<int> sites;
  bool domain_boundary = false;
};

AnnulusTarget annulus_target(const Lattice& lat, const SubSquare& q);

}  // namespace crit
