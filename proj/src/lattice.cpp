#include "crit/lattice.hpp"

#include <stdexcept>
#include <string>

namespace crit {

const char* to_string(BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::Plus: return "plus";
    case BoundaryCondition::Minus: return "minus";
    case BoundaryCondition::Free: return "free";
  }
  return "?";
}

BoundaryCondition boundary_from_string(const std::string& s) {
  if (s == "plus") return BoundaryCondition::Plus;
  if (s == "minus") return BoundaryCondition::Minus;
  if (s == "free") return BoundaryCondition::Free;
  throw std::invalid_argument("unknown boundary condition: " + s);
}

Lattice::Lattice(int n_side, BoundaryCondition bc) : n_(n_side), bc_(bc) {
  if (n_side < 2) throw std::invalid_argument("n_side must be >= 2");
  edges_.reserve(static_cast<std::size_t>(2 * n_ * (n_ - 1)) + (wired() ? 4 * n_ : 0));
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      int i = index(r, c);
      if (c + 1 < n_) edges_.push_back({i, index(r, c + 1)});
      if (r + 1 < n_) edges_.push_back({i, index(r + 1, c)});
    }
  }
  interior_edges_ = edges_.size();
  if (wired()) {
    int g = ghost();
    for (int i = 0; i < sites(); ++i) {
      for (int k = ghost_degree(i); k > 0; --k) edges_.push_back({i, g});
    }
  }

  int nodes = sites() + (wired() ? 1 : 0);
  adj_off_.assign(nodes + 1, 0);
  for (const Edge& e : edges_) {
    ++adj_off_[e.a + 1];
    ++adj_off_[e.b + 1];
  }
  for (int i = 0; i < nodes; ++i) adj_off_[i + 1] += adj_off_[i];
  adj_to_.resize(2 * edges_.size());
  std::vector<std::int32_t> fill(adj_off_.begin(), adj_off_.end() - 1);
  for (const Edge& e : edges_) {
    adj_to_[fill[e.a]++] = e.b;
    adj_to_[fill[e.b]++] = e.a;
  }
}

std::vector<int> Lattice::neighbors(int i) const {
  int r = row(i), c = col(i);
  std::vector<int> out;
  out.reserve(4);
  if (r > 0) out.push_back(index(r - 1, c));
  if (c > 0) out.push_back(index(r, c - 1));
  if (c + 1 < n_) out.push_back(index(r, c + 1));
  if (r + 1 < n_) out.push_back(index(r + 1, c));
  return out;
}

int Lattice::ghost_degree(int i) const {
  if (!wired()) return 0;
  int r = row(i), c = col(i);
  int deg = 0;
  if (r == 0) ++deg;
  if (c == 0) ++deg;
  if (r == n_ - 1) ++deg;
  if (c == n_ - 1) ++deg;
  return deg;
}

std::vector<SubSquare> dyadic_blocks(const Lattice& lat, int rho_inv) {
  if (rho_inv < 1 || lat.side() % rho_inv != 0)
    throw std::invalid_argument("rho_inv must divide n_side");
  int side = lat.side() / rho_inv;
  std::vector<SubSquare> out;
  out.reserve(static_cast<std::size_t>(rho_inv) * rho_inv);
  for (int br = 0; br < rho_inv; ++br)
    for (int bc = 0; bc < rho_inv; ++bc) out.push_back({br * side, bc * side, side});
  return out;
}

AnnulusTarget annulus_target(const Lattice& lat, const SubSquare& q) {
  if (q.side < 1) throw std::invalid_argument("empty sub-square");
  int n = lat.side();
  // 3Q spans rows [r0, r1) and cols [c0, c1), possibly outside the grid
  int r0 = q.row0 - q.side, r1 = q.row0 + 2 * q.side;
  int c0 = q.col0 - q.side, c1 = q.col0 + 2 * q.side;

  AnnulusTarget t;
  bool overflow = r0 < 0 || c0 < 0 || r1 > n || c1 > n;
  for (int r = std::max(r0, 0); r < std::min(r1, n); ++r) {
    for (int c = std::max(c0, 0); c < std::min(c1, n); ++c) {
      if (r == r0 || r == r1 - 1 || c == c0 || c == c1 - 1)
        t.sites.push_back(lat.index(r, c));
    }
  }
  t.domain_boundary = overflow;
  return t;
}

}  // namespace crit
