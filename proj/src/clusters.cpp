#include "crit/clusters.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace crit {

namespace {

struct UnionFind {
  std::vector<std::int32_t> parent;
  std::vector<std::int32_t> rank;

  explicit UnionFind(int n) : parent(n), rank(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank[a] < rank[b]) std::swap(a, b);
    parent[b] = a;
    if (rank[a] == rank[b]) ++rank[a];
  }
};

}  // namespace

ClusterLabels::ClusterLabels(const Lattice& lat, const BondConfig& bond) {
  int n = lat.sites() + (lat.wired() ? 1 : 0);
  if (bond.open.size() != lat.edges().size())
    throw std::invalid_argument("bond configuration does not match lattice");
  UnionFind uf(n);
  const auto& edges = lat.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (bond.open[e]) uf.unite(edges[e].a, edges[e].b);
  }
  root_.resize(n);
  size_.assign(n, 0);
  touches_ghost_.assign(n, 0);
  touches_bdry_.assign(n, 0);
  count_ = 0;
  for (int i = 0; i < n; ++i) {
    root_[i] = uf.find(i);
    if (size_[root_[i]] == 0) ++count_;
    ++size_[root_[i]];
  }
  ghost_root_ = lat.wired() ? root_[lat.ghost()] : -1;
  if (lat.wired()) touches_ghost_[ghost_root_] = 1;
  for (int i = 0; i < lat.sites(); ++i) {
    if (lat.on_boundary(i)) touches_bdry_[root_[i]] = 1;
  }
  if (ghost_root_ >= 0) touches_bdry_[ghost_root_] = 1;
}

bool one_arm_event(const ClusterLabels& labels, int site) {
  return labels.touches_domain_boundary(labels.find(site));
}

namespace {

// roots reaching the annulus target of Q (ghost included for clipped blocks
// under wired boundary)
void mark_target_roots(const Lattice& lat, const ClusterLabels& labels, const AnnulusTarget& t,
                       std::vector<std::uint8_t>& mark) {
  for (int s : t.sites) mark[labels.find(s)] = 1;
  if (t.domain_boundary && labels.ghost_root() >= 0) mark[labels.ghost_root()] = 1;
}

}  // namespace

std::vector<BlockStats> block_variables(const Lattice& lat, const ColoredBonds& colored,
                                        int rho_inv, int eps_inv, double theta) {
  if (eps_inv < rho_inv) throw std::invalid_argument("eps_inv must be >= rho_inv");
  if (lat.side() % rho_inv != 0 || lat.side() % eps_inv != 0 || eps_inv % rho_inv != 0)
    throw std::invalid_argument("scales must divide the grid dyadically");

  auto q_blocks = dyadic_blocks(lat, rho_inv);
  int eps_side = lat.side() / eps_inv;
  int per_q = eps_inv / rho_inv;  // epsilon-blocks per side of Q
  const auto& labels = colored.labels;
  std::vector<std::uint8_t> mark(lat.sites() + 1, 0);
  std::vector<BlockStats> out;
  out.reserve(q_blocks.size() * static_cast<std::size_t>(per_q) * per_q);

  for (std::size_t qi = 0; qi < q_blocks.size(); ++qi) {
    const SubSquare& q = q_blocks[qi];
    std::fill(mark.begin(), mark.end(), 0);
    mark_target_roots(lat, labels, annulus_target(lat, q), mark);
    for (int br = 0; br < per_q; ++br) {
      for (int bc = 0; bc < per_q; ++bc) {
        BlockStats st;
        st.q_index = static_cast<int>(qi);
        double signed_sites = 0.0;
        bool plus = false, minus = false;
        for (int r = q.row0 + br * eps_side; r < q.row0 + (br + 1) * eps_side; ++r) {
          for (int c = q.col0 + bc * eps_side; c < q.col0 + (bc + 1) * eps_side; ++c) {
            int i = lat.index(r, c);
            if (mark[labels.find(i)]) {
              int s = colored.spins.spins[i];
              signed_sites += s;
              (s > 0 ? plus : minus) = true;
            }
          }
        }
        st.x = theta * signed_sites;
        st.y = (plus ? 1 : 0) - (minus ? 1 : 0);
        out.push_back(st);
      }
    }
  }
  return out;
}

double cutoff_magnetization(const Lattice& lat, const ColoredBonds& colored, int rho_inv,
                            double theta) {
  auto q_blocks = dyadic_blocks(lat, rho_inv);
  const auto& labels = colored.labels;
  std::vector<std::uint8_t> mark(lat.sites() + 1, 0);
  double total = 0.0;
  for (const SubSquare& q : q_blocks) {
    std::fill(mark.begin(), mark.end(), 0);
    mark_target_roots(lat, labels, annulus_target(lat, q), mark);
    double signed_sites = 0.0;
    for (int r = q.row0; r < q.row0 + q.side; ++r) {
      for (int c = q.col0; c < q.col0 + q.side; ++c) {
        int i = lat.index(r, c);
        if (mark[labels.find(i)]) signed_sites += colored.spins.spins[i];
      }
    }
    total += signed_sites;
  }
  return theta * total;
}

XYDiscrepancy xy_discrepancy(const std::vector<double>& sum_x, const std::vector<double>& sum_y,
                             double beta_eps) {
  if (sum_x.size() != sum_y.size() || sum_x.empty())
    throw std::invalid_argument("mismatched or empty sample vectors");
  double sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < sum_x.size(); ++i) {
    sxy += sum_x[i] * beta_eps * sum_y[i];
    syy += beta_eps * sum_y[i] * beta_eps * sum_y[i];
  }
  XYDiscrepancy r;
  if (syy == 0.0) {
    r.degenerate = true;
    double sxx = 0.0;
    for (double x : sum_x) sxx += x * x;
    r.l2 = std::sqrt(sxx / sum_x.size());
    return r;
  }
  r.c_hat = sxy / syy;
  double acc = 0.0;
  for (std::size_t i = 0; i < sum_x.size(); ++i) {
    double d = sum_x[i] - r.c_hat * beta_eps * sum_y[i];
    acc += d * d;
  }
  r.l2 = std::sqrt(acc / sum_x.size());
  return r;
}

}  // namespace crit
