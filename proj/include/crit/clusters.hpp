#pragma once

#include <cstdint>
#include <vector>

#include "crit/lattice.hpp"

namespace crit {

struct BondConfig {
  std::vector<std::uint8_t> open;  // aligned with Lattice::edges()
  double p = 0.0;                  // bond probability the configuration was drawn at
};

// Connected components of the open sub-graph (ghost included when wired).
// Roots are representative site indices; immutable once built.
class ClusterLabels {
 public:
  ClusterLabels(const Lattice& lat, const BondConfig& bond);

  int find(int x) const { return root_[x]; }
  bool same(int x, int y) const { return root_[x] == root_[y]; }
  int cluster_count() const { return count_; }
  int cluster_size(int root) const { return size_[root]; }
  bool touches_ghost(int root) const { return touches_ghost_[root] != 0; }
  // cluster contains a grid-boundary site or the ghost
  bool touches_domain_boundary(int root) const { return touches_bdry_[root] != 0; }
  int ghost_root() const { return ghost_root_; }  // -1 under Free

 private:
  std::vector<std::int32_t> root_;
  std::vector<std::int32_t> size_;
  std::vector<std::uint8_t> touches_ghost_;
  std::vector<std::uint8_t> touches_bdry_;
  int count_;
  int ghost_root_;
};

// true iff the site's cluster reaches the domain boundary (or ghost)
bool one_arm_event(const ClusterLabels& labels, int site);

struct SpinConfig {
  std::vector<std::int8_t> spins;  // +-1 per site
  BoundaryCondition boundary = BoundaryCondition::Free;
};

// FK configuration together with its cluster coloring: every cluster carries
// one sign, realized here as the induced spin configuration plus the labels.
struct ColoredBonds {
  BondConfig bond;
  ClusterLabels labels;
  SpinConfig spins;
};

// Per epsilon-block statistics inside one rho-square Q.
struct BlockStats {
  double x = 0.0;  // renormalized signed mass of sites connected to d(3Q)
  int y = 0;       // 1{B_i <-> d(3Q) in w+} - 1{B_i <-> d(3Q) in w-}
  int q_index = 0;
};

std::vector<BlockStats> block_variables(const Lattice& lat, const ColoredBonds& colored,
                                        int rho_inv, int eps_inv, double theta);

// Theta * sum of sigma_x over sites whose cluster reaches d(3Q(x)), Q(x) the
// rho-block containing x.
double cutoff_magnetization(const Lattice& lat, const ColoredBonds& colored, int rho_inv,
                            double theta);

struct XYDiscrepancy {
  double c_hat = 0.0;
  double l2 = 0.0;
  bool degenerate = false;  // sum Y identically zero, c_hat undefined
};

// Fit of the scalar c minimizing || sum X - c * beta_eps * sum Y ||_2 over
// per-sample block sums, with the minimized L2 discrepancy.
XYDiscrepancy xy_discrepancy(const std::vector<double>& sum_x, const std::vector<double>& sum_y,
                             double beta_eps);

}  // namespace crit
