#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "crit/field.hpp"
#include "crit/sampler.hpp"
#include "crit/stats.hpp"

namespace crit {

// Chain fan-out settings. The number of chains is part of the experiment
// definition (it fixes the RNG streams and the merge order); threads only
// schedule chains, so results are identical for any thread count.
struct RunPlan {
  std::uint64_t seed = 0;
  int n_chains = 32;
  int threads = 1;
  long samples_per_chain = 0;
  Algorithm algorithm = Algorithm::SwendsenWang;
  int thermalization_sweeps = 100;
  int decorrelation_sweeps = 2;

  long total_samples() const { return samples_per_chain * n_chains; }
};

// Runs `plan.n_chains` independent chains on the lattice; `make_observer(i)`
// returns the per-chain callback for chain i. Chains run on a small worker
// pool; all post-processing is done by the caller in chain-index order.
void run_chains(const Lattice& lat, const RunPlan& plan,
                const std::function<std::function<void(const SpinConfig&, const ColoredBonds&)>(
                    int)>& make_observer);

// Scalar observable per sample, accumulated per chain and merged in index
// order; one batch per chain segment of size samples_per_chain / 32 (min 1).
MomentAccumulator accumulate_observable(
    const Lattice& lat, const RunPlan& plan,
    const std::function<double(const SpinConfig&, const ColoredBonds&)>& observable);

// Per-sample scalar stream concatenated in chain-index order.
std::vector<double> collect_observable(
    const Lattice& lat, const RunPlan& plan,
    const std::function<double(const SpinConfig&, const ColoredBonds&)>& observable);

// E[sigma_u sigma_v] for the centered diagonal pair at separation (sep, sep)
// on a Free grid of side >= 4*sep (bulk proxy for the infinite-volume value).
Estimate two_point_rho(int sep, int grid_side, const RunPlan& plan);

// <sigma_center> on a Plus grid of side n.
Estimate center_magnetization_plus(int n_side, const RunPlan& plan);

// P^wired(center <-> ghost) on a Plus grid of side n.
Estimate one_arm_wired(int n_side, const RunPlan& plan);

// One-arm probability across the annulus geometry [-1,1]^2 \ [-eps/2,eps/2]^2
// realized on a wired grid of side grid_side: inner block of
// grid_side*eps/4 cells centered, event "inner block <-> ghost".
Estimate one_arm_annulus(int eps_inv, int grid_side, const RunPlan& plan);

// beta(eps) = eps^2 / alpha_1(eps,1)
double beta_eps(int eps_inv, double alpha1);

// Renormalized magnetization samples.
std::vector<double> magnetization_samples(int n_side, BoundaryCondition bc,
                                          const RenormScheme& scheme, const RunPlan& plan);

// Scaled k-point estimator: empirical E[sigma_{z1} ... sigma_{zk}] times
// a^{-k/8} (WuExponent) or rho_hat^{-k/2} (Empirical). Points are (row, col)
// grid coordinates and must be pairwise distinct; k <= 6.
Estimate kpoint_scaled(int n_side, BoundaryCondition bc,
                       const std::vector<std::pair<int, int>>& points,
                       const RenormScheme& scheme, const RunPlan& plan);

// E|| Phi restricted to `sub` ||^2_{H^-alpha} divided by lambda(sub)^{15/8}.
Estimate restricted_norm_ratio(int n_side, BoundaryCondition bc, const SubSquare& sub,
                               double alpha, int j_max, const RunPlan& plan);

}  // namespace crit
