#pragma once

#include <cstdint>
#include <functional>

#include "crit/clusters.hpp"
#include "crit/lattice.hpp"
#include "crit/rng.hpp"

namespace crit {

// beta_c = ln(1 + sqrt 2)/2 and the matching FK(q=2) bond probability
// p_c = 1 - exp(-2 beta_c) = 2 - sqrt 2.
double critical_beta();
double critical_p();
inline double fk_probability(double beta) { return 1.0 - std::exp(-2.0 * beta); }

enum class Algorithm { SwendsenWang, Wolff };

struct SamplerConfig {
  Algorithm algorithm = Algorithm::SwendsenWang;
  double beta;
  std::uint64_t seed = 0;
  int thermalization_sweeps = 100;
  int decorrelation_sweeps = 2;

  SamplerConfig();
};

// Edwards-Sokal half-step: open each edge between equal-spin endpoints
// (ghost counts as +1 when wired) independently with probability p.
BondConfig bonds_from_spins(const Lattice& lat, const SpinConfig& spins, double p, Rng& rng);

// Second half-step: fair +-1 sign per cluster, ghost cluster forced to +1.
ColoredBonds color_clusters(const Lattice& lat, BondConfig bond, Rng& rng);

ColoredBonds swendsen_wang_sweep(const Lattice& lat, const SpinConfig& spins, double p, Rng& rng);

// Grows one cluster from a random seed site and flips it; a cluster that
// absorbs the ghost flips the complement instead. Returns flipped site count.
int wolff_step(const Lattice& lat, SpinConfig& spins, double p, Rng& rng);

SpinConfig all_plus(const Lattice& lat);

// Runs thermalization then delivers n_samples decorrelated (spins, colored
// bonds) pairs. Identical inputs yield a bit-identical stream.
void sample_chain(const Lattice& lat, const SamplerConfig& cfg, long n_samples,
                  const std::function<void(const SpinConfig&, const ColoredBonds&)>& observer);

}  // namespace crit
