#include "crit/sampler.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace crit {

double critical_beta() { return std::log1p(std::sqrt(2.0)) / 2.0; }
double critical_p() { return 2.0 - std::sqrt(2.0); }

SamplerConfig::SamplerConfig() : beta(critical_beta()) {}

SpinConfig all_plus(const Lattice& lat) {
  SpinConfig s;
  s.spins.assign(lat.sites(), 1);
  s.boundary = lat.boundary();
  return s;
}

BondConfig bonds_from_spins(const Lattice& lat, const SpinConfig& spins, double p, Rng& rng) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0,1]");
  const auto& edges = lat.edges();
  BondConfig bond;
  bond.p = p;
  bond.open.assign(edges.size(), 0);
  int g = lat.ghost();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    int sa = spins.spins[edges[e].a];
    int sb = edges[e].b == g ? 1 : spins.spins[edges[e].b];
    if (sa == sb && rng.bernoulli(p)) bond.open[e] = 1;
  }
  return bond;
}

ColoredBonds color_clusters(const Lattice& lat, BondConfig bond, Rng& rng) {
  ClusterLabels labels(lat, bond);
  int n = lat.sites();
  std::vector<std::int8_t> sign(n + 1, 0);
  int gr = labels.ghost_root();
  if (gr >= 0) sign[gr] = 1;
  SpinConfig spins;
  spins.boundary = lat.boundary();
  spins.spins.resize(n);
  for (int i = 0; i < n; ++i) {
    int r = labels.find(i);
    if (sign[r] == 0) sign[r] = rng.coin() ? 1 : -1;
    spins.spins[i] = sign[r];
  }
  return ColoredBonds{std::move(bond), std::move(labels), std::move(spins)};
}

ColoredBonds swendsen_wang_sweep(const Lattice& lat, const SpinConfig& spins, double p,
                                 Rng& rng) {
  return color_clusters(lat, bonds_from_spins(lat, spins, p, rng), rng);
}

int wolff_step(const Lattice& lat, SpinConfig& spins, double p, Rng& rng) {
  int n = lat.sites();
  int g = lat.ghost();
  int seed = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  std::int8_t s0 = spins.spins[seed];
  std::vector<std::uint8_t> in(n + 1, 0);
  std::vector<std::int32_t> stack;
  stack.push_back(seed);
  in[seed] = 1;
  bool has_ghost = false;
  int members = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++members;
    for (const std::int32_t* it = lat.adj_begin(x); it != lat.adj_end(x); ++it) {
      int y = *it;
      if (in[y]) continue;
      std::int8_t sy = (y == g) ? 1 : spins.spins[y];
      if (sy != s0) continue;
      if (!rng.bernoulli(p)) continue;
      in[y] = 1;
      if (y == g) {
        has_ghost = true;
      }
      stack.push_back(y);
    }
  }
  int flipped = 0;
  if (!has_ghost) {
    for (int i = 0; i < n; ++i) {
      if (in[i]) {
        spins.spins[i] = static_cast<std::int8_t>(-spins.spins[i]);
        ++flipped;
      }
    }
  } else {
    // flipping the ghost cluster is equivalent to flipping its complement
    for (int i = 0; i < n; ++i) {
      if (!in[i]) {
        spins.spins[i] = static_cast<std::int8_t>(-spins.spins[i]);
        ++flipped;
      }
    }
  }
  (void)members;
  return flipped;
}

namespace {

// one Wolff "sweep": a fixed count of N cluster flips. The count must not
// depend on the trajectory (stopping on accumulated flipped volume biases the
// state at the sweep boundary); N flips move >= order N^{11/4} sites at
// criticality, comfortably more than one Swendsen-Wang sweep.
void wolff_sweep(const Lattice& lat, SpinConfig& spins, double p, Rng& rng) {
  for (int s = 0; s < lat.side(); ++s) wolff_step(lat, spins, p, rng);
}

}  // namespace

void sample_chain(const Lattice& lat, const SamplerConfig& cfg, long n_samples,
                  const std::function<void(const SpinConfig&, const ColoredBonds&)>& observer) {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
  Rng rng(cfg.seed);
  double p = fk_probability(cfg.beta);
  SpinConfig state = all_plus(lat);
  bool flip_out = lat.boundary() == BoundaryCondition::Minus;

  auto decorrelate = [&](int sweeps) {
    for (int s = 0; s < sweeps; ++s) {
      if (cfg.algorithm == Algorithm::Wolff) {
        wolff_sweep(lat, state, p, rng);
      } else {
        state = swendsen_wang_sweep(lat, state, p, rng).spins;
      }
    }
  };

  decorrelate(cfg.thermalization_sweeps);
  for (long i = 0; i < n_samples; ++i) {
    decorrelate(cfg.decorrelation_sweeps);
    // the producing sweep doubles as one more decorrelation step
    ColoredBonds colored = swendsen_wang_sweep(lat, state, p, rng);
    state = colored.spins;
    if (flip_out) {
      ColoredBonds flipped = colored;
      for (auto& s : flipped.spins.spins) s = static_cast<std::int8_t>(-s);
      observer(flipped.spins, flipped);
    } else {
      observer(state, colored);
    }
  }
}

}  // namespace crit
