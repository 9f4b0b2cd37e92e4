#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "crit/lattice.hpp"

namespace crit {

// Small graph for brute-force enumeration: at most 20 free vertices (2^20
// spin states) and, for FK enumeration, at most 24 edges (2^24 subsets).
// The optional ghost vertex has index n_free and is pinned to +1.
struct SmallGraph {
  struct Coupling {
    int u;
    int v;  // may equal n_free (ghost)
    double j = 1.0;
  };

  int n_free = 0;
  bool has_ghost = false;
  std::vector<Coupling> edges;
  std::vector<double> field;  // h_v >= 0 per free vertex; empty means zero

  // grid graph with unit couplings; Plus/Minus wire boundary deficiencies
  // to the ghost
  static SmallGraph grid(int n_side, BoundaryCondition bc);
};

// Exhaustive Gibbs sums over all 2^n_free states with compensated
// accumulation; weights exp(beta * sum J ss + sum h s).
class SpinOracle {
 public:
  SpinOracle(const SmallGraph& g, double beta);

  // expectation of a product of spins at the given (repeatable) vertices
  double expectation(const std::vector<int>& vertices) const;

  // M = sum of free spins
  double mgf(double t) const;                        // E[e^{tM}]
  double log_mgf_third_derivative(double t) const;   // third cumulant of tilted law

  const std::vector<double>& weights() const { return weight_; }
  int n_free() const { return n_; }

 private:
  int n_;
  std::vector<double> weight_;       // per state, normalized to sum 1
  std::vector<double> magnet_;       // per state, sum of spins
};

// Random-cluster probability P(event) with weights p^o (1-p)^c q^{#clusters},
// by enumeration of all edge subsets. The event callback receives a find()
// function over vertex ids (ghost id = n_free).
double exact_fk_probability(const SmallGraph& g, double p, double q,
                            const std::function<bool(const std::function<int(int)>&)>& event);

double exact_fk_connectivity(const SmallGraph& g, double p, double q, int u, int v);

// max over all vertex triples (with repetition) of the GHS combination
// <sss> - (<s><ss> + <s><ss> + <s><ss>) + 2<s><s><s>; requires J, h >= 0
double ghs_triple_check(const SmallGraph& g, double beta);

}  // namespace crit
