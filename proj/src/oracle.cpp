#include "crit/oracle.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace crit {

namespace {

// Kahan-compensated running sum
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

SmallGraph SmallGraph::grid(int n_side, BoundaryCondition bc) {
  Lattice lat(n_side, bc);
  SmallGraph g;
  g.n_free = lat.sites();
  g.has_ghost = lat.wired();
  for (const Edge& e : lat.edges()) g.edges.push_back({e.a, e.b, 1.0});
  return g;
}

SpinOracle::SpinOracle(const SmallGraph& g, double beta) : n_(g.n_free) {
  if (n_ < 1 || n_ > 20) throw std::invalid_argument("free vertex count must be in [1,20]");
  std::size_t states = std::size_t{1} << n_;
  weight_.resize(states);
  magnet_.resize(states);
  CompensatedSum z;
  for (std::size_t s = 0; s < states; ++s) {
    auto spin = [&](int v) { return v == n_ ? 1 : ((s >> v) & 1u ? 1 : -1); };
    double h = 0.0;
    for (const auto& e : g.edges) h += e.j * spin(e.u) * spin(e.v);
    double energy = beta * h;
    if (!g.field.empty()) {
      for (int v = 0; v < n_; ++v) energy += g.field[v] * spin(v);
    }
    double w = std::exp(energy);
    weight_[s] = w;
    int m = 0;
    for (int v = 0; v < n_; ++v) m += spin(v);
    magnet_[s] = m;
    z.add(w);
  }
  for (auto& w : weight_) w /= z.sum;
}

double SpinOracle::expectation(const std::vector<int>& vertices) const {
  CompensatedSum acc;
  for (std::size_t s = 0; s < weight_.size(); ++s) {
    int prod = 1;
    for (int v : vertices) {
      if (v < 0 || v > n_) throw std::invalid_argument("vertex out of range");
      prod *= v == n_ ? 1 : ((s >> v) & 1u ? 1 : -1);
    }
    acc.add(weight_[s] * prod);
  }
  return acc.sum;
}

double SpinOracle::mgf(double t) const {
  CompensatedSum acc;
  for (std::size_t s = 0; s < weight_.size(); ++s) acc.add(weight_[s] * std::exp(t * magnet_[s]));
  return acc.sum;
}

double SpinOracle::log_mgf_third_derivative(double t) const {
  // third cumulant of the exponentially tilted measure
  CompensatedSum z, m1, m2, m3;
  for (std::size_t s = 0; s < weight_.size(); ++s) {
    double w = weight_[s] * std::exp(t * magnet_[s]);
    double m = magnet_[s];
    z.add(w);
    m1.add(w * m);
    m2.add(w * m * m);
    m3.add(w * m * m * m);
  }
  double e1 = m1.sum / z.sum, e2 = m2.sum / z.sum, e3 = m3.sum / z.sum;
  return e3 - 3.0 * e2 * e1 + 2.0 * e1 * e1 * e1;
}

double exact_fk_probability(const SmallGraph& g, double p, double q,
                            const std::function<bool(const std::function<int(int)>&)>& event) {
  int ne = static_cast<int>(g.edges.size());
  if (ne > 24) throw std::invalid_argument("edge count must be <= 24");
  int nv = g.n_free + (g.has_ghost ? 1 : 0);

  std::vector<int> parent(nv);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  std::vector<double> pow_open(ne + 1), pow_q(nv + 1);
  for (int k = 0; k <= ne; ++k) pow_open[k] = std::pow(p, k) * std::pow(1.0 - p, ne - k);
  for (int k = 0; k <= nv; ++k) pow_q[k] = std::pow(q, k);

  CompensatedSum z, hit;
  std::size_t subsets = std::size_t{1} << ne;
  for (std::size_t sub = 0; sub < subsets; ++sub) {
    std::iota(parent.begin(), parent.end(), 0);
    int open = 0;
    for (int e = 0; e < ne; ++e) {
      if (sub >> e & 1u) {
        ++open;
        int a = find(g.edges[e].u), b = find(g.edges[e].v);
        if (a != b) parent[a] = b;
      }
    }
    int clusters = 0;
    for (int v = 0; v < nv; ++v)
      if (find(v) == v) ++clusters;
    double w = pow_open[open] * pow_q[clusters];
    z.add(w);
    if (event(find)) hit.add(w);
  }
  return hit.sum / z.sum;
}

double exact_fk_connectivity(const SmallGraph& g, double p, double q, int u, int v) {
  return exact_fk_probability(
      g, p, q, [&](const std::function<int(int)>& find) { return find(u) == find(v); });
}

double ghs_triple_check(const SmallGraph& g, double beta) {
  for (const auto& e : g.edges)
    if (e.j < 0) throw std::invalid_argument("GHS requires ferromagnetic couplings");
  for (double h : g.field)
    if (h < 0) throw std::invalid_argument("GHS requires non-negative field");

  SpinOracle oracle(g, beta);
  int n = g.n_free;
  std::vector<double> one(n), two(n * n);
  for (int i = 0; i < n; ++i) one[i] = oracle.expectation({i});
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) two[i * n + j] = two[j * n + i] = oracle.expectation({i, j});

  double worst = -1e300;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int k = j; k < n; ++k) {
        double triple = oracle.expectation({i, j, k});
        double v = triple -
                   (one[i] * two[j * n + k] + one[j] * two[i * n + k] + one[k] * two[i * n + j]) +
                   2.0 * one[i] * one[j] * one[k];
        if (v > worst) worst = v;
      }
    }
  }
  return worst;
}

}  // namespace crit
