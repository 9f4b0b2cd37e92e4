#include <doctest.h>

#include <cmath>
#include <vector>

#include "crit/oracle.hpp"
#include "crit/sampler.hpp"
#include "crit/stats.hpp"

using namespace crit;

TEST_CASE("critical point constants") {
  CHECK(critical_beta() == doctest::Approx(0.5 * std::log(1.0 + std::sqrt(2.0))).epsilon(1e-15));
  CHECK(critical_p() == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-15));
  CHECK(fk_probability(critical_beta()) == doctest::Approx(critical_p()).epsilon(1e-15));
}

TEST_CASE("bonds open only between aligned endpoints, ghost counts as plus") {
  Lattice lat(4, BoundaryCondition::Plus);
  Rng rng(11);
  SpinConfig spins = all_plus(lat);
  for (int i = 0; i < lat.sites(); i += 2) spins.spins[i] = -1;
  BondConfig bond = bonds_from_spins(lat, spins, 1.0, rng);  // p = 1: open iff aligned
  for (std::size_t e = 0; e < lat.edges().size(); ++e) {
    const Edge& ed = lat.edges()[e];
    int sa = spins.spins[ed.a];
    int sb = ed.b == lat.ghost() ? 1 : spins.spins[ed.b];
    CHECK(static_cast<bool>(bond.open[e]) == (sa == sb));
  }
  Rng rng2(12);
  BondConfig closed = bonds_from_spins(lat, spins, 0.0, rng2);
  for (auto o : closed.open) CHECK(o == 0);
}

TEST_CASE("cluster coloring is constant per cluster and plus on the ghost cluster") {
  Lattice lat(6, BoundaryCondition::Plus);
  Rng rng(21);
  SpinConfig spins = all_plus(lat);
  for (int rep = 0; rep < 5; ++rep) {
    BondConfig bond = bonds_from_spins(lat, spins, critical_p(), rng);
    ColoredBonds colored = color_clusters(lat, bond, rng);
    for (int i = 0; i < lat.sites(); ++i) {
      int r = colored.labels.find(i);
      if (colored.labels.touches_ghost(r)) CHECK(colored.spins.spins[i] == 1);
      for (int j = 0; j < lat.sites(); ++j) {
        if (colored.labels.same(i, j))
          CHECK(colored.spins.spins[i] == colored.spins.spins[j]);
      }
    }
    spins = colored.spins;
  }
}

TEST_CASE("identical seeds give identical streams, distinct seeds do not") {
  Lattice lat(4, BoundaryCondition::Free);
  auto run = [&](std::uint64_t seed) {
    SamplerConfig cfg;
    cfg.seed = seed;
    std::vector<std::int8_t> stream;
    sample_chain(lat, cfg, 20, [&](const SpinConfig& s, const ColoredBonds&) {
      stream.insert(stream.end(), s.spins.begin(), s.spins.end());
    });
    return stream;
  };
  CHECK(run(42) == run(42));
  CHECK(run(42) != run(43));
}

TEST_CASE("minus boundary is the exact negation of plus at equal seed") {
  SamplerConfig cfg;
  cfg.seed = 77;
  Lattice plus(4, BoundaryCondition::Plus);
  Lattice minus(4, BoundaryCondition::Minus);
  std::vector<std::int8_t> sp, sm;
  sample_chain(plus, cfg, 10, [&](const SpinConfig& s, const ColoredBonds&) {
    sp.insert(sp.end(), s.spins.begin(), s.spins.end());
  });
  sample_chain(minus, cfg, 10, [&](const SpinConfig& s, const ColoredBonds&) {
    sm.insert(sm.end(), s.spins.begin(), s.spins.end());
  });
  REQUIRE(sp.size() == sm.size());
  for (std::size_t i = 0; i < sp.size(); ++i) CHECK(sp[i] == -sm[i]);
}

TEST_CASE("swendsen-wang matches the exact 2x2 pair correlation") {
  Lattice lat(2, BoundaryCondition::Free);
  SamplerConfig cfg;
  cfg.seed = 101;
  long n = 20000;
  double sum = 0.0;
  sample_chain(lat, cfg, n, [&](const SpinConfig& s, const ColoredBonds&) {
    sum += s.spins[0] * s.spins[1];
  });
  double est = sum / n;
  double exact = std::sqrt(2.0) / 3.0;
  double sigma = std::sqrt((1.0 - exact * exact) / n);
  CHECK(std::abs(est - exact) < 4.0 * sigma);
}

TEST_CASE("wolff matches the exact 3x3 plus center magnetization") {
  Lattice lat(3, BoundaryCondition::Plus);
  SmallGraph g = SmallGraph::grid(3, BoundaryCondition::Plus);
  double exact = SpinOracle(g, critical_beta()).expectation({4});
  SamplerConfig cfg;
  cfg.seed = 202;
  cfg.algorithm = Algorithm::Wolff;
  long n = 20000;
  double sum = 0.0;
  sample_chain(lat, cfg, n, [&](const SpinConfig& s, const ColoredBonds&) {
    sum += s.spins[lat.index(1, 1)];
  });
  double est = sum / n;
  double sigma = std::sqrt((1.0 - exact * exact) / n);
  CHECK(std::abs(est - exact) < 4.0 * sigma);
}

TEST_CASE("swendsen-wang is stationary for the full 2x2 state distribution") {
  // chi-square over all 16 spin states against the exact Gibbs weights
  Lattice lat(2, BoundaryCondition::Free);
  SmallGraph g = SmallGraph::grid(2, BoundaryCondition::Free);
  SpinOracle oracle(g, critical_beta());
  SamplerConfig cfg;
  cfg.seed = 303;
  long n = 40000;
  std::vector<long> counts(16, 0);
  sample_chain(lat, cfg, n, [&](const SpinConfig& s, const ColoredBonds&) {
    int state = 0;
    for (int i = 0; i < 4; ++i)
      if (s.spins[i] > 0) state |= 1 << i;
    ++counts[state];
  });
  double chi2 = 0.0;
  for (int state = 0; state < 16; ++state) {
    double expect = oracle.weights()[state] * n;
    REQUIRE(expect > 5.0);
    double d = counts[state] - expect;
    chi2 += d * d / expect;
  }
  CHECK(chi_square_tail(chi2, 15) > 1e-4);
}

TEST_CASE("at beta = 0 the sweep produces fair independent spins") {
  Lattice lat(4, BoundaryCondition::Free);
  SamplerConfig cfg;
  cfg.seed = 404;
  cfg.beta = 0.0;
  long n = 10000;
  long total = 0;
  sample_chain(lat, cfg, n, [&](const SpinConfig& s, const ColoredBonds& cb) {
    CHECK(cb.labels.cluster_count() == lat.sites());
    for (auto v : s.spins) total += v;
  });
  double mean = static_cast<double>(total) / (n * lat.sites());
  CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(n) * lat.sites()));
}
