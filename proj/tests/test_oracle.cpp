#include <doctest.h>

#include <cmath>

#include "crit/oracle.hpp"
#include "crit/rng.hpp"
#include "crit/sampler.hpp"

using namespace crit;

TEST_CASE("2x2 free pair correlation is sqrt(2)/3 at criticality") {
  SmallGraph g = SmallGraph::grid(2, BoundaryCondition::Free);
  SpinOracle oracle(g, critical_beta());
  CHECK(oracle.expectation({0, 1}) == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-14));
  // Edwards-Sokal identity: <s_x s_y> = P_FK(x <-> y) at q = 2
  CHECK(exact_fk_connectivity(g, critical_p(), 2.0, 0, 1) ==
        doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-12));
}

TEST_CASE("3x3 plus center magnetization and its FK twin") {
  SmallGraph g = SmallGraph::grid(3, BoundaryCondition::Plus);
  SpinOracle oracle(g, critical_beta());
  double spin = oracle.expectation({4});
  CHECK(spin == doctest::Approx(0.8858375057452239).epsilon(1e-13));
  double fk = exact_fk_connectivity(g, critical_p(), 2.0, 4, g.n_free);
  CHECK(std::abs(spin - fk) < 1e-12);
}

TEST_CASE("star graph with four wired bonds") {
  SmallGraph star;
  star.n_free = 1;
  star.has_ghost = true;
  for (int k = 0; k < 4; ++k) star.edges.push_back({0, 1, 1.0});
  double p = critical_p();
  double closed4 = std::pow(1.0 - p, 4);
  double expected = (1.0 - closed4) / (1.0 + closed4);
  CHECK(expected == doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-14));
  CHECK(exact_fk_connectivity(star, p, 2.0, 0, 1) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(SpinOracle(star, critical_beta()).expectation({0}) ==
        doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("single tilted spin: closed-form third cumulant") {
  SmallGraph star;
  star.n_free = 1;
  star.has_ghost = true;
  for (int k = 0; k < 4; ++k) star.edges.push_back({0, 1, 1.0});
  SpinOracle oracle(star, critical_beta());
  for (double t : {0.0, 0.3, 1.0, 2.5}) {
    double u = t + 4.0 * critical_beta();
    double sech = 1.0 / std::cosh(u);
    CHECK(oracle.log_mgf_third_derivative(t) ==
          doctest::Approx(-2.0 * sech * sech * std::tanh(u)).epsilon(1e-11));
  }
}

TEST_CASE("MGF basics and zero-field symmetry") {
  SmallGraph g = SmallGraph::grid(2, BoundaryCondition::Free);
  SpinOracle oracle(g, critical_beta());
  CHECK(oracle.mgf(0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(oracle.mgf(0.7) == doctest::Approx(oracle.mgf(-0.7)).epsilon(1e-13));
  CHECK(oracle.mgf(0.7) >= 1.0);  // Jensen, since E M = 0 without a field
}

TEST_CASE("GHS inequality holds on small ferromagnets") {
  SmallGraph g = SmallGraph::grid(3, BoundaryCondition::Plus);
  CHECK(ghs_triple_check(g, critical_beta()) <= 1e-12);

  Rng rng(1234);
  for (int rep = 0; rep < 10; ++rep) {
    SmallGraph r;
    r.n_free = 2 + static_cast<int>(rng.below(4));
    for (int i = 0; i < r.n_free; ++i)
      for (int j = i + 1; j < r.n_free; ++j)
        if (rng.bernoulli(0.6)) r.edges.push_back({i, j, 2.0 * rng.uniform()});
    if (rng.coin()) {
      for (int i = 0; i < r.n_free; ++i) r.field.push_back(rng.uniform());
    }
    CHECK(ghs_triple_check(r, 0.2 + rng.uniform()) <= 1e-12);
  }
}

TEST_CASE("oracle rejects oversized inputs and bad couplings") {
  SmallGraph big;
  big.n_free = 21;
  CHECK_THROWS(SpinOracle(big, 1.0));

  SmallGraph wide = SmallGraph::grid(4, BoundaryCondition::Plus);  // 40 edges
  CHECK_THROWS(exact_fk_connectivity(wide, 0.5, 2.0, 0, 1));

  SmallGraph anti;
  anti.n_free = 2;
  anti.edges.push_back({0, 1, -1.0});
  CHECK_THROWS(ghs_triple_check(anti, 1.0));
}
