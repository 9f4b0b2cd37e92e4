#include <doctest.h>

#include <cmath>

#include "crit/field.hpp"
#include "crit/rng.hpp"
#include "crit/sampler.hpp"
#include "crit/stats.hpp"

using namespace crit;

namespace {
constexpr double kPi = 3.14159265358979323846;

FieldGrid constant_field(int n, double v) {
  FieldGrid f;
  f.n = n;
  f.cell.assign(static_cast<std::size_t>(n) * n, v);
  return f;
}

FieldGrid random_field(int n, std::uint64_t seed) {
  FieldGrid f;
  f.n = n;
  Rng rng(seed);
  for (int i = 0; i < n * n; ++i) f.cell.push_back(2.0 * rng.uniform() - 1.0);
  return f;
}
}  // namespace

TEST_CASE("renormalization schemes") {
  CHECK(RenormScheme::wu().theta(0.25) == doctest::Approx(std::pow(0.25, 15.0 / 8.0)));
  CHECK(RenormScheme::empirical(0.09).theta(0.25) ==
        doctest::Approx(0.25 * 0.25 / std::sqrt(0.09)));
  CHECK(theta_empirical(0.25, 0.09) == doctest::Approx(0.25 * 0.25 / std::sqrt(0.09)));
  CHECK_THROWS(RenormScheme::empirical(0.0));
}

TEST_CASE("field cells carry theta sigma / a^2 and integrate to the magnetization") {
  Lattice lat(4, BoundaryCondition::Free);
  SpinConfig spins = all_plus(lat);
  spins.spins[5] = -1;
  RenormScheme scheme = RenormScheme::wu();
  FieldGrid f = field_from_spins(lat, spins, scheme);
  // theta / a^2 = a^{-1/8} = 4^{1/8} at N = 4
  CHECK(f.cell[0] == doctest::Approx(std::pow(4.0, 0.125)).epsilon(1e-12));
  CHECK(f.cell[5] == doctest::Approx(-std::pow(4.0, 0.125)).epsilon(1e-12));
  double mag = magnetization(lat, spins, scheme);
  CHECK(f.integral() == doctest::Approx(mag).epsilon(1e-12));
  CHECK(mag == doctest::Approx(scheme.theta(0.25) * 14.0).epsilon(1e-12));
}

TEST_CASE("fourier coefficients of the constant field") {
  FieldGrid f = constant_field(4, 1.0);
  // <1, e_{1,1}> = 2 (2/pi)^2 = 8/pi^2
  CHECK(fourier_coefficient(f, 1, 1) == doctest::Approx(8.0 / (kPi * kPi)).epsilon(1e-12));
  CHECK(fourier_coefficient(f, 2, 1) == doctest::Approx(0.0));
  CHECK(fourier_coefficient(f, 1, 2) == doctest::Approx(0.0));
  CHECK(fourier_coefficient(f, 3, 3) ==
        doctest::Approx(8.0 / (9.0 * kPi * kPi)).epsilon(1e-12));
}

TEST_CASE("exact per-cell integration agrees with a fine riemann sum") {
  FieldGrid f = random_field(4, 9);
  int oversample = 400;
  for (auto [j, k] : {std::pair{1, 2}, std::pair{3, 1}, std::pair{4, 4}}) {
    double riemann = 0.0;
    int m = f.n * oversample;
    for (int r = 0; r < m; ++r) {
      double y = (r + 0.5) / m;
      for (int c = 0; c < m; ++c) {
        double x = (c + 0.5) / m;
        double v = f.cell[(r / oversample) * f.n + c / oversample];
        riemann += v * 2.0 * std::sin(j * kPi * x) * std::sin(k * kPi * y);
      }
    }
    riemann /= static_cast<double>(m) * m;
    CHECK(fourier_coefficient(f, j, k) == doctest::Approx(riemann).epsilon(1e-4));
  }
}

TEST_CASE("two-stage contraction reproduces the direct coefficients") {
  FieldGrid f = random_field(8, 17);
  SobolevCoeffs coeffs = sine_coefficients(f, 6);
  for (int j = 1; j <= 6; ++j)
    for (int k = 1; k <= 6; ++k)
      CHECK(coeffs.at(j, k) == doctest::Approx(fourier_coefficient(f, j, k)).epsilon(1e-12));
}

TEST_CASE("coefficients are linear in the field") {
  FieldGrid f = random_field(8, 3), g = random_field(8, 4), sum = f;
  for (std::size_t i = 0; i < sum.cell.size(); ++i) sum.cell[i] += g.cell[i];
  CHECK(fourier_coefficient(sum, 2, 3) ==
        doctest::Approx(fourier_coefficient(f, 2, 3) + fourier_coefficient(g, 2, 3))
            .epsilon(1e-12));
}

TEST_CASE("sobolev norm from hand-set coefficients") {
  SobolevCoeffs c;
  c.j_max = 2;
  c.a = {1.0, 0.0, 0.0, 0.0};  // a_{1,1} = 1
  CHECK(sobolev_norm_sq(c, 2.0).value == doctest::Approx(0.25).epsilon(1e-14));
  c.a = {0.0, 1.0, 0.0, 0.0};  // a_{1,2} = 1
  CHECK(sobolev_norm_sq(c, 2.0).value == doctest::Approx(1.0 / 25.0).epsilon(1e-14));
}

TEST_CASE("truncation tail bound covers the missing shells") {
  // constant field: a_{j,k} = 8/(j k pi^2) for odd j,k, so the outer-shell
  // maximum at an odd truncation dominates every dropped coefficient
  FieldGrid f = constant_field(16, 1.0);
  auto small = sobolev_norm_sq(sine_coefficients(f, 15), 2.0);
  auto large = sobolev_norm_sq(sine_coefficients(f, 63), 2.0);
  CHECK(large.value >= small.value - 1e-14);
  CHECK(large.value - small.value <= small.tail_bound * (1.0 + 1e-9));
  CHECK(std::isinf(sobolev_norm_sq(sine_coefficients(f, 7), 1.0).tail_bound));
}

TEST_CASE("the norm decreases in alpha") {
  FieldGrid f = random_field(8, 31);
  auto coeffs = sine_coefficients(f, 32);
  CHECK(sobolev_norm_sq(coeffs, 3.0).value <= sobolev_norm_sq(coeffs, 2.0).value);
}

TEST_CASE("restriction zeroes everything outside the sub-square") {
  FieldGrid f = random_field(8, 41);
  SubSquare sub{2, 4, 3};
  FieldGrid g = restrict_to(f, sub);
  REQUIRE(g.n == f.n);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      bool inside = r >= sub.row0 && r < sub.row0 + sub.side && c >= sub.col0 &&
                    c < sub.col0 + sub.side;
      CHECK(g.cell[r * 8 + c] == (inside ? f.cell[r * 8 + c] : 0.0));
    }
  }
}
