#include <doctest.h>

#include <cmath>
#include <vector>

#include "crit/rng.hpp"
#include "crit/stats.hpp"

using namespace crit;

TEST_CASE("moment accumulator: mean, variance, power sums") {
  MomentAccumulator acc(2);
  for (double v : {1.0, 2.0, 3.0, 4.0, 5.0}) acc.add(v);
  CHECK(acc.count() == 5);
  CHECK(acc.power_sum(1) == doctest::Approx(15.0));
  CHECK(acc.power_sum(2) == doctest::Approx(55.0));
  CHECK(acc.mean() == doctest::Approx(3.0));
  CHECK(acc.variance() == doctest::Approx(2.0));  // population variance
}

TEST_CASE("merging flushed accumulators equals a single pass") {
  Rng rng(7);
  std::vector<double> data;
  for (int i = 0; i < 640; ++i) data.push_back(rng.uniform());

  MomentAccumulator whole(10);
  for (double v : data) whole.add(v);
  whole.flush();

  MomentAccumulator left(10), right(10), merged(10);
  for (int i = 0; i < 320; ++i) left.add(data[i]);
  for (int i = 320; i < 640; ++i) right.add(data[i]);
  left.flush();
  right.flush();
  merged.merge(left);
  merged.merge(right);

  REQUIRE(merged.num_batches() == whole.num_batches());
  CHECK(merged.mean_est().value == whole.mean_est().value);
  CHECK(merged.mean_est().std_error == whole.mean_est().std_error);
  CHECK(merged.variance_est().value == whole.variance_est().value);
  CHECK(merged.kurtosis_ratio_est().value == whole.kurtosis_ratio_est().value);
}

TEST_CASE("jackknife error bar is sane for an iid uniform stream") {
  Rng rng(8);
  MomentAccumulator acc(100);
  long n = 10000;
  for (long i = 0; i < n; ++i) acc.add(rng.uniform());
  acc.flush();
  auto m = acc.mean_est();
  CHECK(m.reliable);
  double exact_se = std::sqrt(1.0 / 12.0 / n);
  CHECK(m.std_error > 0.5 * exact_se);
  CHECK(m.std_error < 2.0 * exact_se);
  CHECK(std::abs(m.value - 0.5) < 5.0 * exact_se);
}

TEST_CASE("kurtosis ratio of a +-1 stream is 1/3") {
  MomentAccumulator acc(10);
  for (int i = 0; i < 640; ++i) acc.add(i % 2 == 0 ? 1.0 : -1.0);
  acc.flush();
  auto k = acc.kurtosis_ratio_est();
  CHECK(k.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("log-log fit recovers an exact power law") {
  std::vector<double> x = {4, 8, 16, 32, 64}, y;
  for (double v : x) y.push_back(3.0 * std::pow(v, -0.25));
  auto fit = loglog_fit(x, y);
  CHECK(fit.slope == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-10));
  CHECK(fit.residual_norm == doctest::Approx(0.0));
  CHECK(fit.slope_stderr == doctest::Approx(0.0));
  CHECK_THROWS(loglog_fit({1, 2}, {1, 2}));
  CHECK_THROWS(loglog_fit({1, 2, -3}, {1, 2, 3}));
}

TEST_CASE("two-sample KS distance") {
  std::vector<double> a = {0.1, 0.2, 0.3, 0.4};
  CHECK(ks_two_sample(a, a).d == doctest::Approx(0.0));
  std::vector<double> b = {1.1, 1.2, 1.3};
  CHECK(ks_two_sample(a, b).d == doctest::Approx(1.0));

  // invariance under a strictly increasing transform
  Rng rng(9);
  std::vector<double> u, v;
  for (int i = 0; i < 500; ++i) u.push_back(rng.uniform());
  for (int i = 0; i < 400; ++i) v.push_back(rng.uniform() * rng.uniform());
  auto eu = u, ev = v;
  for (auto& t : eu) t = std::exp(t);
  for (auto& t : ev) t = std::exp(t);
  CHECK(ks_two_sample(u, v).d == doctest::Approx(ks_two_sample(eu, ev).d));
}

TEST_CASE("third log-MGF differences of a fair coin match -2 sech^2 t tanh t") {
  // alternating +-1 makes the empirical law exactly the fair coin
  std::vector<double> samples;
  for (int i = 0; i < 1000; ++i) samples.push_back(i % 2 == 0 ? 1.0 : -1.0);
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(0.05 * i);
  auto diffs = mgf_third_differences(samples, grid);
  REQUIRE(!diffs.empty());
  for (const auto& d : diffs) {
    double u = d.t - 0.025;  // the centered stencil lives at t_i - h/2
    double sech = 1.0 / std::cosh(u);
    double exact = -2.0 * sech * sech * std::tanh(u);
    CHECK(std::abs(d.value - exact) < 5e-3);
    CHECK(d.std_error < 0.05);
  }
}

TEST_CASE("characteristic function check against the moment series") {
  std::vector<double> samples;
  for (int i = 0; i < 1000; ++i) samples.push_back(i % 2 == 0 ? 1.0 : -1.0);
  std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};
  auto chk = char_function_check(samples, grid, 8);
  // E e^{itm} = cos t; truncated series of order 8 is within 1/9! of it
  CHECK(chk.truncation_bound == doctest::Approx(1.0 / 362880.0).epsilon(1e-9));
  CHECK(chk.max_discrepancy <= chk.truncation_bound * (1.0 + 1e-9));
}

TEST_CASE("riesz variance integral: quadrature and quasi-random rule agree") {
  double gl = riesz_variance_integral();
  CHECK(gl == doctest::Approx(1.2392596325485772).epsilon(1e-10));
  double qr = riesz_variance_integral_quasirandom(1000000);
  CHECK(std::abs(qr - gl) < 1e-3);
}

TEST_CASE("chi-square tail probabilities") {
  CHECK(chi_square_tail(0.0, 5) == doctest::Approx(1.0));
  CHECK(chi_square_tail(4.0, 2) == doctest::Approx(std::exp(-2.0)).epsilon(1e-10));
  // k = 4: P(X > x) = e^{-x/2} (1 + x/2)
  CHECK(chi_square_tail(6.0, 4) == doctest::Approx(std::exp(-3.0) * 4.0).epsilon(1e-10));
  CHECK(chi_square_tail(10.0, 3) < chi_square_tail(5.0, 3));
}
