#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace crit {

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  bool reliable = true;  // false when too few batches for an error bar
};

// Streaming moments of a scalar observable: power sums up to order 8 kept per
// batch so any moment functional gets a delete-one-batch jackknife error bar.
// Merging is append-in-order; a fixed summation order makes merged and
// single-pass results identical.
class MomentAccumulator {
 public:
  static constexpr int kMaxOrder = 8;
  static constexpr int kMinBatches = 30;

  struct Batch {
    long n = 0;
    std::array<double, kMaxOrder> s{};  // s[p-1] = sum x^p
  };

  explicit MomentAccumulator(long batch_size);

  void add(double x);
  void flush();  // close the partial batch, if any
  void merge(const MomentAccumulator& other);  // other must be flushed

  long count() const;
  long num_batches() const { return static_cast<long>(batches_.size()); }
  double power_sum(int order) const;  // includes the partial batch
  double mean() const;
  double variance() const;  // population variance from power sums

  Estimate mean_est() const;
  Estimate variance_est() const;
  // E[(x - mean)^4] / (3 E[(x - mean)^2]^2); unreliable flag when variance 0
  Estimate kurtosis_ratio_est() const;

  const std::vector<Batch>& batches() const { return batches_; }

 private:
  long batch_size_;
  Batch current_;
  std::vector<Batch> batches_;
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double residual_norm = 0.0;
};

// ordinary least squares on (log x, log y); throws on nonpositive input or
// fewer than 3 points
FitResult loglog_fit(const std::vector<double>& x, const std::vector<double>& y);

struct KSResult {
  double d = 0.0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

KSResult ks_two_sample(std::vector<double> a, std::vector<double> b);

// Theta_a = a^2 rho_hat^{-1/2}
double theta_empirical(double mesh, double rho_hat);

struct ThirdDifference {
  double t = 0.0;
  double value = 0.0;
  double std_error = 0.0;  // batch jackknife over sample batches
};

// centered third finite differences of L(t) = log mean e^{t m}, computed via
// log-sum-exp; t_grid must be uniform with at least 4 points
std::vector<ThirdDifference> mgf_third_differences(const std::vector<double>& samples,
                                                   const std::vector<double>& t_grid);

struct CharFunCheck {
  double max_discrepancy = 0.0;
  double truncation_bound = 0.0;  // E|m|^{k+1} max|t|^{k+1} / (k+1)!
};

// empirical E[e^{itm}] against the truncated moment series of order k_max
CharFunCheck char_function_check(const std::vector<double>& samples,
                                 const std::vector<double>& t_grid, int k_max = 8);

// iint over [0,1]^2 x [0,1]^2 of |x-y|^{-1/4}, by Gauss-Legendre quadrature
// on the reduced 2-D integral with the corner singularity removed through the
// kernel's exact self-similarity
double riesz_variance_integral();

// independent cross-check of the same integral by a rank-1 lattice
// quasi-random rule on [0,1]^4
double riesz_variance_integral_quasirandom(std::size_t n_points);

// P(X > x) for a chi-square with k degrees of freedom
double chi_square_tail(double x, int k);

}  // namespace crit
