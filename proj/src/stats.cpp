#include "crit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace crit {

MomentAccumulator::MomentAccumulator(long batch_size) : batch_size_(batch_size) {
  if (batch_size < 1) throw std::invalid_argument("batch_size must be >= 1");
}

void MomentAccumulator::add(double x) {
  double p = 1.0;
  for (int k = 0; k < kMaxOrder; ++k) {
    p *= x;
    current_.s[k] += p;
  }
  if (++current_.n == batch_size_) {
    batches_.push_back(current_);
    current_ = Batch{};
  }
}

void MomentAccumulator::flush() {
  if (current_.n > 0) {
    batches_.push_back(current_);
    current_ = Batch{};
  }
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
  flush();
  if (other.current_.n > 0) throw std::invalid_argument("merge requires a flushed accumulator");
  batches_.insert(batches_.end(), other.batches_.begin(), other.batches_.end());
}

long MomentAccumulator::count() const {
  long n = current_.n;
  for (const Batch& b : batches_) n += b.n;
  return n;
}

double MomentAccumulator::power_sum(int order) const {
  if (order < 1 || order > kMaxOrder) throw std::invalid_argument("order out of range");
  double s = current_.s[order - 1];
  for (const Batch& b : batches_) s += b.s[order - 1];
  return s;
}

double MomentAccumulator::mean() const { return power_sum(1) / count(); }

double MomentAccumulator::variance() const {
  double m = mean();
  return power_sum(2) / count() - m * m;
}

namespace {

// delete-one-batch jackknife of an arbitrary functional of the total sums
Estimate jackknife(const std::vector<MomentAccumulator::Batch>& batches,
                   const std::function<double(const MomentAccumulator::Batch&)>& functional) {
  MomentAccumulator::Batch total{};
  for (const auto& b : batches) {
    total.n += b.n;
    for (int k = 0; k < MomentAccumulator::kMaxOrder; ++k) total.s[k] += b.s[k];
  }
  Estimate est;
  est.value = functional(total);
  long nb = static_cast<long>(batches.size());
  if (nb < MomentAccumulator::kMinBatches) {
    est.reliable = false;
    return est;
  }
  std::vector<double> leave(nb);
  double mean_leave = 0.0;
  for (long i = 0; i < nb; ++i) {
    MomentAccumulator::Batch rest = total;
    rest.n -= batches[i].n;
    for (int k = 0; k < MomentAccumulator::kMaxOrder; ++k) rest.s[k] -= batches[i].s[k];
    leave[i] = functional(rest);
    mean_leave += leave[i];
  }
  mean_leave /= nb;
  double ss = 0.0;
  for (double v : leave) ss += (v - mean_leave) * (v - mean_leave);
  est.std_error = std::sqrt(ss * (nb - 1.0) / nb);
  return est;
}

double central_moment(const MomentAccumulator::Batch& b, int order) {
  double n = static_cast<double>(b.n);
  double m = b.s[0] / n;
  switch (order) {
    case 2:
      return b.s[1] / n - m * m;
    case 4: {
      double m2 = b.s[1] / n, m3 = b.s[2] / n, m4 = b.s[3] / n;
      return m4 - 4.0 * m * m3 + 6.0 * m * m * m2 - 3.0 * m * m * m * m;
    }
    default:
      throw std::invalid_argument("unsupported central moment order");
  }
}

}  // namespace

Estimate MomentAccumulator::mean_est() const {
  return jackknife(batches_, [](const Batch& b) { return b.s[0] / b.n; });
}

Estimate MomentAccumulator::variance_est() const {
  return jackknife(batches_, [](const Batch& b) { return central_moment(b, 2); });
}

Estimate MomentAccumulator::kurtosis_ratio_est() const {
  double v = variance();
  if (v <= 0.0) {
    Estimate e;
    e.reliable = false;
    return e;
  }
  return jackknife(batches_, [](const Batch& b) {
    double m2 = central_moment(b, 2);
    return central_moment(b, 4) / (3.0 * m2 * m2);
  });
}

FitResult loglog_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 3)
    throw std::invalid_argument("need >= 3 matched points");
  std::size_t n = x.size();
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] <= 0.0 || y[i] <= 0.0) throw std::invalid_argument("points must be positive");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    rss += r * r;
  }
  fit.residual_norm = std::sqrt(rss);
  fit.slope_stderr = n > 2 ? std::sqrt(rss / (n - 2) / sxx) : 0.0;
  return fit;
}

KSResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  KSResult r;
  r.n1 = a.size();
  r.n2 = b.size();
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    double t = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= t) ++i;
    while (j < b.size() && b[j] <= t) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / r.n1 - static_cast<double>(j) / r.n2));
  }
  r.d = d;
  return r;
}

double theta_empirical(double mesh, double rho_hat) {
  if (rho_hat <= 0.0) throw std::invalid_argument("rho_hat must be positive");
  return mesh * mesh / std::sqrt(rho_hat);
}

std::vector<ThirdDifference> mgf_third_differences(const std::vector<double>& samples,
                                                   const std::vector<double>& t_grid) {
  if (t_grid.size() < 4) throw std::invalid_argument("t grid needs at least 4 points");
  if (samples.empty()) throw std::invalid_argument("no samples");
  double h = t_grid[1] - t_grid[0];
  for (std::size_t i = 1; i + 1 < t_grid.size(); ++i) {
    if (std::abs((t_grid[i + 1] - t_grid[i]) - h) > 1e-9 * std::max(1.0, std::abs(h)))
      throw std::invalid_argument("t grid must be uniform");
  }

  long nb = std::min<long>(32, static_cast<long>(samples.size()));
  long per = static_cast<long>(samples.size()) / nb;
  double m_max = *std::max_element(samples.begin(), samples.end());

  // batch sums of exp(t m - t m_max) for every t
  std::size_t nt = t_grid.size();
  std::vector<std::vector<double>> bs(nb, std::vector<double>(nt, 0.0));
  std::vector<long> bn(nb, 0);
  for (std::size_t s = 0; s < samples.size(); ++s) {
    long b = std::min<long>(static_cast<long>(s) / per, nb - 1);
    ++bn[b];
    for (std::size_t t = 0; t < nt; ++t)
      bs[b][t] += std::exp(t_grid[t] * (samples[s] - m_max));
  }

  auto log_mgf = [&](const std::vector<double>& sums, long n) {
    std::vector<double> l(nt);
    for (std::size_t t = 0; t < nt; ++t) l[t] = t_grid[t] * m_max + std::log(sums[t] / n);
    return l;
  };
  auto third = [&](const std::vector<double>& l) {
    std::vector<double> d;
    for (std::size_t i = 2; i + 1 < nt; ++i)
      d.push_back((l[i + 1] - 3.0 * l[i] + 3.0 * l[i - 1] - l[i - 2]) / (h * h * h));
    return d;
  };

  std::vector<double> total(nt, 0.0);
  long n_total = 0;
  for (long b = 0; b < nb; ++b) {
    n_total += bn[b];
    for (std::size_t t = 0; t < nt; ++t) total[t] += bs[b][t];
  }
  std::vector<double> d_all = third(log_mgf(total, n_total));

  // delete-one-batch jackknife
  std::vector<std::vector<double>> d_leave(nb);
  for (long b = 0; b < nb; ++b) {
    std::vector<double> rest(nt);
    for (std::size_t t = 0; t < nt; ++t) rest[t] = total[t] - bs[b][t];
    d_leave[b] = third(log_mgf(rest, n_total - bn[b]));
  }

  std::vector<ThirdDifference> out(d_all.size());
  for (std::size_t i = 0; i < d_all.size(); ++i) {
    out[i].t = t_grid[i + 2];
    out[i].value = d_all[i];
    double mean = 0.0;
    for (long b = 0; b < nb; ++b) mean += d_leave[b][i];
    mean /= nb;
    double ss = 0.0;
    for (long b = 0; b < nb; ++b) ss += (d_leave[b][i] - mean) * (d_leave[b][i] - mean);
    out[i].std_error = std::sqrt(ss * (nb - 1.0) / nb);
  }
  return out;
}

CharFunCheck char_function_check(const std::vector<double>& samples,
                                 const std::vector<double>& t_grid, int k_max) {
  if (samples.empty()) throw std::invalid_argument("no samples");
  std::size_t n = samples.size();
  std::vector<double> mu(k_max + 2, 0.0);
  double abs_high = 0.0;
  for (double m : samples) {
    double p = 1.0;
    for (int k = 1; k <= k_max; ++k) {
      p *= m;
      mu[k] += p;
    }
    abs_high += std::pow(std::abs(m), k_max + 1);
  }
  for (int k = 1; k <= k_max; ++k) mu[k] /= n;
  mu[0] = 1.0;
  abs_high /= n;

  CharFunCheck out;
  double t_abs_max = 0.0;
  for (double t : t_grid) {
    t_abs_max = std::max(t_abs_max, std::abs(t));
    double re_emp = 0.0, im_emp = 0.0;
    for (double m : samples) {
      re_emp += std::cos(t * m);
      im_emp += std::sin(t * m);
    }
    re_emp /= n;
    im_emp /= n;
    double re_ser = 0.0, im_ser = 0.0, fact = 1.0, tp = 1.0;
    for (int k = 0; k <= k_max; ++k) {
      if (k > 0) {
        fact *= k;
        tp *= t;
      }
      double term = tp * mu[k] / fact;
      switch (k % 4) {
        case 0: re_ser += term; break;
        case 1: im_ser += term; break;
        case 2: re_ser -= term; break;
        case 3: im_ser -= term; break;
      }
    }
    double d = std::hypot(re_emp - re_ser, im_emp - im_ser);
    out.max_discrepancy = std::max(out.max_discrepancy, d);
  }
  double fact = 1.0;
  for (int k = 2; k <= k_max + 1; ++k) fact *= k;
  out.truncation_bound = abs_high * std::pow(t_abs_max, k_max + 1) / fact;
  return out;
}

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

double gl_rect(const std::function<double(double, double)>& f, double x0, double x1, double y0,
               double y1, const std::vector<double>& gx, const std::vector<double>& gw) {
  double acc = 0.0;
  for (std::size_t i = 0; i < gx.size(); ++i) {
    double x = 0.5 * (x1 - x0) * gx[i] + 0.5 * (x0 + x1);
    double row = 0.0;
    for (std::size_t j = 0; j < gx.size(); ++j) {
      double y = 0.5 * (y1 - y0) * gx[j] + 0.5 * (y0 + y1);
      row += gw[j] * f(x, y);
    }
    acc += gw[i] * row;
  }
  return acc * 0.25 * (x1 - x0) * (y1 - y0);
}

}  // namespace

double riesz_variance_integral() {
  // I = int_{[-1,1]^2} (1-|u|)(1-|v|) (u^2+v^2)^{-1/8} du dv
  //   = 4 (M00 - 2 M10 + M11) with M_pq = int_{[0,1]^2} u^p v^q (u^2+v^2)^{-1/8}.
  // Halving u and v maps the kernel onto itself up to 2^{-(p+q+7/4)}, so each
  // moment reduces to a smooth integral over [0,1]^2 \ [0,1/2]^2.
  std::vector<double> gx, gw;
  gauss_legendre(48, gx, gw);
  auto moment = [&](int p, int q) {
    auto f = [&](double u, double v) {
      return std::pow(u, p) * std::pow(v, q) * std::pow(u * u + v * v, -0.125);
    };
    double s = gl_rect(f, 0.5, 1.0, 0.0, 1.0, gx, gw) + gl_rect(f, 0.0, 0.5, 0.5, 1.0, gx, gw);
    return s / (1.0 - std::pow(2.0, -(p + q + 1.75)));
  };
  return 4.0 * (moment(0, 0) - 2.0 * moment(1, 0) + moment(1, 1));
}

double riesz_variance_integral_quasirandom(std::size_t n_points) {
  // rank-1 Kronecker lattice from the generalized golden ratio in dim 4
  double g = 2.0;
  for (int i = 0; i < 40; ++i) g = std::pow(1.0 + g, 1.0 / 5.0);
  double alpha[4], frac[4] = {0.0, 0.0, 0.0, 0.0};
  for (int d = 0; d < 4; ++d) alpha[d] = std::pow(1.0 / g, d + 1);
  double acc = 0.0;
  for (std::size_t i = 0; i < n_points; ++i) {
    for (int d = 0; d < 4; ++d) {
      frac[d] += alpha[d];
      if (frac[d] >= 1.0) frac[d] -= 1.0;
    }
    double du = frac[0] - frac[2], dv = frac[1] - frac[3];
    acc += std::pow(du * du + dv * dv, -0.125);
  }
  return acc / n_points;
}

namespace {

double gamma_p(double a, double x) {
  // regularized lower incomplete gamma, series and continued fraction
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("bad incomplete gamma arguments");
  if (x == 0.0) return 0.0;
  double gln = std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - gln);
  }
  double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
  for (int i = 1; i < 500; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::abs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  return 1.0 - std::exp(-x + a * std::log(x) - gln) * h;
}

}  // namespace

double chi_square_tail(double x, int k) {
  if (k < 1) throw std::invalid_argument("degrees of freedom must be >= 1");
  if (x <= 0.0) return 1.0;
  return 1.0 - gamma_p(0.5 * k, 0.5 * x);
}

}  // namespace crit
