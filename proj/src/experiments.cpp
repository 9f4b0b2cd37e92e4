#include "crit/experiments.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace crit {

void run_chains(const Lattice& lat, const RunPlan& plan,
                const std::function<std::function<void(const SpinConfig&, const ColoredBonds&)>(
                    int)>& make_observer) {
  if (plan.n_chains < 1 || plan.samples_per_chain < 1)
    throw std::invalid_argument("plan needs at least one chain and one sample");

  std::vector<std::function<void(const SpinConfig&, const ColoredBonds&)>> observers;
  observers.reserve(plan.n_chains);
  for (int i = 0; i < plan.n_chains; ++i) observers.push_back(make_observer(i));

  auto run_one = [&](int i) {
    SamplerConfig cfg;
    cfg.algorithm = plan.algorithm;
    cfg.seed = Rng::split(plan.seed, static_cast<std::uint64_t>(i)).bits();
    cfg.thermalization_sweeps = plan.thermalization_sweeps;
    cfg.decorrelation_sweeps = plan.decorrelation_sweeps;
    sample_chain(lat, cfg, plan.samples_per_chain, observers[i]);
  };

  int workers = std::max(1, std::min(plan.threads, plan.n_chains));
  if (workers == 1) {
    for (int i = 0; i < plan.n_chains; ++i) run_one(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= plan.n_chains) return;
        try {
          run_one(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

MomentAccumulator accumulate_observable(
    const Lattice& lat, const RunPlan& plan,
    const std::function<double(const SpinConfig&, const ColoredBonds&)>& observable) {
  long batch = std::max<long>(1, plan.samples_per_chain / 32);
  std::vector<MomentAccumulator> per_chain(plan.n_chains, MomentAccumulator(batch));
  run_chains(lat, plan, [&](int i) {
    MomentAccumulator* acc = &per_chain[i];
    return [acc, &observable](const SpinConfig& s, const ColoredBonds& c) {
      acc->add(observable(s, c));
    };
  });
  MomentAccumulator total(batch);
  for (auto& acc : per_chain) {
    acc.flush();
    total.merge(acc);
  }
  return total;
}

std::vector<double> collect_observable(
    const Lattice& lat, const RunPlan& plan,
    const std::function<double(const SpinConfig&, const ColoredBonds&)>& observable) {
  std::vector<std::vector<double>> per_chain(plan.n_chains);
  run_chains(lat, plan, [&](int i) {
    std::vector<double>* out = &per_chain[i];
    out->reserve(plan.samples_per_chain);
    return [out, &observable](const SpinConfig& s, const ColoredBonds& c) {
      out->push_back(observable(s, c));
    };
  });
  std::vector<double> all;
  all.reserve(plan.total_samples());
  for (const auto& v : per_chain) all.insert(all.end(), v.begin(), v.end());
  return all;
}

Estimate two_point_rho(int sep, int grid_side, const RunPlan& plan) {
  if (grid_side < 4 * sep) throw std::invalid_argument("grid must be >= 4x the separation");
  Lattice lat(grid_side, BoundaryCondition::Free);
  int r0 = grid_side / 2 - sep / 2, c0 = grid_side / 2 - sep / 2;
  int u = lat.index(r0, c0);
  int v = lat.index(r0 + sep, c0 + sep);
  auto acc = accumulate_observable(lat, plan, [u, v](const SpinConfig& s, const ColoredBonds&) {
    return static_cast<double>(s.spins[u] * s.spins[v]);
  });
  return acc.mean_est();
}

Estimate center_magnetization_plus(int n_side, const RunPlan& plan) {
  Lattice lat(n_side, BoundaryCondition::Plus);
  int c = lat.index(n_side / 2, n_side / 2);
  auto acc = accumulate_observable(lat, plan, [c](const SpinConfig& s, const ColoredBonds&) {
    return static_cast<double>(s.spins[c]);
  });
  return acc.mean_est();
}

Estimate one_arm_wired(int n_side, const RunPlan& plan) {
  Lattice lat(n_side, BoundaryCondition::Plus);
  int c = lat.index(n_side / 2, n_side / 2);
  auto acc = accumulate_observable(lat, plan, [c](const SpinConfig&, const ColoredBonds& cb) {
    return cb.labels.touches_ghost(cb.labels.find(c)) ? 1.0 : 0.0;
  });
  return acc.mean_est();
}

Estimate one_arm_annulus(int eps_inv, int grid_side, const RunPlan& plan) {
  // domain [-1,1]^2 has side 2; the inner square [-eps/2, eps/2]^2 has side
  // eps, i.e. a fraction eps/2 = 1/(2 eps_inv) of the grid
  if (eps_inv < 1) throw std::invalid_argument("eps_inv must be >= 1");
  int inner = grid_side / (2 * eps_inv);
  if (eps_inv == 1 || inner < 1) {
    // degenerate annulus: the inner square already sits at the outer scale
    return Estimate{1.0, 0.0, true};
  }
  Lattice lat(grid_side, BoundaryCondition::Plus);
  int r0 = (grid_side - inner) / 2;
  std::vector<int> inner_sites;
  for (int r = r0; r < r0 + inner; ++r)
    for (int c = r0; c < r0 + inner; ++c) inner_sites.push_back(lat.index(r, c));
  auto acc =
      accumulate_observable(lat, plan, [&inner_sites](const SpinConfig&, const ColoredBonds& cb) {
        for (int s : inner_sites) {
          if (cb.labels.touches_ghost(cb.labels.find(s))) return 1.0;
        }
        return 0.0;
      });
  return acc.mean_est();
}

double beta_eps(int eps_inv, double alpha1) {
  if (alpha1 <= 0.0) throw std::invalid_argument("alpha1 must be positive");
  double eps = 1.0 / eps_inv;
  return eps * eps / alpha1;
}

std::vector<double> magnetization_samples(int n_side, BoundaryCondition bc,
                                          const RenormScheme& scheme, const RunPlan& plan) {
  Lattice lat(n_side, bc);
  return collect_observable(lat, plan, [&lat, &scheme](const SpinConfig& s, const ColoredBonds&) {
    return magnetization(lat, s, scheme);
  });
}

Estimate kpoint_scaled(int n_side, BoundaryCondition bc,
                       const std::vector<std::pair<int, int>>& points,
                       const RenormScheme& scheme, const RunPlan& plan) {
  if (points.empty() || points.size() > 6)
    throw std::invalid_argument("k must lie in [1, 6]");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw std::invalid_argument("points must be distinct");

  Lattice lat(n_side, bc);
  std::vector<int> sites;
  for (auto [r, c] : points) sites.push_back(lat.index(r, c));
  double k = static_cast<double>(points.size());
  double normalizer = scheme.kind == RenormScheme::Kind::WuExponent
                          ? std::pow(lat.mesh(), -k / 8.0)
                          : std::pow(scheme.rho_hat, -k / 2.0);
  auto acc = accumulate_observable(lat, plan, [&sites](const SpinConfig& s, const ColoredBonds&) {
    int prod = 1;
    for (int i : sites) prod *= s.spins[i];
    return static_cast<double>(prod);
  });
  auto est = acc.mean_est();
  est.value *= normalizer;
  est.std_error *= normalizer;
  return est;
}

Estimate restricted_norm_ratio(int n_side, BoundaryCondition bc, const SubSquare& sub,
                               double alpha, int j_max, const RunPlan& plan) {
  Lattice lat(n_side, bc);
  RenormScheme scheme = RenormScheme::wu();
  double lambda = static_cast<double>(sub.side) * sub.side / (static_cast<double>(n_side) * n_side);
  auto acc = accumulate_observable(lat, plan, [&](const SpinConfig& s, const ColoredBonds&) {
    FieldGrid f = restrict_to(field_from_spins(lat, s, scheme), sub);
    return sobolev_norm_sq(sine_coefficients(f, j_max), alpha).value;
  });
  auto est = acc.mean_est();
  double scale = std::pow(lambda, 15.0 / 8.0);
  est.value /= scale;
  est.std_error /= scale;
  return est;
}

}  // namespace crit
