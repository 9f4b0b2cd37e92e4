// crit: batch driver for critical-Ising magnetization-field experiments.
// Subcommands: sample, estimate, oracle, acceptance.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "crit/acceptance.hpp"
#include "crit/experiments.hpp"
#include "crit/oracle.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "crit 1.0.0";
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// FNV-1a over the canonical (sorted-key, no-whitespace) config serialization
std::uint64_t config_hash(const json& j) {
  std::string s = j.dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fixed17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int default_threads() {
  if (const char* env = std::getenv("CRIT_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

struct SampleConfig {
  std::string experiment;
  std::vector<int> n_sides;
  crit::BoundaryCondition boundary = crit::BoundaryCondition::Free;
  crit::RenormScheme scheme = crit::RenormScheme::wu();
  crit::Algorithm algorithm = crit::Algorithm::SwendsenWang;
  double beta;
  int n_chains = 32;
  long samples_per_chain = 0;
  int thermalization = 100;
  int decorrelation = 2;
  std::uint64_t seed = 0;
  std::string out = "out";
  bool snapshots = false;
  json raw;
};

SampleConfig parse_sample_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path.string());
  json j = json::parse(in);
  SampleConfig c;
  c.raw = j;
  c.beta = crit::critical_beta();
  if (!j.contains("seed")) throw std::invalid_argument("config is missing the mandatory seed");
  c.seed = j.at("seed").get<std::uint64_t>();
  c.experiment = j.value("experiment", "run");
  for (int n : j.at("n_sides").get<std::vector<int>>()) {
    if (n < 2 || (n & (n - 1)) != 0)
      throw std::invalid_argument("n_sides must be powers of two >= 2");
    c.n_sides.push_back(n);
  }
  c.boundary = crit::boundary_from_string(j.value("boundary", "free"));
  std::string scheme = j.value("scheme", "wu");
  if (scheme == "wu") {
    c.scheme = crit::RenormScheme::wu();
  } else if (scheme == "empirical") {
    c.scheme = crit::RenormScheme::empirical(j.at("rho_hat").get<double>());
  } else {
    throw std::invalid_argument("scheme must be wu or empirical");
  }
  std::string alg = j.value("algorithm", "sw");
  if (alg == "wolff") c.algorithm = crit::Algorithm::Wolff;
  else if (alg != "sw") throw std::invalid_argument("algorithm must be sw or wolff");
  c.beta = j.value("beta", crit::critical_beta());
  c.n_chains = j.value("n_chains", 32);
  c.samples_per_chain = j.value("samples_per_chain", 100L);
  c.thermalization = j.value("thermalization", 100);
  c.decorrelation = j.value("decorrelation", 2);
  c.out = j.value("out", "out");
  c.snapshots = j.value("snapshots", false);
  return c;
}

int cmd_sample(const std::string& config_path, int threads, const std::string& out_override) {
  SampleConfig cfg;
  try {
    cfg = parse_sample_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!out_override.empty()) cfg.out = out_override;

  try {
    fs::create_directories(cfg.out);
    for (int n : cfg.n_sides) {
      crit::Lattice lat(n, cfg.boundary);
      crit::RunPlan plan;
      plan.seed = cfg.seed;
      plan.n_chains = cfg.n_chains;
      plan.threads = threads;
      plan.samples_per_chain = cfg.samples_per_chain;
      plan.algorithm = cfg.algorithm;
      plan.thermalization_sweeps = cfg.thermalization;
      plan.decorrelation_sweeps = cfg.decorrelation;

      std::vector<std::vector<double>> mags(plan.n_chains);
      std::vector<std::ostringstream> snaps(plan.n_chains);
      crit::run_chains(lat, plan, [&](int i) {
        auto* m = &mags[i];
        auto* snap = cfg.snapshots ? &snaps[i] : nullptr;
        const crit::Lattice* lp = &lat;
        auto scheme = cfg.scheme;
        return [m, snap, lp, scheme](const crit::SpinConfig& s, const crit::ColoredBonds& cb) {
          m->push_back(crit::magnetization(*lp, s, scheme));
          if (snap) {
            for (std::size_t i = 0; i < s.spins.size(); ++i)
              *snap << (s.spins[i] > 0 ? '+' : '-');
            *snap << ',';
            for (auto b : cb.bond.open) *snap << (b ? '1' : '0');
            *snap << '\n';
          }
        };
      });

      fs::path data = fs::path(cfg.out) / ("samples_N" + std::to_string(n) + ".csv");
      std::ofstream out(data);
      if (!out) throw std::runtime_error("cannot write " + data.string());
      out << "chain,sample,magnetization\n";
      for (int i = 0; i < plan.n_chains; ++i)
        for (std::size_t k = 0; k < mags[i].size(); ++k)
          out << i << "," << k << "," << fixed17(mags[i][k]) << "\n";
      if (cfg.snapshots) {
        std::ofstream sout(fs::path(cfg.out) / ("snapshots_N" + std::to_string(n) + ".csv"));
        sout << "spins,bonds\n";
        for (auto& s : snaps) sout << s.str();
      }
    }
    json manifest = {
        {"schema", "crit-manifest/1"},
        {"version", kVersion},
        {"experiment", cfg.experiment},
        {"config_hash", config_hash(cfg.raw)},
        {"config", cfg.raw},
    };
    std::ofstream mout(fs::path(cfg.out) / "manifest.json");
    mout << manifest.dump(2) << "\n";
  } catch (const std::exception& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}

std::vector<double> read_magnetization_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> out;
  while (std::getline(in, line)) {
    auto pos = line.rfind(',');
    if (pos == std::string::npos) continue;
    out.push_back(std::stod(line.substr(pos + 1)));
  }
  if (out.empty()) throw std::runtime_error("no samples in " + path);
  return out;
}

void emit_row(const std::string& quantity, double estimate, double std_error, long n) {
  std::cout << quantity << "," << fixed17(estimate) << "," << fixed17(std_error) << "," << n
            << "\n";
}

crit::RunPlan cli_plan(std::uint64_t seed, long samples, int threads) {
  crit::RunPlan p;
  p.seed = seed;
  p.threads = threads;
  p.n_chains = 32;
  p.samples_per_chain = (samples + p.n_chains - 1) / p.n_chains;
  return p;
}

int cmd_oracle() {
  double beta = crit::critical_beta();
  double p = crit::critical_p();
  std::cout << "graph,observable,exact_value,generator\n";
  {
    crit::SmallGraph g = crit::SmallGraph::grid(2, crit::BoundaryCondition::Free);
    crit::SpinOracle o(g, beta);
    std::cout << "grid2-free,pair_correlation," << fixed17(o.expectation({0, 1}))
              << ",crit oracle\n";
  }
  {
    crit::SmallGraph g = crit::SmallGraph::grid(3, crit::BoundaryCondition::Plus);
    crit::SpinOracle o(g, beta);
    std::cout << "grid3-plus,center_magnetization," << fixed17(o.expectation({4}))
              << ",crit oracle\n";
    std::cout << "grid3-plus,center_ghost_connectivity,"
              << fixed17(crit::exact_fk_connectivity(g, p, 2.0, 4, g.n_free))
              << ",crit oracle\n";
    std::cout << "grid3-plus,max_third_derivative_t0_3,";
    double worst = -1e300;
    for (int i = 0; i <= 30; ++i)
      worst = std::max(worst, o.log_mgf_third_derivative(0.1 * i));
    std::cout << fixed17(worst) << ",crit oracle\n";
  }
  {
    crit::SmallGraph star;
    star.n_free = 1;
    star.has_ghost = true;
    for (int k = 0; k < 4; ++k) star.edges.push_back({0, 1, 1.0});
    std::cout << "star4-wired,ghost_connectivity,"
              << fixed17(crit::exact_fk_connectivity(star, p, 2.0, 0, 1)) << ",crit oracle\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critical Ising magnetization-field laboratory"};
  app.require_subcommand(1);
  int threads = default_threads();
  app.add_option("--threads", threads, "worker threads (default: cores, or CRIT_THREADS)");

  // sample
  auto* sample = app.add_subcommand("sample", "draw decorrelated samples to an archive");
  sample->fallthrough();  // --threads lives on the app
  std::string config_path, out_dir;
  sample->add_option("--config", config_path, "JSON run config")->required();
  sample->add_option("--out", out_dir, "output directory override");

  // estimate
  auto* estimate = app.add_subcommand("estimate", "compute an estimator, CSV on stdout");
  estimate->fallthrough();
  std::string kind;
  estimate->add_option("kind", kind,
                       "two-point|one-arm|moments|mgf|charfun|kpoint|sobolev|blocks|cutoff|ks|riesz")
      ->required();
  std::vector<std::string> inputs;
  estimate->add_option("--input", inputs, "input sample archives (CSV)");
  std::vector<int> scales;
  estimate->add_option("--scale", scales, "separations / lattice sides");
  long samples = 100000;
  estimate->add_option("--samples", samples, "MC samples for self-generating kinds");
  std::uint64_t seed = 0;
  bool seed_given = false;
  estimate->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) {
    seed_given = true;
  });
  int rho_inv = 2, eps_inv = 4, k_order = 1, j_max = 64;
  double alpha = 2.0, t_max = 1.0;
  int t_steps = 10;
  estimate->add_option("--rho-inv", rho_inv, "inverse rho scale");
  estimate->add_option("--eps-inv", eps_inv, "inverse epsilon scale");
  estimate->add_option("--k", k_order, "number of points for kpoint");
  estimate->add_option("--jmax", j_max, "sine-basis truncation");
  estimate->add_option("--alpha", alpha, "Sobolev exponent");
  estimate->add_option("--tmax", t_max, "MGF/charfun grid maximum");
  estimate->add_option("--tsteps", t_steps, "MGF/charfun grid steps");
  std::string boundary = "free";
  estimate->add_option("--boundary", boundary, "plus|minus|free");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "emit exact golden values as CSV");

  // acceptance
  auto* acceptance = app.add_subcommand("acceptance", "run the acceptance suite");
  acceptance->fallthrough();
  std::string tier = "fast";
  acceptance->add_option("--tier", tier, "fast|full");
  std::uint64_t acc_seed = 20260823;
  acceptance->add_option("--seed", acc_seed, "suite seed");
  std::string report_path;
  acceptance->add_option("--out", report_path, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sample) return cmd_sample(config_path, threads, out_dir);
    if (*oracle) return cmd_oracle();

    if (*acceptance) {
      if (tier != "fast" && tier != "full") {
        std::cerr << "tier must be fast or full\n";
        return kExitUsage;
      }
      auto report = crit::run_acceptance(tier == "full" ? crit::Tier::Full : crit::Tier::Fast,
                                         acc_seed, threads, std::cout);
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
          std::cerr << "cannot write " << report_path << "\n";
          return kExitIo;
        }
        crit::write_report_json(report, out);
      }
      return report.all_pass() ? 0 : 1;
    }

    // estimate
    if (kind != "riesz" && kind != "moments" && kind != "mgf" && kind != "charfun" &&
        kind != "ks" && !seed_given) {
      std::cerr << "--seed is required for sample-generating estimators\n";
      return kExitUsage;
    }
    auto bc = crit::boundary_from_string(boundary);
    std::cout << "quantity,estimate,std_error,samples\n";
    if (kind == "two-point") {
      if (scales.empty()) scales = {4, 8, 16, 32};
      for (int sep : scales) {
        auto est = crit::two_point_rho(sep, 4 * sep,
                                       cli_plan(crit::Rng::split(seed, sep).bits(), samples,
                                                threads));
        emit_row("rho(" + std::to_string(sep) + ")", est.value, est.std_error, samples);
      }
    } else if (kind == "one-arm") {
      if (scales.empty()) scales = {8, 16, 32};
      for (int n : scales) {
        auto est = crit::one_arm_wired(2 * n, cli_plan(crit::Rng::split(seed, n).bits(),
                                                       samples, threads));
        emit_row("alpha1(" + std::to_string(n) + ")", est.value, est.std_error, samples);
      }
    } else if (kind == "moments") {
      if (inputs.empty()) throw std::invalid_argument("moments needs --input");
      auto data = read_magnetization_csv(inputs[0]);
      crit::MomentAccumulator acc(std::max<long>(1, static_cast<long>(data.size()) / 32));
      for (double v : data) acc.add(v);
      acc.flush();
      auto mean = acc.mean_est();
      auto var = acc.variance_est();
      auto kurt = acc.kurtosis_ratio_est();
      emit_row("mean", mean.value, mean.std_error, acc.count());
      emit_row("variance", var.value, var.std_error, acc.count());
      emit_row("kurtosis_ratio", kurt.value, kurt.std_error, acc.count());
    } else if (kind == "mgf") {
      if (inputs.empty()) throw std::invalid_argument("mgf needs --input");
      auto data = read_magnetization_csv(inputs[0]);
      std::vector<double> grid;
      for (int i = 0; i <= t_steps; ++i) grid.push_back(t_max * i / t_steps);
      for (const auto& d : crit::mgf_third_differences(data, grid))
        emit_row("third_difference(t=" + fixed17(d.t) + ")", d.value, d.std_error,
                 static_cast<long>(data.size()));
    } else if (kind == "charfun") {
      if (inputs.empty()) throw std::invalid_argument("charfun needs --input");
      auto data = read_magnetization_csv(inputs[0]);
      std::vector<double> grid;
      for (int i = 0; i <= t_steps; ++i) grid.push_back(t_max * i / t_steps);
      auto chk = crit::char_function_check(data, grid, 8);
      emit_row("charfun_max_discrepancy", chk.max_discrepancy, 0.0,
               static_cast<long>(data.size()));
      emit_row("charfun_truncation_bound", chk.truncation_bound, 0.0,
               static_cast<long>(data.size()));
    } else if (kind == "kpoint") {
      int n = scales.empty() ? 32 : scales[0];
      std::vector<std::pair<int, int>> pts;
      for (int i = 0; i < k_order; ++i) pts.push_back({n / 2, n / (k_order + 1) * (i + 1)});
      auto est = crit::kpoint_scaled(n, bc, pts, crit::RenormScheme::wu(),
                                     cli_plan(seed, samples, threads));
      emit_row("kpoint(k=" + std::to_string(k_order) + ")", est.value, est.std_error, samples);
    } else if (kind == "sobolev") {
      int n = scales.empty() ? 32 : scales[0];
      crit::Lattice lat(n, bc);
      crit::RenormScheme scheme = crit::RenormScheme::wu();
      auto acc = crit::accumulate_observable(
          lat, cli_plan(seed, samples, threads),
          [&](const crit::SpinConfig& s, const crit::ColoredBonds&) {
            return crit::sobolev_norm_sq(
                       crit::sine_coefficients(crit::field_from_spins(lat, s, scheme), j_max),
                       alpha)
                .value;
          });
      auto est = acc.mean_est();
      emit_row("sobolev_norm_sq(alpha=" + fixed17(alpha) + ")", est.value, est.std_error,
               acc.count());
    } else if (kind == "blocks") {
      int n = scales.empty() ? 64 : scales[0];
      auto a1 = crit::one_arm_annulus(eps_inv, n, cli_plan(crit::Rng::split(seed, 1).bits(),
                                                           samples, threads));
      double beta = crit::beta_eps(eps_inv, a1.value);
      crit::Lattice lat(n, bc);
      double theta = crit::RenormScheme::wu().theta(lat.mesh());
      std::vector<double> sx, sy;
      auto plan = cli_plan(crit::Rng::split(seed, 2).bits(), samples, threads);
      auto pairs = crit::collect_observable(
          lat, plan, [&](const crit::SpinConfig&, const crit::ColoredBonds& cb) {
            auto blocks = crit::block_variables(lat, cb, rho_inv, eps_inv, theta);
            double x = 0.0, y = 0.0;
            for (const auto& b : blocks) {
              x += b.x;
              y += b.y;
            }
            sy.push_back(y);
            return x;
          });
      sx = pairs;
      auto fit = crit::xy_discrepancy(sx, sy, beta);
      emit_row("xy_c_hat", fit.c_hat, 0.0, static_cast<long>(sx.size()));
      emit_row("xy_l2_discrepancy", fit.l2, 0.0, static_cast<long>(sx.size()));
    } else if (kind == "cutoff") {
      int n = scales.empty() ? 64 : scales[0];
      crit::Lattice lat(n, bc);
      double theta = crit::RenormScheme::wu().theta(lat.mesh());
      auto acc = crit::accumulate_observable(
          lat, cli_plan(seed, samples, threads),
          [&](const crit::SpinConfig& s, const crit::ColoredBonds& cb) {
            long total = 0;
            for (auto v : s.spins) total += v;
            double d = theta * total - crit::cutoff_magnetization(lat, cb, rho_inv, theta);
            return d * d;
          });
      emit_row("cutoff_l2(rho_inv=" + std::to_string(rho_inv) + ")", std::sqrt(acc.mean()), 0.0,
               acc.count());
    } else if (kind == "ks") {
      if (inputs.size() < 2) throw std::invalid_argument("ks needs two --input archives");
      auto ks = crit::ks_two_sample(read_magnetization_csv(inputs[0]),
                                    read_magnetization_csv(inputs[1]));
      emit_row("ks_d(n1=" + std::to_string(ks.n1) + ",n2=" + std::to_string(ks.n2) + ")", ks.d,
               0.0, static_cast<long>(ks.n1 + ks.n2));
    } else if (kind == "riesz") {
      emit_row("riesz_integral", crit::riesz_variance_integral(), 0.0, 0);
    } else {
      std::cerr << "unknown estimator kind: " << kind << "\n";
      return kExitUsage;
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
