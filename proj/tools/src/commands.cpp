#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include "bundle.hpp"
#include "cdlab/analysis/floquet.hpp"
#include "cdlab/errors.hpp"
#include "cdlab/lie/solver.hpp"
#include "cdlab/models/lie_models.hpp"
#include "cdlab/models/oscillator.hpp"
#include "cdlab/models/registry.hpp"
#include "cdlab/models/spin.hpp"
#include "csv.hpp"
#include "factory.hpp"
#include "verify.hpp"

namespace cdlab::cli {

namespace md = cdlab::models;
namespace fs = std::filesystem;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

fs::path out_path(const GlobalOptions& g, const std::string& name) {
  fs::create_directories(g.out_dir);
  return fs::path(g.out_dir) / name;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream f(p);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write '" + p.string() + "'");
  return f;
}

// Command-line overrides are folded into the config so the stored hash describes the effective run.
void apply_overrides(json& config, const GlobalOptions& g, bool with_tol) {
  if (!config.is_object()) config_error("", "config must be a JSON object");
  if (g.seed) config["seed"] = *g.seed;
  if (with_tol && g.tol) config["tol"] = *g.tol;
}

std::string errc_of(const std::exception& e) {
  if (const auto* ce = dynamic_cast<const Error*>(&e)) return std::string(errc_name(ce->code()));
  return "error";
}

template <class F>
void parallel_for(std::size_t n, F&& body) {
  const unsigned workers = std::max(1u, std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

unsigned worker_count() {
  if (const char* env = std::getenv("CD_DYN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------------------------
int cmd_simulate(json config, const GlobalOptions& g, std::ostream& log) {
  apply_overrides(config, g, true);
  const Section c(config, "");
  const std::string model = c.string("model");
  const double kappa = c.positive("kappa");
  const std::uint64_t seed = c.seed("seed");
  const double tol = c.positive("tol", 1e-10);
  const long starts = c.integer("starts", 1);
  if (starts < 1 || starts > 10000) config_error(c.key_path("starts"), "must be in [1, 10000]");
  const Section time = c.sub("time");
  const double t0 = time.number("t0", 0.0);
  const double t1 = time.number("t1");
  const double dt = time.positive("sample_dt", 0.01);
  time.finish();
  if (!(t1 > t0)) config_error(time.key_path("t1"), "must exceed t0");
  const Section an = c.sub("analysis");
  const bool do_cycle = an.boolean("cycle", true);
  const bool do_floquet = an.boolean("floquet", false);
  const bool do_quant = an.boolean("quantization", true);
  const double cycle_tol = an.positive("cycle_tol", 1e-6);
  an.finish();
  const Section out = c.sub("output");
  const std::string csv_name = out.string("csv", "trajectory.csv");
  const std::string json_name = out.string("json", "summary.json");
  out.finish();
  std::vector<double> x0_cfg;
  const bool has_x0 = c.has("initial_state");
  if (has_x0) x0_cfg = c.numbers("initial_state");
  const SimModel m = build_model(model, c.sub("params"), kappa, seed);
  c.finish();
  if (has_x0 && x0_cfg.size() != m.state_columns.size())
    config_error("/initial_state", "expected " + std::to_string(m.state_columns.size()) + " components, got " +
                                       std::to_string(x0_cfg.size()));
  if (has_x0 && starts != 1) config_error("/starts", "must be 1 when initial_state is given");

  ResultBundle bundle = make_bundle("simulate", config);
  std::mt19937_64 rng(seed);
  cdcore::IntegrateOptions io;
  io.abs_tol = io.rel_tol = tol;
  io.sample_dt = dt;
  std::vector<std::string> header{"t"};
  header.insert(header.end(), m.state_columns.begin(), m.state_columns.end());
  for (const auto& [name, f] : m.quasi_integrals) header.push_back(name);

  for (long s = 0; s < starts; ++s) {
    const Vec x0 = has_x0 ? Vec(Eigen::Map<const Vec>(x0_cfg.data(), static_cast<Eigen::Index>(x0_cfg.size())))
                          : m.sample(rng);
    const cdcore::Trajectory tr = cdcore::integrate(m.problem, x0, t0, t1, io);
    fs::path csv = out_path(g, csv_name);
    if (starts > 1) csv = csv.parent_path() / (csv.stem().string() + "_" + std::to_string(s) + csv.extension().string());
    std::ofstream f = open_out(csv);
    CsvWriter w(f);
    w.header(header);
    std::vector<double> row;
    for (std::size_t k = 0; k < tr.size(); ++k) {
      row.assign(1, tr.t[k]);
      row.insert(row.end(), tr.x[k].data(), tr.x[k].data() + tr.x[k].size());
      for (const auto& [name, q] : m.quasi_integrals) row.push_back(q(tr.x[k]));
      w.row(row);
    }
    if (!do_cycle) continue;
    CycleSummary cs;
    try {
      analysis::CycleOptions co;
      co.tol = cycle_tol;
      co.angle_coords = m.angle_coords;
      co.hamiltonian = m.hamiltonian;
      analysis::CycleReport rep = analysis::detect_cycle(tr, co);
      if (do_floquet) {
        const auto rhs = m.problem.rhs;
        const VectorFn field = [rhs](const Vec& x) {
          Vec dx(x.size());
          rhs(x, 0.0, dx);
          return dx;
        };
        rep.floquet_multipliers = analysis::floquet(field, rep.x.front(), rep.period, tol);
      }
      cs = summarize(rep, static_cast<int>(s));
      if (do_quant && !m.loops.empty()) {
        try {
          cs.quantization_integrals = analysis::quantization_integral(rep.x, m.loops, 1e-4, m.angle_coords);
        } catch (const Error& e) {
          cs.error = e.what();
        }
      }
    } catch (const Error& e) {
      cs.start = static_cast<int>(s);
      cs.error = e.what();
    }
    log << "start " << s << ": " << (cs.error.empty() ? "cycle period " + csv_number(cs.period) + ", energy " + csv_number(cs.energy)
                                                       : cs.error)
        << '\n';
    bundle.cycles.push_back(cs);
  }
  write_bundle(bundle, out_path(g, json_name).string());
  return kOk;
}

// ---------------------------------------------------------------------------------------------
int cmd_spectrum(json config, const GlobalOptions& g, std::ostream& log) {
  apply_overrides(config, g, false);
  const Section c(config, "");
  const std::string model = c.choice("model", {"oscillator", "spin"});
  (void)c.seed("seed");
  const Section out = c.sub("output");
  const std::string csv_name = out.string("csv", "spectrum.csv");
  out.finish();
  std::ofstream f = open_out(out_path(g, csv_name));
  CsvWriter w(f);
  w.header({"n", "series", "mu", "epsilon", "p", "q", "omega", "observable", "residual", "floquet", "status"});
  std::size_t rows = 0, failed = 0;
  if (model == "oscillator") {
    const std::vector<double> mus = read_grid(c, "mu");
    const std::vector<long> ns = c.integers("n");
    const std::vector<std::string> series = c.strings("series", {"stable"});
    const double omega0 = c.positive("omega0", 1.0);
    const bool floquet = c.boolean("floquet", true);
    c.finish();
    for (const auto& s : series)
      if (s != "stable" && s != "unstable") config_error("/series", "entries must be 'stable' or 'unstable'");
    for (double mu : mus) {
      if (!(mu > 0)) config_error("/mu", "entries must be positive");
      for (long n : ns)
        for (const auto& s : series) {
          const double eps = omega0 / mu;
          std::vector<CsvCell> row{n, s, mu, eps};
          try {
            const md::OscRoot r =
                md::oscillator_root(static_cast<int>(n), mu, s == "stable" ? md::OscSeries::stable : md::OscSeries::unstable);
            const double xi = eps / r.q;
            std::string verdict = "n/a";
            if (floquet) {
              md::OscParams prm = md::osc_params_mu(mu, omega0, std::max(64, static_cast<int>(4 * n)));
              const CVec mult = md::osc_lie_multipliers(md::osc_lie_point(r.p, r.q, prm), prm);
              double mx = 0.0;
              for (Eigen::Index k = 0; k < mult.size(); ++k) mx = std::max(mx, std::abs(mult[k]));
              verdict = mx <= 1.0 + 1e-6 ? "stable" : "unstable";
            }
            row.insert(row.end(), {r.p, r.q, r.p * xi, r.p, r.residual, verdict, std::string("ok")});
          } catch (const Error& e) {
            ++failed;
            row.insert(row.end(), {kNaN, kNaN, kNaN, kNaN, kNaN, std::string("n/a"), std::string(errc_name(e.code()))});
          }
          w.row(row);
          ++rows;
        }
    }
  } else {
    const long m = c.integer("m");
    if (m < 1 || m > 64) config_error("/m", "must be in [1, 64]");
    const double lambda = c.number("lambda", 1.0);
    const double eps = c.positive("epsilon");
    std::vector<long> all;
    for (long k = 0; k <= m; ++k) all.push_back(k);
    const std::vector<long> ns = c.integers("n", all);
    c.finish();
    const md::SpinLie lm(static_cast<int>(m), lambda);
    for (long n : ns) {
      std::vector<CsvCell> row{n, std::string("spectral"), std::abs(lambda) / eps, eps};
      try {
        if (n < 0 || n > m) throw Error(Errc::NoSuchLevel, "level outside 0..m");
        const lie::LieCandidate cand = lie::solve_lie(lm, lie::spectral_seed(lm, static_cast<int>(n), eps), eps);
        const double S3 = md::spin_vector(Eigen::Vector2cd(cand.z[0], cand.z[1]), static_cast<int>(m))[2];
        row.insert(row.end(), {cand.params[0], cand.xi.payload[0], cand.omega, S3, cand.residual, std::string("n/a"),
                               std::string(cand.converged ? "ok" : "NoConvergence")});
      } catch (const Error& e) {
        ++failed;
        row.insert(row.end(), {kNaN, kNaN, kNaN, kNaN, kNaN, std::string("n/a"), std::string(errc_name(e.code()))});
      }
      w.row(row);
      ++rows;
    }
  }
  log << rows << " row(s), " << failed << " without a root\n";
  return kOk;
}

// ---------------------------------------------------------------------------------------------
int cmd_lie(json config, const GlobalOptions& g, std::ostream& log) {
  apply_overrides(config, g, true);
  const Section c(config, "");
  const std::string model = c.choice("model", {"oscillator", "spin", "matrix"});
  const std::uint64_t seed = c.seed("seed");
  const long level = c.integer("level");
  const double eps = c.positive("epsilon");
  const long series = c.integer("series", 0);
  lie::SolveOptions so;
  so.tol = c.positive("tol", so.tol);
  so.continuation = c.boolean("continuation", false);
  so.with_consistency = c.boolean("with_consistency", false);
  const Section out = c.sub("output");
  const std::string json_name = out.string("json", "lie.json");
  out.finish();
  std::unique_ptr<lie::LieModel> lm;
  if (model == "oscillator") {
    lm = std::make_unique<md::OscillatorLie>(c.positive("omega0", 1.0));
  } else if (model == "spin") {
    const long m = c.integer("m");
    if (m < 1 || m > 64) config_error("/m", "must be in [1, 64]");
    lm = std::make_unique<md::SpinLie>(static_cast<int>(m), c.number("lambda", 1.0));
  } else {
    CMat A;
    if (c.has("eigenvalues")) {
      const auto ev = c.numbers("eigenvalues");
      if (ev.size() < 2) config_error("/eigenvalues", "need at least two eigenvalues");
      A = CMat::Zero(static_cast<Eigen::Index>(ev.size()), static_cast<Eigen::Index>(ev.size()));
      for (std::size_t i = 0; i < ev.size(); ++i) A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = ev[i];
    } else {
      const long N = c.integer("N", 3);
      if (N < 2 || N > 64) config_error("/N", "must be in [2, 64]");
      std::mt19937_64 rng(seed);
      A = md::random_hermitian(static_cast<int>(N), rng);
    }
    lm = std::make_unique<md::MatrixLie>(A);
  }
  c.finish();
  ResultBundle bundle = make_bundle("lie", config);
  const lie::LieCandidate cand =
      lie::solve_lie(*lm, lie::spectral_seed(*lm, static_cast<int>(level), eps, static_cast<int>(series)), eps, so);
  bundle.lie_candidates.push_back(summarize(cand, model, static_cast<int>(level), static_cast<int>(series)));
  write_bundle(bundle, out_path(g, json_name).string());
  log << model << " level " << level << ": omega " << csv_number(cand.omega) << ", residual "
      << csv_number(cand.residual) << ", " << lie::classification_name(cand.classification) << '\n';
  return cand.converged ? kOk : kCheckFailure;
}

// ---------------------------------------------------------------------------------------------
int cmd_verify(const std::string& suite, const GlobalOptions& g, std::ostream& log) {
  json config = {{"suite", suite}, {"seed", g.seed.value_or(1)}};
  const std::vector<CheckResult> checks = run_suite(suite, g.seed.value_or(1));
  ResultBundle bundle = make_bundle("verify", config);
  bundle.checks = checks;
  bool ok = true;
  for (const auto& r : checks) {
    ok = ok && r.passed;
    log << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(52) << r.name << " residual " << csv_number(r.residual)
        << " tol " << csv_number(r.tolerance) << '\n';
  }
  write_bundle(bundle, out_path(g, "verify_" + suite + ".json").string());
  return ok ? kOk : kCheckFailure;
}

// ---------------------------------------------------------------------------------------------
int cmd_sweep(json config, const GlobalOptions& g, std::ostream& log) {
  apply_overrides(config, g, false);
  const Section c(config, "");
  const std::string kind = c.choice("kind", {"spin_deviation", "oscillator_onset"});
  (void)c.seed("seed");
  const long budget = c.integer("budget", 10000);
  const Section out = c.sub("output");
  const std::string csv_name = out.string("csv", "sweep.csv");
  out.finish();
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;
  auto check_budget = [&](std::size_t n) {
    if (static_cast<long>(n) > budget)
      throw Error(Errc::BudgetExceeded, std::to_string(n) + " grid points exceed the budget of " + std::to_string(budget));
  };
  if (kind == "spin_deviation") {
    const long m = c.integer("m", 1);
    if (m < 1 || m > 64) config_error("/m", "must be in [1, 64]");
    const double lambda = c.number("lambda", 1.0);
    const long level = c.integer("level", 0);
    if (level < 0 || level > m) config_error("/level", "must be in [0, m]");
    const std::vector<double> eps = read_grid(c, "epsilon");
    c.finish();
    check_budget(eps.size());
    header = {"epsilon", "measured", "predicted"};
    rows.resize(eps.size());
    const md::SpinLie lm(static_cast<int>(m), lambda);
    parallel_for(eps.size(), [&](std::size_t i) {
      const double e = eps[i];
      if (!(e > 0)) config_error("/epsilon", "entries must be positive");
      const lie::LieCandidate cand = lie::solve_lie(lm, lie::spectral_seed(lm, static_cast<int>(level), e), e);
      const lie::SpectralData sd = lm.spectral_data(cand.z, cand.xi.payload);
      const int idx = cand.xi.payload[0] >= 0 ? static_cast<int>(level) : static_cast<int>(m - level);
      rows[i] = {e, cand.omega - sd.omega[idx], lie::deviation_second_order(idx, e, sd)};
    });
  } else {
    const std::vector<double> mus = read_grid(c, "mu");
    const long n_max = c.integer("n_max", 60);
    if (n_max < 1 || n_max > 100000) config_error("/n_max", "must be in [1, 100000]");
    c.finish();
    check_budget(mus.size());
    header = {"mu", "onset_n", "bound", "ratio"};
    rows.resize(mus.size());
    parallel_for(mus.size(), [&](std::size_t i) {
      const double mu = mus[i];
      if (!(mu > 0)) config_error("/mu", "entries must be positive");
      long onset = -1;
      for (long n = 1; n <= n_max && onset < 0; ++n) {
        try {
          const md::OscRoot r = md::oscillator_root(static_cast<int>(n), mu, md::OscSeries::stable);
          if (std::abs(r.p - static_cast<double>(n)) < 0.5) onset = n;
        } catch (const Error&) {
        }
      }
      const double bound = md::oscillator_existence_bound(mu);
      rows[i] = {mu, onset, bound, onset > 0 ? static_cast<double>(onset) / bound : kNaN};
    });
  }
  std::ofstream f = open_out(out_path(g, csv_name));
  CsvWriter w(f);
  w.header(header);
  for (const auto& r : rows) w.row(r);
  log << rows.size() << " row(s) written to " << out_path(g, csv_name).string() << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------------------------
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"cdlab: conformally dissipative systems laboratory"};
  app.require_subcommand(1);
  GlobalOptions g;
  std::string config_file, suite;
  std::uint64_t seed = 0;
  double tol = 0.0;
  auto add_common = [&](CLI::App* sc, bool needs_config) {
    sc->add_option("--out", g.out_dir, "Output directory")->capture_default_str();
    sc->add_option("--seed", seed, "RNG seed (overrides the config)");
    sc->add_option("--tol", tol, "Integrator / solver tolerance (overrides the config)")->check(CLI::PositiveNumber);
    if (needs_config) sc->add_option("--config", config_file, "JSON config file")->required()->check(CLI::ExistingFile);
  };
  CLI::App* sim = app.add_subcommand("simulate", "Integrate a model and analyse its attractor");
  CLI::App* spec = app.add_subcommand("spectrum", "Tabulate spectral roots");
  CLI::App* lie_cmd = app.add_subcommand("lie", "Solve for one Lie solution");
  CLI::App* ver = app.add_subcommand("verify", "Run a verification suite");
  CLI::App* sw = app.add_subcommand("sweep", "Evaluate observables on a parameter grid");
  for (CLI::App* sc : {sim, spec, lie_cmd, sw}) add_common(sc, true);
  add_common(ver, false);
  ver->add_option("--suite", suite, "Suite id")->required();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }
  for (CLI::App* sc : {sim, spec, lie_cmd, ver, sw}) {
    if (sc->count("--seed")) g.seed = seed;
    if (sc->count("--tol")) g.tol = tol;
  }
  try {
    if (*ver) return cmd_verify(suite, g, out);
    json config = load_config_file(config_file);
    if (*sim) return cmd_simulate(config, g, out);
    if (*spec) return cmd_spectrum(config, g, out);
    if (*lie_cmd) return cmd_lie(config, g, out);
    return cmd_sweep(config, g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::ConfigInvalid:
      case Errc::UnknownSuite:
      case Errc::BudgetExceeded:
        return kConfigError;
      default:
        return kRuntimeError;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
}

}  // namespace cdlab::cli
