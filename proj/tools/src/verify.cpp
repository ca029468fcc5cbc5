#include "verify.hpp"

#include "commands.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "cdlab/cdcore/field.hpp"
#include "cdlab/cdcore/identities.hpp"
#include "cdlab/errors.hpp"
#include "cdlab/models/oscillator.hpp"
#include "cdlab/models/particle.hpp"
#include "cdlab/models/registry.hpp"
#include "cdlab/relsym/cylinder.hpp"
#include "cdlab/relsym/lorentz.hpp"

namespace cdlab::cli {

namespace md = cdlab::models;
namespace rs = cdlab::relsym;

namespace {

void add(std::vector<CheckResult>& out, std::string name, double residual, double tol) {
  out.push_back({std::move(name), residual, tol, std::isfinite(residual) && residual <= tol});
}

std::vector<CheckResult> identities_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  for (const auto& name : md::registered_names()) {
    const md::RegisteredSystem r = md::registered_system(name, 1.0);
    const int n = r.sys.dim;
    Mat M1(n, n), M2(n, n);
    Vec b1(n), b2(n);
    for (int i = 0; i < n; ++i) {
      b1[i] = g(rng);
      b2[i] = g(rng);
      for (int j = 0; j < n; ++j) {
        M1(i, j) = 0.3 * g(rng);
        M2(i, j) = 0.3 * g(rng);
      }
    }
    M1 = 0.5 * (M1 + M1.transpose()).eval();
    M2 = 0.5 * (M2 + M2.transpose()).eval();
    const ScalarFn F = [b1, M1](const Vec& x) { return b1.dot(x) + 0.5 * x.dot(M1 * x); };
    const ScalarFn G = [b2, M2](const Vec& x) { return b2.dot(x) + 0.5 * x.dot(M2 * x); };
    std::map<std::string, double> worst;
    for (int k = 0; k < 100; ++k)
      for (const auto& [id, v] : cdcore::identity_residuals(r.sys, r.sample(rng), F, G))
        worst[id] = std::max(worst[id], v);
    for (const auto& [id, v] : worst) add(out, "identities/" + name + "/" + id, v, 1e-6);

    const Vec x = r.sample(rng);
    const Mat W = cdcore::omega_at(r.sys, x);
    std::vector<std::pair<Vec, Vec>> pairs;
    while (pairs.size() < 2) {
      Vec a(n), b(n);
      for (int i = 0; i < n; ++i) {
        a[i] = g(rng);
        b[i] = g(rng);
      }
      if (std::abs(a.dot(W * b)) > 1e-2) pairs.push_back({a, b});
    }
    add(out, "contraction/" + name, cdcore::contraction_defect(r.sys, x, 3.0 / r.sys.kappa, pairs, 1e-10), 1e-5);
  }
  return out;
}

std::vector<CheckResult> appendix1_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  add(out, "velocity_addition/half_plus_half", std::abs(rs::velocity_add(0.5, 0.5) - 0.8), 1e-12);
  double comp = 0.0;
  for (double u : {-0.7, 0.1, 0.5, 0.9})
    for (double v : {0.2, 0.6, 0.95}) {
      const rs::Particle1D x{std::sinh(std::atanh(u)), 0.3, 1.0};
      comp = std::max(comp, std::abs(rs::group_action(rs::GroupKind::N_eps, std::atanh(v), x).velocity() -
                                     rs::velocity_add(u, v)));
    }
  add(out, "velocity_addition/boost_composition", comp, 1e-9);
  double len = 0.0;
  for (double v : {0.3, 0.6, 0.9}) {
    const rs::Ensemble body = rs::rigid_body(10, 1.0);
    for (double t : {0.0, 2.5})
      len = std::max(len, std::abs(rs::body_length(rs::boosted_body(body, std::atanh(v), t)) - 10.0 * std::sqrt(1 - v * v)));
  }
  add(out, "length_contraction", len, 1e-9);
  double dil = 0.0;
  for (double v : {0.1, 0.5, 0.9, 0.99}) {
    const double e = std::atanh(v);
    const double expect = 2.0 / std::sqrt(1 - v * v);
    dil = std::max({dil, std::abs(rs::clock_dilation(2.0, e, rs::ClockMechanism::abstract) - expect),
                    std::abs(rs::clock_dilation(2.0, e, rs::ClockMechanism::light_clock_sim) - expect)});
  }
  add(out, "time_dilation/light_clock", dil, 1e-9);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  rs::Ensemble states;
  for (int k = 0; k < 100; ++k) states.push_back({g(rng), g(rng), std::abs(g(rng)) + 0.1});
  double comm = 0.0;
  for (double t : {0.7, 3.0})
    for (double e : {0.3, -1.1}) comm = std::max(comm, rs::commutation_defect(states, t, e));
  add(out, "commutation", comm, 1e-10);
  double mom = 0.0;
  for (const auto& x : states)
    for (auto kind : {rs::GroupKind::H_t, rs::GroupKind::P_h, rs::GroupKind::N_eps}) {
      const rs::Momenta a = rs::momenta(rs::group_action(kind, 0.4, x));
      const rs::Momenta b = rs::momentum_transform(kind, 0.4, rs::momenta(x));
      mom = std::max({mom, std::abs(a.H - b.H), std::abs(a.p - b.p), std::abs(a.N - b.N)});
    }
  add(out, "momentum_transform", mom, 1e-9);
  const double eps = 0.8, T0 = 2.0;
  add(out, "quasi_periodicity", rs::quasi_periodicity_defect(T0 / 2, eps, {0.0, 0.3, 1.7, 4.0}, T0 * std::sinh(eps)), 1e-9);
  const auto [before, after] = rs::simultaneity_gaps(10, 1.0, 0.5);
  add(out, "simultaneity/rest_frame_gap", std::abs(before), 1e-9);
  out.push_back({"simultaneity/moving_frame_gap_nonzero", std::abs(after), 0.0, std::abs(after) > 1e-6});
  return out;
}

std::vector<CheckResult> appendix2_suite(std::uint64_t) {
  std::vector<CheckResult> out;
  rs::CylinderPotential pot;
  pot.centers = {Eigen::Vector3d::Zero(), Eigen::Vector3d(4.0, 1.0, 0.0)};
  pot.strengths = {0.5, 0.3};
  Vec st(9);
  st << 3.0, -2.0, 0.5, 0.0, 0.4, 0.1, 0.0, 0.8, 0.0;
  const rs::CylinderRun run = rs::cylinder_integrate(st, pot, 20.0, 0.1);
  double speed = 0.0, ham = 0.0;
  const double H0 = rs::cylinder_hamiltonian(run.x.front(), pot);
  for (const auto& x : run.x) {
    speed = std::max(speed, std::abs(rs::cylinder_speed_defect(x, pot)));
    ham = std::max(ham, std::abs(rs::cylinder_hamiltonian(x, pot) - H0));
  }
  add(out, "cylinder/unit_speed", speed, 1e-8);
  add(out, "cylinder/hamiltonian_conserved", ham, 1e-8);
  Vec st0 = Vec::Zero(9);
  st0 << 0.0, 0.0, 0.0, 0.7, 0.0, 0.0, 0.0, 0.0, 0.0;
  const rs::CylinderRun free0 = rs::cylinder_integrate(st0, rs::CylinderPotential{}, 5.0, 1.0);
  add(out, "cylinder/massless_proper_time", std::abs(free0.x.back()[8]), 0.0);
  return out;
}

std::vector<CheckResult> representation_suite(std::uint64_t) {
  std::vector<CheckResult> out;
  double worst = 0.0;
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) {
      const double p = 0.25 + 7.75 * i / 19.0, q = 0.01 + 0.99 * j / 19.0;
      const cplx a = md::g_function(p, q, md::GMethod::series), b = md::g_function(p, q, md::GMethod::integral);
      worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
    }
  add(out, "g_function/series_vs_integral", worst, 1e-8);
  double phi = 0.0;
  for (double x : {0.01, 0.1, 0.5, 1.0, 3.0, 10.0, 100.0})
    phi = std::max(phi, std::abs(md::particle_phi(x) - md::particle_phi_closed(x)) / md::particle_phi_closed(x));
  add(out, "particle_phi/quadrature_vs_closed", phi, 1e-8);
  return out;
}

}  // namespace

std::vector<std::string> verify_suites() { return {"identities", "appendix1", "appendix2", "representation", "all"}; }

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
  if (suite == "identities") return identities_suite(seed);
  if (suite == "appendix1") return appendix1_suite(seed);
  if (suite == "appendix2") return appendix2_suite(seed);
  if (suite == "representation") return representation_suite(seed);
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto& s : {"identities", "appendix1", "appendix2", "representation"}) {
      auto part = run_suite(s, seed);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  std::string list;
  for (const auto& s : verify_suites()) list += (list.empty() ? "" : ", ") + s;
  throw Error(Errc::UnknownSuite, "'" + suite + "' (known: " + list + ")");
}

}  // namespace cdlab::cli
