// Acceptance criteria runner: prints one PASS/FAIL line per check and exits nonzero on any failure.
// Usage: cdlab_acceptance [criterion-number ...]   (no arguments runs all twelve)
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cdlab/cdlab.hpp"

using namespace cdlab;
namespace md = cdlab::models;
namespace an = cdlab::analysis;
namespace cd = cdlab::cdcore;
namespace rs = cdlab::relsym;

namespace {

constexpr double kPi = std::numbers::pi;
int g_failures = 0;

void check(const std::string& id, bool ok, const std::string& detail) {
  std::printf("%s  %-44s %s\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}
std::string fmt2(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

cd::OdeProblem complex_problem(std::function<CVec(const CVec&)> eom, std::function<double(const CVec&)> guard,
                               double floor) {
  cd::OdeProblem p;
  p.rhs = [eom](const Vec& x, double, Vec& dx) { dx = pack(eom(unpack(x))); };
  p.guard = [guard](const Vec& x) { return guard(unpack(x)); };
  p.guard_floor = floor;
  return p;
}

cd::IntegrateOptions tol_opts(double tol, double sample_dt = 0.0) {
  cd::IntegrateOptions o;
  o.abs_tol = o.rel_tol = tol;
  o.sample_dt = sample_dt;
  return o;
}

double max_modulus(const CVec& v) {
  double m = 0.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) m = std::max(m, std::abs(v[k]));
  return m;
}

// ---------------------------------------------------------------------------------------------
void crit1() {
  const double mu = 200.0;
  bool roots_ok = true, stable_ok = true, unstable_ok = true;
  double worst_p = 0, worst_q = 0, stable_max = 0, unstable_min = 1e300;
  for (int n = 1; n <= 5; ++n) {
    md::OscParams prm = md::osc_params_mu(mu, 1.0, std::max(64, 4 * n));
    const md::OscRoot r = md::oscillator_root(n, mu, md::OscSeries::stable);
    worst_p = std::max(worst_p, std::abs(r.p - n) * mu * mu);
    worst_q = std::max(worst_q, std::abs(r.q - 1.0 / mu) * mu * mu * mu);
    roots_ok = roots_ok && std::abs(r.p - n) <= 10 / (mu * mu) && std::abs(r.q - 1 / mu) <= 10 / (mu * mu * mu);
    const double ms = max_modulus(md::osc_lie_multipliers(md::osc_lie_point(r.p, r.q, prm), prm));
    stable_max = std::max(stable_max, ms);
    stable_ok = stable_ok && ms <= 1.0 + 1e-6;
    const md::OscRoot u = md::oscillator_root(n, mu, md::OscSeries::unstable);
    const double mu_ = max_modulus(md::osc_lie_multipliers(md::osc_lie_point(u.p, u.q, prm), prm));
    unstable_min = std::min(unstable_min, mu_);
    unstable_ok = unstable_ok && mu_ > 1.0 + 1e-6;
  }
  check("1 oscillator roots |p-n|, |q-1/mu|", roots_ok,
        fmt2("max |p-n| mu^2 = %.3g, max |q-1/mu| mu^3 = %.3g (bound 10)", worst_p, worst_q));
  check("1 stable-series roots Floquet stable", stable_ok, fmt("max |multiplier| = %.12f", stable_max));
  check("1 unstable-series roots Floquet unstable", unstable_ok, fmt("min over roots of max |multiplier| = %.4g", unstable_min));
}

// ---------------------------------------------------------------------------------------------
void crit2() {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) {
      const double p = 0.25 + (8.0 - 0.25) * i / 19.0;
      const double q = 0.01 + (1.0 - 0.01) * j / 19.0;
      const cplx a = md::g_function(p, q, md::GMethod::series);
      const cplx b = md::g_function(p, q, md::GMethod::integral);
      worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
    }
  check("2 g series vs integral on 20x20 grid", worst <= 1e-8, fmt("max relative difference = %.3g", worst));
}

// ---------------------------------------------------------------------------------------------
void crit3() {
  std::mt19937_64 rng(20240611);
  CMat A;
  Vec w;
  for (;;) {
    A = md::random_hermitian(4, rng);
    Eigen::SelfAdjointEigenSolver<CMat> es(A);
    w = es.eigenvalues();
    double gap = 1e300;
    for (int j = 1; j < 4; ++j) gap = std::min(gap, w[j] - w[j - 1]);
    if (gap > 0.5) break;
  }
  const md::MatrixModel m = md::matrix_model(A, 1.0);
  const auto prob = complex_problem([&m](const CVec& s) { return md::matrix_eom(m, s); },
                                    [](const CVec& s) { return std::abs(md::matrix_pairing(s)); }, m.floor);
  double worst_E = 0.0, worst_rate = 0.0;
  int converged = 0;
  for (int s = 0; s < 20; ++s) {
    CVec z;
    do z = md::random_complex(8, rng);
    while (std::abs(md::matrix_pairing(z)) < 1e-3);
    const cd::Trajectory tr = cd::integrate(prob, pack(z), 0.0, 400.0, tol_opts(1e-10, 0.25));
    const double E = md::matrix_energy(m, unpack(tr.back()));
    double d = 1e300;
    for (int j = 0; j < 4; ++j) d = std::min(d, std::abs(E - w[j]));
    worst_E = std::max(worst_E, d);
    if (d < 1e-6) ++converged;
    for (auto Q : {md::matrix_q1, md::matrix_q2}) {
      const auto fit = cd::quasi_integral_fit(tr, [Q](const Vec& x) { return Q(unpack(x)); }, 0.0, 15.0);
      worst_rate = std::max(worst_rate, std::abs(fit.rate + 1.0));
    }
  }
  check("3 matrix attractor energies at eigenvalues", converged == 20,
        fmt2("%g/20 within 1e-6, max distance %.3g", converged, worst_E));
  check("3 matrix Q1, Q2 decay rate -kappa", worst_rate <= 1e-3, fmt("max |rate + kappa| / kappa = %.3g", worst_rate));

  // near-degenerate pair: A = diag(0, mu_k), start near the ground state on the Q = 0 surface
  const double muk = 0.3;
  CMat A2 = CMat::Zero(2, 2);
  A2(1, 1) = muk;
  const md::MatrixModel m2 = md::matrix_model(A2, 1.0);
  CVec psi(2);
  psi << 1.0, 0.1;
  psi.normalize();
  CVec z0(4);
  z0 << psi, psi.conjugate();
  const auto prob2 = complex_problem([&m2](const CVec& s) { return md::matrix_eom(m2, s); },
                                     [](const CVec& s) { return std::abs(md::matrix_pairing(s)); }, m2.floor);
  const cd::Trajectory tr2 = cd::integrate(prob2, pack(z0), 0.0, 200.0, tol_opts(1e-11, 0.5));
  const auto fit = cd::quasi_integral_fit(
      tr2, [](const Vec& x) { const CVec s = unpack(x); return std::norm(s[1]) / s.head(2).squaredNorm(); }, 40.0, 200.0);
  const double predicted = md::matrix_rates(muk, 1.0).first;
  const double rel = std::abs(-fit.rate - predicted) / predicted;
  check("3 near-degenerate relaxation rate", rel <= 0.2,
        fmt2("measured %.5f vs mu^2/2kappa = %.5f", -fit.rate, predicted) + fmt(" (rel %.3f)", rel));
}

// ---------------------------------------------------------------------------------------------
void crit4() {
  std::mt19937_64 rng(77);
  Vec w(4);
  w << 0.0, 1.1, 2.3, 3.6;
  const CMat A = w.cast<cplx>().asDiagonal();
  const md::FermionModel m = md::fermion_model(A, 2, 1.0);
  CMat C = CMat::Zero(4, 4);
  C.diagonal() << 0.3, -0.7, 1.2, 0.5;
  const std::vector<double> sums = md::fermion_spectrum(w, 2);
  const auto prob = complex_problem([&m](const CVec& s) { return md::fermion_eom(m, s); },
                                    [&m](const CVec& s) {
                                      return std::abs((md::fermion_chi(m, s) * md::fermion_psi(m, s)).determinant());
                                    },
                                    m.floor);
  int inside = 0;
  double worst_E = 0.0, worst_Q = 0.0;
  for (int s = 0; s < 20; ++s) {
    CVec z;
    do z = md::random_complex(16, rng);
    while (std::abs((md::fermion_chi(m, z) * md::fermion_psi(m, z)).determinant()) < 1e-3);
    const Vec xT = cd::integrate_to(prob, pack(z), 0.0, 200.0, tol_opts(1e-10));
    const CVec sT = unpack(xT);
    const double E = md::fermion_energy(m, sT);
    double d = 1e300;
    for (double v : sums) d = std::min(d, std::abs(E - v));
    worst_E = std::max(worst_E, d);
    if (d < 1e-5) ++inside;
    worst_Q = std::max({worst_Q, md::fermion_q1(m, sT).norm(), md::fermion_q2(m, sT).norm(),
                        std::abs(md::fermion_qc(m, sT, C))});
  }
  check("4 fermion energies in pair-sum set", inside == 20, fmt2("%g/20 within 1e-5, max distance %.3g", inside, worst_E));
  check("4 fermion quasi-integrals vanish on attractors", worst_Q < 1e-8, fmt("max |Q| = %.3g", worst_Q));
}

// ---------------------------------------------------------------------------------------------
void crit5() {
  md::SpinParams p;
  p.m = 3;
  p.lambda = 1.0;
  p.epsilon = p.lambda / 50.0;
  std::mt19937_64 rng(31337);
  const auto prob = complex_problem([&p](const CVec& s) { return md::spin_eom(s, p); },
                                    [&p](const CVec& s) { return std::abs(md::spin_wavefunction(s, p.m).first); },
                                    p.floor);
  const std::vector<double> targets{-1.5, -0.5, 0.5, 1.5};
  int ok = 0;
  double worst = 0.0;
  std::map<double, int> census;
  for (int s = 0; s < 30; ++s) {
    CVec z;
    do z = md::random_complex(p.m + 3, rng);
    while (std::abs(md::spin_wavefunction(z, p.m).first) < 1e-3);
    const CVec sT = unpack(cd::integrate_to(prob, pack(z), 0.0, 3000.0, tol_opts(1e-9)));
    const double S3 = md::spin_vector(Eigen::Vector2cd(sT[0], sT[1]), p.m)[2];
    double d = 1e300, best = 0;
    for (double t : targets)
      if (std::abs(S3 - t) < d) {
        d = std::abs(S3 - t);
        best = t;
      }
    worst = std::max(worst, d);
    if (d < 0.05) {
      ++ok;
      census[best]++;
    }
  }
  std::string cs;
  for (auto [k, v] : census) cs += fmt2(" %+.1f:%g", k, v);
  check("5 spin S3 converges to k - m/2", ok == 30, fmt2("%g/30 within 0.05 (max distance %.3g);", ok, worst) + cs);

  const md::SpinLie model(3, 1.0);
  double worst_rel = 0.0;
  for (int n : {1, 2})
    for (double eps : {0.02, 0.01, 0.005}) {
      const lie::LieCandidate seed = lie::spectral_seed(model, n, eps);
      const lie::LieCandidate c = lie::solve_lie(model, seed, eps);
      const lie::SpectralData sd = model.spectral_data(c.z, c.xi.payload);
      const double a = c.xi.payload[0];
      const int idx = a >= 0 ? n : 3 - n;
      const double dev = c.omega - sd.omega[idx];
      const double pred = lie::deviation_second_order(idx, eps, sd);
      worst_rel = std::max(worst_rel, std::abs(dev - pred) / std::abs(pred));
    }
  check("5 spin deviation vs second-order formula", worst_rel <= 0.1, fmt("max relative mismatch = %.2e", worst_rel));
}

// ---------------------------------------------------------------------------------------------
void crit6() {
  const double rho = 0.01;
  const double v = md::particle_velocity(rho);
  const double law = md::velocity_small_rho_sqrt(rho);
  check("6 velocity small-rho law 1 - sqrt(rho/pi)", std::abs(v - law) < 5 * rho,
        fmt2("v = %.6f, law = %.6f", v, law) + fmt(", |diff| = %.4f vs 5 rho", std::abs(v - law)) +
            fmt(" (1 - rho/sqrt(pi) = %.6f)", md::velocity_small_rho_linear(rho)));
  double small = 0.0;
  for (double x : {0.01, 0.02}) small = std::max(small, std::abs(md::particle_phi(x) - (1.0 - 4 * x * x)));
  check("6 Phi small-x asymptotics", small <= 1e-4, fmt("max |Phi - (1 - 4x^2)| = %.3g at x in {0.01, 0.02}", small));
  const double big = md::particle_phi(100.0);
  const double lead = 1.0 / (100.0 * std::sqrt(kPi));
  check("6 Phi large-x asymptotics", std::abs(big - lead) / lead <= 0.02,
        fmt("relative deviation at x=100: %.4f", std::abs(big - lead) / lead));
  md::WavetailParams wp;
  md::ParticleParams pp{rho, 1.0};
  wp.a = pp.a();
  wp.epsilon = pp.epsilon();
  wp.v = v;
  const double z1 = -20 * wp.a, z2 = z1 - 3 * v / wp.epsilon;
  const double len = (z1 - z2) / std::log(md::particle_wavetail_modulus(z1, wp) / md::particle_wavetail_modulus(z2, wp));
  const double expect = v / wp.epsilon;
  check("6 wave-tail e-folding length v/eps", std::abs(len - expect) / expect <= 0.1,
        fmt2("measured %.5f vs v/eps = %.5f", len, expect));
}

// ---------------------------------------------------------------------------------------------
void crit7() {
  std::mt19937_64 rng(4242);
  std::normal_distribution<double> g;
  double worst_id = 0.0, worst_c = 0.0;
  std::string worst_id_name, worst_c_name;
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
    for (int k = 0; k < 100; ++k) {
      const Vec x = r.sample(rng);
      for (const auto& [id, v] : cd::identity_residuals(r.sys, x, F, G))
        if (v > worst_id) {
          worst_id = v;
          worst_id_name = name + "/" + id;
        }
    }
    for (int k = 0; k < 2; ++k) {
      const Vec x = r.sample(rng);
      const Mat W = cd::omega_at(r.sys, x);
      std::vector<std::pair<Vec, Vec>> pairs;
      while (pairs.size() < 2) {
        Vec a(n), b(n);
        for (int i = 0; i < n; ++i) {
          a[i] = g(rng);
          b[i] = g(rng);
        }
        if (std::abs(a.dot(W * b)) > 1e-2) pairs.push_back({a, b});
      }
      const double d = cd::contraction_defect(r.sys, x, 3.0 / r.sys.kappa, pairs, 1e-10);
      if (d > worst_c) {
        worst_c = d;
        worst_c_name = name;
      }
    }
  }
  check("7 structural identities, 100 points per system", worst_id < 1e-6,
        fmt("max residual = %.3g", worst_id) + " (" + worst_id_name + ")");
  check("7 contraction defect over T = 3/kappa", worst_c < 1e-5, fmt("max defect = %.3g", worst_c) + " (" + worst_c_name + ")");
}

// ---------------------------------------------------------------------------------------------
void crit8() {
  const double two_pi = 2 * kPi;
  // toy oscillator with E0 = hbar kappa
  {
    const md::ToyParams tp{1.0, 1.0, 1.0};
    const cd::CdSystem sys = md::toy_oscillator(tp);
    const cd::Trajectory tr = cd::integrate(cd::make_problem(sys), Vec::Constant(2, 0.0) + Vec::Unit(2, 0) * 3.0, 0.0,
                                            60.0, tol_opts(1e-12, 0.005));
    an::CycleOptions co;
    co.angle_coords = {1};
    co.tol = 1e-8;
    const an::CycleReport rep = an::detect_cycle(tr, co);
    const double J = an::quantization_integral(rep.x, {{an::LoopSpec::Kind::canonical, 0, 1}}, 1e-6, {1})[0];
    check("8 toy oscillator loop integral = 2 pi hbar", std::abs(J - two_pi) <= 1e-8,
          fmt2("loop = %.12f, period = %.9f", J, rep.period));
  }
  std::vector<std::string> notes;
  bool all_int = true;
  auto record = [&](const std::string& name, double J, double tol) {
    const double k = std::round(J / two_pi);
    const bool ok = k != 0 && std::abs(J - two_pi * k) <= tol;
    all_int = all_int && ok;
    notes.push_back(name + fmt2("=%.8f (k=%g)", J, k));
  };
  // circle particle: cycle p = h, q on a circle of length L = 2 pi
  {
    const md::CircleParams cp{1.0, 1.0, 1.0, two_pi};
    const cd::CdSystem sys = md::circle_particle(cp);
    Vec x0(2);
    x0 << 2.5, 0.0;
    const cd::Trajectory tr = cd::integrate(cd::make_problem(sys), x0, 0.0, 60.0, tol_opts(1e-12, 0.005));
    an::CycleOptions co;
    co.angle_coords = {1};
    co.tol = 1e-8;
    const an::CycleReport rep = an::detect_cycle(tr, co);
    record("circle", an::quantization_integral(rep.x, {{an::LoopSpec::Kind::canonical, 0, 1}}, 1e-6, {1})[0], 1e-6);
  }
  // Kahler log model: cycle |z|^2 = -Re c
  {
    const cd::CdSystem sys = cd::kahler_as_cd(md::kahler_log(0.5, cplx(-1.0, 0.3)));
    Vec x0(2);
    x0 << 0.4, 0.2;
    const cd::Trajectory tr = cd::integrate(cd::make_problem(sys), x0, 0.0, 80.0, tol_opts(1e-12, 0.01));
    const an::CycleReport rep = an::detect_cycle(tr, {});
    record("kahler_log", an::quantization_integral(rep.x, {{an::LoopSpec::Kind::complex_polar, 0, 1}})[0], 1e-6);
  }
  // CS oscillator Lie solutions: the z loop over one rotation
  for (int n = 1; n <= 3; ++n) {
    const double mu = 200.0;
    md::OscParams prm = md::osc_params_mu(mu, 1.0, 64);
    const md::OscRoot r = md::oscillator_root(n, mu, md::OscSeries::stable);
    const md::OscLiePoint lp = md::osc_lie_point(r.p, r.q, prm);
    const double T = two_pi / lp.xi;
    const auto prob = complex_problem([prm](const CVec& s) { return md::cs_eom(s, prm); },
                                      [](const CVec& s) { return std::abs(md::osc_wavefunction(s).first); }, prm.floor);
    const cd::Trajectory tr = cd::integrate(prob, pack(lp.state), 0.0, T, tol_opts(1e-11, T / 400));
    std::vector<Vec> zs;
    for (const auto& x : tr.x) zs.push_back(x.head(2));
    record("cs_n" + std::to_string(n), an::quantization_integral(zs, {{an::LoopSpec::Kind::complex_polar, 0, 1}})[0],
           two_pi * 10 / (mu * mu));
  }
  // matrix series-1 solution: loop of the occupied component
  {
    std::mt19937_64 rng(5);
    const md::MatrixModel m = md::matrix_model(md::random_hermitian(3, rng), 1.0);
    const CVec s0 = md::matrix_series1(m, 1);
    const auto prob = complex_problem([&m](const CVec& s) { return md::matrix_eom(m, s); },
                                      [](const CVec& s) { return std::abs(md::matrix_pairing(s)); }, m.floor);
    Eigen::SelfAdjointEigenSolver<CMat> es(m.A);
    const double T = two_pi / std::abs(es.eigenvalues()[1]);
    const cd::Trajectory tr = cd::integrate(prob, pack(s0), 0.0, T, tol_opts(1e-11, T / 400));
    // component of psi along the eigenvector, in the (re, im) layout
    std::vector<Vec> zs;
    for (const auto& x : tr.x) {
      const cplx c = es.eigenvectors().col(1).dot(unpack(x).head(3));
      Vec v(2);
      v << c.real(), c.imag();
      zs.push_back(v);
    }
    record("matrix_series1", an::quantization_integral(zs, {{an::LoopSpec::Kind::complex_polar, 0, 1}})[0], 1e-6);
  }
  std::string all;
  for (const auto& s : notes) all += s + " ";
  check("8 detected cycles quantized in 2 pi hbar", all_int, all);
}

// ---------------------------------------------------------------------------------------------
void crit9() {
  an::HJParams p{1.0, 1.0, 1.3, 0.5, 1.0};
  const double k0 = an::hj_threshold(p.m, p.k);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> U(-3.0, 3.0);
  p.kappa = 1.5 * k0;
  const auto [s1, s2] = an::hj_quadratic(p);
  double res = 0.0, fdres = 0.0;
  std::vector<std::pair<double, double>> samples;
  for (int k = 0; k < 100; ++k) samples.push_back({U(rng), U(rng) * 3});
  for (const auto& s : {s1, s2}) {
    for (auto [q, t] : samples) res = std::max(res, std::abs(an::hj_residual(s, p, q, t)));
    const auto H = [p](double P, double q, double t) {
      return P * P / (2 * p.m) + 0.5 * p.k * q * q + p.f * q * std::cos(p.omega * t);
    };
    const auto S = [s, p](double q, double t) { return an::hj_action(s, p.omega, q, t); };
    fdres = std::max(fdres, an::invariant_manifold_residual(H, S, p.kappa, samples));
  }
  check("9 two HJ solutions above threshold", std::abs(s1.a - s2.a) > 1e-3 && res < 1e-10,
        fmt2("a = (%.6f, %.6f)", s1.a, s2.a) + fmt(", max residual %.3g", res) + fmt(", manifold residual %.3g", fdres));
  p.kappa = k0;
  const auto [m1, m2] = an::hj_quadratic(p);
  const double merge = std::max({std::abs(m1.a - m2.a), std::abs(m1.b - m2.b), std::abs(m1.c - m2.c)});
  check("9 HJ solutions merge at threshold", merge <= 1e-6, fmt("max coefficient gap = %.3g", merge));
  bool nosol = false;
  p.kappa = 0.5 * k0;
  try {
    (void)an::hj_quadratic(p);
  } catch (const Error& e) {
    nosol = e.code() == Errc::NoSolution;
  }
  check("9 NoSolution below threshold", nosol, "kappa = 0.5 kappa0");
  std::string periods;
  bool cycles = true;
  for (double f : {0.1, 0.5, 1.5}) {
    const md::ForcedParams fp{f * k0, 1.0, 1.0, 1.3, 0.5};
    const cd::CdSystem sys = md::forced_oscillator(fp);
    Vec x0(4);
    x0 << 0.3, -0.2, 0.0, 0.0;
    const double T_end = 40.0 / fp.kappa + 40.0;
    const cd::Trajectory tr = cd::integrate(cd::make_problem(sys), x0, 0.0, T_end, tol_opts(1e-11, 0.01));
    an::CycleOptions co;
    co.angle_coords = {3};
    co.tol = 1e-6;
    try {
      const an::CycleReport rep = an::detect_cycle(tr, co);
      const bool ok = std::abs(rep.period - 2 * kPi / fp.omega) < 1e-5;
      cycles = cycles && ok;
      periods += fmt2(" kappa/kappa0=%.1f: T=%.7f", f, rep.period);
    } catch (const Error& e) {
      cycles = false;
      periods += std::string(" ") + e.what();
    }
  }
  check("9 limit cycle persists for all kappa", cycles, periods);
}

// ---------------------------------------------------------------------------------------------
void crit10() {
  const double kappa = 1.0, h = 1.0;
  const md::TorusParams tp = md::torus_quadratic(kappa, h);
  const cd::CdSystem sys = md::torus_system(tp);
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> UI(0.0, 2.0), Uphi(-3.0, 3.0);
  double formula = 0.0, idem = 0.0, func = 0.0, shift = 0.0;
  for (int k = 0; k < 20; ++k) {
    Vec x(2);
    x << UI(rng), Uphi(rng);
    const Vec r = an::retraction(sys, x);
    Vec expect(2);
    expect << h, x[1] + (x[0] - h) / kappa;
    formula = std::max(formula, (r - expect).norm());
    shift = std::max(shift, std::abs(md::torus_phase_shift(tp, x.head(1))[0] - (x[0] - h) / kappa));
    idem = std::max(idem, (an::retraction(sys, r) - r).norm());
    for (double t : {0.5 / kappa, 2.0 / kappa}) {
      const Vec lhs = an::retraction(sys, an::cd_flow(sys, x, t));
      const Vec rhs = an::ph_flow(sys, r, t);
      func = std::max(func, (lhs - rhs).norm());
    }
  }
  check("10 retraction matches (I-h)/kappa shift", formula <= 1e-6 && shift <= 1e-6,
        fmt2("max |r - formula| = %.3g, phase-shift integral error %.3g", formula, shift));
  check("10 retraction idempotent", idem <= 1e-6, fmt("max |r(r(x)) - r(x)| = %.3g", idem));
  check("10 r o g_t = h_t o r", func <= 1e-6, fmt("max defect = %.3g", func));
}

// ---------------------------------------------------------------------------------------------
void crit11() {
  const double va = rs::velocity_add(0.5, 0.5);
  double compose = 0.0;
  for (double u : {0.1, 0.5, 0.9})
    for (double v : {0.2, 0.6, 0.95}) {
      const rs::Particle1D x{std::sinh(std::atanh(u)), 0.3, 1.0};
      const rs::Particle1D y = rs::group_action(rs::GroupKind::N_eps, std::atanh(v), x);
      compose = std::max(compose, std::abs(y.velocity() - rs::velocity_add(u, v)));
    }
  check("11 velocity addition", std::abs(va - 0.8) <= 1e-12 && compose <= 1e-9,
        fmt2("0.5+0.5 -> %.15f, composition mismatch %.3g", va, compose));
  const double v = 0.6, eps = std::atanh(v);
  const rs::Ensemble body = rs::rigid_body(10, 1.0);
  double Lerr = 0.0;
  for (double t : {0.0, 1.0, 7.5}) Lerr = std::max(Lerr, std::abs(rs::body_length(rs::boosted_body(body, eps, t)) - 8.0));
  check("11 length contraction L0 sqrt(1-v^2)", Lerr <= 1e-9, fmt("v=0.6, L0=10: max |L - 8| = %.3g", Lerr));
  double dil = 0.0;
  for (double vv : {0.1, 0.5, 0.8, 0.9, 0.99}) {
    const double e = std::atanh(vv);
    const double T0 = 2.0;
    const double a = rs::clock_dilation(T0, e, rs::ClockMechanism::abstract);
    const double s = rs::clock_dilation(T0, e, rs::ClockMechanism::light_clock_sim);
    dil = std::max({dil, std::abs(a - s), std::abs(a - T0 / std::sqrt(1 - vv * vv))});
  }
  check("11 light-clock dilation T0/sqrt(1-v^2)", dil <= 1e-9, fmt("max mismatch %.3g", dil));
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  rs::Ensemble states;
  for (int k = 0; k < 100; ++k) states.push_back({g(rng), g(rng), std::abs(g(rng)) + 0.1});
  double comm = 0.0;
  for (double t : {0.7, 3.0})
    for (double e : {0.3, -1.1}) comm = std::max(comm, rs::commutation_defect(states, t, e));
  check("11 commutation H_t N_eps = P N_eps H", comm <= 1e-10, fmt("max defect %.3g", comm));

  rs::CylinderPotential pot;
  pot.centers = {Eigen::Vector3d::Zero()};
  pot.strengths = {0.5};
  Vec st = Vec::Zero(9);
  st << 3.0, 0.0, 0.0, 0.0, 0.4, 0.0, 0.0, 0.8, 0.0;
  const rs::CylinderRun run = rs::cylinder_integrate(st, pot, 20.0, 0.1);
  double speed = 0.0;
  for (const auto& x : run.x) speed = std::max(speed, std::abs(rs::cylinder_speed_defect(x, pot)));
  Vec st0 = Vec::Zero(9);
  st0 << 0.0, 0.0, 0.0, 0.7, 0.0, 0.0, 0.0, 0.0, 0.0;
  const rs::CylinderRun free0 = rs::cylinder_integrate(st0, rs::CylinderPotential{}, 5.0, 1.0);
  const double tau0 = free0.x.back()[8];
  check("11 cylinder unit speed and massless proper time", speed <= 1e-8 && tau0 == 0.0,
        fmt2("max speed defect %.3g, tau(m=0) = %g", speed, tau0));
}

// ---------------------------------------------------------------------------------------------
void crit12() {
  md::OscParams p;
  p.omega0 = 0.01;
  p.epsilon = 1.0;
  p.Nmax = 64;
  CVec s0 = CVec::Zero(p.Nmax + 2);
  s0[0] = 1.0;
  s0[1] = 1.0;
  const auto prob = complex_problem([p](const CVec& s) { return md::cs_eom(s, p); },
                                    [](const CVec& s) { return std::abs(md::osc_wavefunction(s).first); }, p.floor);
  const double T = 20000.0;
  const cd::Trajectory tr = cd::integrate(prob, pack(s0), 0.0, T, tol_opts(1e-10, 10.0));
  std::vector<double> t, logr, ph;
  for (std::size_t k = 0; k < tr.size(); ++k)
    if (tr.t[k] >= 100.0) {
      t.push_back(tr.t[k]);
      const cplx z(tr.x[k][0], tr.x[k][1]);
      logr.push_back(std::log(std::abs(z)));
      ph.push_back(std::arg(z));
    }
  const double n = static_cast<double>(t.size());
  double st = 0, sl = 0, stt = 0, stl = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    st += t[k];
    sl += logr[k];
    stt += t[k] * t[k];
    stl += t[k] * logr[k];
  }
  const double rate = -(n * stl - st * sl) / (n * stt - st * st);
  const double freq = an::action_rate(t, ph);
  const auto [f_exp, d_exp] = md::low_freq_coefficients(p.omega0, p.epsilon);
  check("12 low-frequency damping omega0^2/8eps", std::abs(rate - d_exp) / d_exp <= 0.25,
        fmt2("measured %.4g vs %.4g", rate, d_exp));
  check("12 low-frequency frequency omega0/2", std::abs(freq - f_exp) / f_exp <= 0.05,
        fmt2("measured %.6g vs %.6g", freq, f_exp));
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::pair<std::string, std::function<void()>>> crits{
      {1, {"oscillator spectrum", crit1}},     {2, {"g representation oracle", crit2}},
      {3, {"matrix model", crit3}},            {4, {"fermion Pauli structure", crit4}},
      {5, {"spin", crit5}},                    {6, {"massless particle", crit6}},
      {7, {"structural identities", crit7}},   {8, {"quantization", crit8}},
      {9, {"Hamilton-Jacobi", crit9}},         {10, {"retraction", crit10}},
      {11, {"relativity toolkit", crit11}},    {12, {"low-frequency oscillator", crit12}},
  };
  const std::map<int, double> budget{{1, 10}, {2, 5}, {3, 60}, {4, 120}, {5, 120}, {6, 10}};
  std::set<int> chosen;
  for (int i = 1; i < argc; ++i) chosen.insert(std::stoi(argv[i]));
  if (chosen.empty())
    for (const auto& [k, v] : crits) chosen.insert(k);
  for (int k : chosen) {
    const auto it = crits.find(k);
    if (it == crits.end()) {
      std::fprintf(stderr, "unknown criterion %d\n", k);
      return 2;
    }
    std::printf("== criterion %d: %s\n", k, it->second.first.c_str());
    const auto t0 = std::chrono::steady_clock::now();
    try {
      it->second.second();
    } catch (const std::exception& e) {
      check(std::to_string(k) + " completed without error", false, e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (const auto b = budget.find(k); b != budget.end())
      check(std::to_string(k) + " runtime", secs < b->second, fmt2("%.2f s (budget %g s)", secs, b->second));
    else
      std::printf("      runtime %.2f s\n", secs);
  }
  std::printf("%d failure(s)\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
