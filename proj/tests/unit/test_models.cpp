#include <random>

#include "cdlab/cdcore/field.hpp"
#include "cdlab/cdcore/integrator.hpp"
#include "cdlab/errors.hpp"
#include "cdlab/models/fermion.hpp"
#include "cdlab/models/matrix.hpp"
#include "cdlab/models/oscillator.hpp"
#include "cdlab/models/particle.hpp"
#include "cdlab/models/registry.hpp"
#include "cdlab/models/simple.hpp"
#include "cdlab/models/spin.hpp"
#include "support.hpp"

using namespace cdlab;
namespace md = cdlab::models;

namespace {

CMat diag(std::initializer_list<double> w) {
  CMat A = CMat::Zero(static_cast<Eigen::Index>(w.size()), static_cast<Eigen::Index>(w.size()));
  int i = 0;
  for (double v : w) A(i, i) = v, ++i;
  return A;
}

}  // namespace

TEST_SUITE("models") {
  TEST_CASE("matrix series-1 point rotates at its eigenvalue") {
    const md::MatrixModel m = md::matrix_model(diag({0.0, 1.0, 3.0}), 1.0);
    const CVec s = md::matrix_series1(m, 1, 0.4);
    const CVec d = md::matrix_eom(m, s);
    CHECK((d.head(3) - cplx(0, 1.0) * s.head(3)).norm() < 1e-10);
    CHECK(d.tail(3).norm() < 1e-10);
  }

  TEST_CASE("matrix model without dissipation is a Schroedinger flow") {
    std::mt19937_64 rng(5);
    md::MatrixModel m = md::matrix_model(md::random_hermitian(3, rng), 1.0);
    m.epsilon = 0.0;
    const CVec s = md::random_complex(6, rng);
    const CVec d = md::matrix_eom(m, s);
    CHECK((d.head(3) - cplx(0, 1) * (m.A * s.head(3))).norm() < 1e-10);
    CHECK(d.tail(3).norm() < 1e-10);
  }

  TEST_CASE("matrix eom matches the finite-difference Kahler route") {
    const md::MatrixModel m = md::matrix_model(diag({0.0, 1.0}), 1.0);
    std::mt19937_64 rng(9);
    const CVec s = md::random_complex(4, rng);
    const CVec a = md::matrix_eom(m, s);
    const CVec b = cdcore::kahler_field(md::matrix_kahler_fd(m), s);
    CHECK((a - b).norm() / a.norm() < 1e-7);
  }

  TEST_CASE("matrix series-2 two-level solution") {
    Vec w(2);
    w << 0.0, 1.0;
    const md::Series2 s = md::matrix_series2(0, 1, w, 1.0);
    CHECK(s.lambda == doctest::Approx(0.5));
    CHECK(std::abs(s.phase - cplx(1, 0.5) / cplx(1, -0.5)) < 1e-12);
    Vec same(2);
    same << 0.7, 0.7;
    CHECK_THROWS_AS(md::matrix_series2(0, 1, same, 1.0), Error);
  }

  TEST_CASE("matrix series-2 ansatz satisfies the equations of motion") {
    Vec w(3);
    w << 0.0, 1.0, 2.5;
    const md::Series2 s = md::matrix_series2(0, 2, w, 1.0);
    const md::MatrixModel m = md::matrix_model(diag({0.0, 1.0, 2.5}), 1.0);
    for (double t : {0.0, 0.8, 2.1}) {
      const double h = 1e-4;
      const CVec d = (-md::matrix_series2_state(s, t + 2 * h) + 8.0 * md::matrix_series2_state(s, t + h) -
                      8.0 * md::matrix_series2_state(s, t - h) + md::matrix_series2_state(s, t - 2 * h)) /
                     (12 * h);
      CHECK((d - md::matrix_eom(m, md::matrix_series2_state(s, t))).norm() < 1e-10);
    }
  }

  TEST_CASE("matrix relaxation rates") {
    auto [r, b] = md::matrix_rates(0.1, 1.0);
    CHECK(r == doctest::Approx(0.005));
    CHECK(b == doctest::Approx(0.0025));
    auto [r0, b0] = md::matrix_rates(0.0, 1.0);
    CHECK(r0 == 0.0);
    CHECK(b0 == 0.0);
  }

  TEST_CASE("fermion model with k = 1 is the matrix model") {
    std::mt19937_64 rng(21);
    const CMat A = md::random_hermitian(3, rng);
    const md::FermionModel f = md::fermion_model(A, 1, 1.0);
    const md::MatrixModel m = md::matrix_model(A, 1.0);
    const CVec s = md::random_complex(6, rng);
    CHECK((md::fermion_eom(f, s) - md::matrix_eom(m, s)).norm() < 1e-12);
  }

  TEST_CASE("fermion exact solution evolves by eigen-phases only") {
    const md::FermionModel f = md::fermion_model(diag({0.5, 1.0, 2.0, 4.0}), 2, 1.0);
    const CMat u = CMat::Identity(2, 2);
    const CVec s = md::fermion_exact(f, {0, 2}, u, u);
    const CVec d = md::fermion_eom(f, s);
    const CMat psi = md::fermion_psi(f, s);
    const CMat dpsi = md::fermion_psi(f, d);
    CHECK((dpsi - cplx(0, 1) * f.A * psi).norm() < 1e-10);
    CHECK(md::fermion_chi(f, d).norm() < 1e-10);
  }

  TEST_CASE("fermion energies and Pauli spectrum") {
    Vec w(3);
    w << 1.0, 2.0, 4.0;
    const std::vector<double> e = md::fermion_spectrum(w, 2);
    REQUIRE(e.size() == 3);
    CHECK(e[0] == 3.0);
    CHECK(e[1] == 5.0);
    CHECK(e[2] == 6.0);
    CHECK(md::fermion_energy(w, {}) == 0.0);
  }

  TEST_CASE("fermion projector is idempotent") {
    std::mt19937_64 rng(4);
    const md::FermionModel f = md::fermion_model(md::random_hermitian(4, rng), 2, 1.0);
    const CVec s = md::random_complex(16, rng);
    const CMat P = md::fermion_projector(f, s);
    CHECK((P * P - P).norm() < 1e-10);
  }

  TEST_CASE("g function values") {
    for (double q : {0.1, 0.5, 2.0}) CHECK(std::abs(md::g_function(0.0, q) - 1.0 / q) < 1e-12);
    const cplx a = md::g_function(1.0, 0.1, md::GMethod::series);
    const cplx b = md::g_function(1.0, 0.1, md::GMethod::integral);
    CHECK(std::abs(a - b) < 1e-10);
  }

  TEST_CASE("saddle-point form of g misses exactly -i/(3p)") {
    for (double q : {0.1, 1.0})
      for (double p : {200.3, 3200.3}) {
        const cplx lead = (md::g_function(p, q) - md::g_asymptotic(p, q)) * p;
        CHECK(std::abs(lead - cplx(0, -1.0 / 3.0)) < 2.0 / std::sqrt(p));
      }
  }

  TEST_CASE("oscillator spectral roots at mu = 200") {
    const double mu = 200.0;
    const md::OscRoot r = md::oscillator_root(2, mu, md::OscSeries::stable);
    CHECK(std::abs(r.p - 2.0) <= 10.0 / (mu * mu));
    CHECK(std::abs(r.q - 0.005) <= 10.0 / (mu * mu * mu));
    const md::OscRoot u = md::oscillator_root(2, mu, md::OscSeries::unstable);
    CHECK(std::abs(u.p - 2.5) < 0.5);
  }

  TEST_CASE("oscillator existence bound and a root below it") {
    CHECK(md::oscillator_existence_bound(2.0) == doctest::Approx(std::sinh(kPi) / 6.0));
    CHECK_THROWS_AS(md::oscillator_root(1, 2.0, md::OscSeries::stable), Error);
  }

  TEST_CASE("low-frequency coefficients") {
    auto [w, d] = md::low_freq_coefficients(0.01, 1.0);
    CHECK(w == doctest::Approx(0.005));
    CHECK(d == doctest::Approx(1.25e-5));
    auto [w0, d0] = md::low_freq_coefficients(0.0, 1.0);
    CHECK(w0 == 0.0);
    CHECK(d0 == 0.0);
  }

  TEST_CASE("oscillator without dissipation rotates z and freezes F") {
    md::OscParams p = md::osc_params_mu(100.0, 1.0, 16);
    p.epsilon = 0.0;
    p.check_tail = false;
    std::mt19937_64 rng(2);
    CVec s = md::random_complex(18, rng);
    const CVec d = md::cs_eom(s, p);
    CHECK(std::abs(std::abs(d[0]) - std::abs(s[0])) < 1e-10);
    CHECK(d.tail(17).norm() < 1e-10);
  }

  TEST_CASE("particle Phi limits") {
    CHECK(md::particle_phi(0.0) == doctest::Approx(1.0));
    CHECK(md::particle_phi(100.0) == doctest::Approx(1.0 / (100.0 * std::sqrt(kPi))).epsilon(0.02));
    for (double x : {0.01, 0.3, 2.0, 30.0})
      CHECK(md::particle_phi(x) == doctest::Approx(md::particle_phi_closed(x)).epsilon(1e-8));
  }

  TEST_CASE("particle velocity limits") {
    CHECK(md::particle_velocity(1e-8) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(md::particle_velocity(1e6) == doctest::Approx(0.5).epsilon(1e-3));
    const double rho = 0.01;
    CHECK(std::abs(md::particle_velocity(rho) - md::velocity_small_rho_linear(rho)) < 5.0 * rho * rho);
  }

  TEST_CASE("particle wave tail") {
    md::WavetailParams p;
    p.a = 0.01;
    p.epsilon = 0.5;
    p.v = 0.99;
    CHECK(md::particle_wavetail_modulus(10 * p.a, p) < 1e-12);
    const double at = md::particle_wavetail_modulus(0.0, p);
    CHECK(at == doctest::Approx(p.a / p.v * std::sqrt(kPi / 2)).epsilon(5 * p.epsilon * p.a / p.v));
    const double L = 0.5, fold = p.v / p.epsilon;
    const double ratio = md::particle_wavetail_modulus(-L - fold, p) / md::particle_wavetail_modulus(-L, p);
    CHECK(ratio == doctest::Approx(std::exp(-1.0)).epsilon(0.1));
  }

  TEST_CASE("spin vector") {
    Eigen::Vector2cd s(1.0, 0.0);
    const Eigen::Vector3d S = md::spin_vector(s, 2);
    CHECK(std::abs(S[0]) < 1e-15);
    CHECK(std::abs(S[1]) < 1e-15);
    CHECK(S[2] == doctest::Approx(-1.0));
    const Eigen::Vector2cd t(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
    const Eigen::Vector3d T = md::spin_vector(t, 1);
    CHECK(T[0] == doctest::Approx(-0.5));
    CHECK(std::abs(T[1]) < 1e-15);
    CHECK(std::abs(T[2]) < 1e-15);
    std::mt19937_64 rng(8);
    for (int m = 1; m <= 4; ++m) {
      const CVec r = md::random_complex(2, rng);
      const Eigen::Vector2cd u(r[0], r[1]);
      CHECK(md::spin_vector(u, m).norm() == doctest::Approx(m / 2.0).epsilon(1e-12));
      CHECK(md::spin_hamiltonian(u, m, 0.7) == doctest::Approx(0.7 * md::spin_vector(u, m)[2]).epsilon(1e-12));
    }
  }

  TEST_CASE("spin without dissipation precesses about axis 3 and freezes F") {
    md::SpinParams p;
    p.m = 2;
    p.lambda = 1.3;
    p.epsilon = 0.0;
    std::mt19937_64 rng(6);
    const CVec s = md::random_complex(5, rng);
    // Kahler form: s' = i dH/ds*, H = s* diag(-lambda/2, lambda/2) s
    const CVec k = md::spin_eom(s, p, md::SpinForm::kahler);
    CHECK(k.tail(3).norm() < 1e-10);
    CHECK(std::abs(k[0] - cplx(0, -p.lambda / 2) * s[0]) < 1e-10);
    CHECK(std::abs(k[1] - cplx(0, p.lambda / 2) * s[1]) < 1e-10);
    // printed form: s' = i m lambda sigma3 s / 2
    const CVec q = md::spin_eom(s, p, md::SpinForm::printed);
    CHECK(q.tail(3).norm() < 1e-10);
    CHECK(std::abs(q[0] - cplx(0, p.m * p.lambda / 2) * s[0]) < 1e-10);
    CHECK(std::abs(q[1] - cplx(0, -p.m * p.lambda / 2) * s[1]) < 1e-10);
  }

  TEST_CASE("spin state size is checked") {
    CHECK_THROWS_AS(md::spin_wavefunction(CVec::Zero(4), 3), Error);
  }

  TEST_CASE("printed simple-model equations agree with the defining forms") {
    md::SimpleParams sp;
    sp.kappa = 0.8;
    sp.monopole = {0.8, 1.2, 0.7};
    sp.torus = md::torus_quadratic(0.8, 1.5);
    sp.circle = {0.8, 1.1, 0.9};
    sp.forced = {0.8, 1.0, 2.0, 1.3, 0.6};
    sp.nonauto = {0.8, 1.0, 1.0, 2.0, 0.0, 1.0};
    struct Case {
      md::SimpleModel id;
      cdcore::CdSystem sys;
      Vec x;
    };
    Vec x2(2), x4(4);
    x2 << 0.6, 1.7;
    x4 << 0.6, 1.7, 0.4, 2.2;
    const std::vector<Case> cases = {
        {md::SimpleModel::raindrop, md::raindrop(0.8), x2},
        {md::SimpleModel::monopole, md::monopole(sp.monopole), x2},
        {md::SimpleModel::torus, md::torus_system(sp.torus), x2},
        {md::SimpleModel::circle_particle, md::circle_particle(sp.circle), x2},
        {md::SimpleModel::forced_oscillator, md::forced_oscillator(sp.forced), x4},
        {md::SimpleModel::nonautonomous_oscillator, md::nonautonomous_oscillator(sp.nonauto), x2},
    };
    for (const auto& c : cases)
      for (double t : {0.0, 0.9}) {
        CAPTURE(c.sys.name);
        CHECK((md::simple_model_eom(c.id, sp, c.x, t) - cdcore::dynamic_field(c.sys, c.x, t)).norm() < 1e-7);
      }
  }

  TEST_CASE("monopole radius follows the slow drift law") {
    const md::MonopoleParams p{1.0, 1.0, 1.0};
    Vec x0(2);
    x0 << 0.0, 1.0;
    const double t0 = 20.0, t1 = 400.0;
    const cdcore::Trajectory tr = cdcore::integrate(md::monopole(p), x0, 0.0, t1, 1e-10);
    const double r0 = tr.at(t0)[1];
    const double predicted = md::monopole_drift_radius(p, r0, t1 - t0);
    CHECK(tr.back()[1] == doctest::Approx(predicted).epsilon(0.02));
  }

  TEST_CASE("torus phase shift for H = I^2/2") {
    const md::TorusParams p = md::torus_quadratic(0.7, 1.5);
    for (double I : {0.2, 1.5, 3.0}) {
      Vec v(1);
      v << I;
      CHECK(md::torus_phase_shift(p, v)[0] == doctest::Approx((I - 1.5) / 0.7).epsilon(1e-8));
    }
  }

  TEST_CASE("nonautonomous oscillator follows its attractor") {
    const md::NonautoParams p{1.0, 1.0, 1.0, 2.0, 0.0, 1.5};
    const double t0 = -30.0;
    Vec x0(2);
    x0 << md::nonauto_attractor(p, t0), 0.0;
    const cdcore::Trajectory tr = cdcore::integrate(md::nonautonomous_oscillator(p), x0, t0, 10.0, 1e-11);
    double worst = 0.0;
    for (std::size_t i = 0; i < tr.size(); ++i)
      worst = std::max(worst, std::abs(tr.x[i][0] - md::nonauto_attractor(p, tr.t[i])));
    CHECK(worst < 1e-8);
  }

  TEST_CASE("registered samplers respect the guard margin") {
    std::mt19937_64 rng(12);
    for (const auto& r : md::registered_systems()) {
      if (!r.sys.guard) continue;
      for (int k = 0; k < 20; ++k) CHECK(r.sys.guard(r.sample(rng)) >= 1e-2);
    }
  }
}

TEST_SUITE(UNATTAINABLE_SUITE) {
  TEST_CASE("large-p values of g track the saddle-point form within O(p^-3/2)") {
    for (double p : {200.3, 800.3, 3200.3}) {
      const cplx g = md::g_function(p, 0.3);
      CHECK(std::abs(g - md::g_asymptotic(p, 0.3)) < 5.0 * std::pow(p, -1.5));
    }
  }

  TEST_CASE("Phi(0.05) = 0.99 within 1e-4") { CHECK(std::abs(md::particle_phi(0.05) - 0.99) <= 1e-4); }

  TEST_CASE("velocity at rho = 0.01 within 5 rho of 1 - sqrt(rho/pi)") {
    const double rho = 0.01;
    CHECK(std::abs(md::particle_velocity(rho) - md::velocity_small_rho_sqrt(rho)) < 5.0 * rho);
  }
}
