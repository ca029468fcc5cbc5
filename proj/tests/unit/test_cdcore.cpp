#include <random>

#include "cdlab/cdcore/field.hpp"
#include "cdlab/cdcore/identities.hpp"
#include "cdlab/cdcore/integrator.hpp"
#include "cdlab/errors.hpp"
#include "cdlab/models/registry.hpp"
#include "cdlab/models/simple.hpp"
#include "support.hpp"

using namespace cdlab;
using namespace cdlab::cdcore;
namespace md = cdlab::models;

TEST_SUITE("cdcore") {
  TEST_CASE("euler system field is -kappa p d/dp") {
    const CdSystem sys = md::euler_system(0.7);
    Vec x(2);
    x << 2.0, 3.0;
    const Vec v = dynamic_field(sys, x);
    CHECK(v[0] == doctest::Approx(-1.4).epsilon(1e-9));
    CHECK(std::abs(v[1]) < 1e-9);
  }

  TEST_CASE("toy oscillator field") {
    const CdSystem sys = md::toy_oscillator({0.5, 2.0, 1.0});
    Vec x(2);
    x << 3.0, 0.4;
    const Vec v = dynamic_field(sys, x);
    CHECK(v[0] == doctest::Approx(0.5 - 1.5).epsilon(1e-9));
    CHECK(v[1] == doctest::Approx(2.0).epsilon(1e-9));
  }

  TEST_CASE("zero of alpha is a stationary point") {
    const CdSystem sys = md::euler_system(1.3);
    Vec x(2);
    x << 0.0, 5.0;
    CHECK(dynamic_field(sys, x).norm() < 1e-12);
  }

  TEST_CASE("canonical bracket {p, q} = +1") {
    Mat W(2, 2);
    W << 0, 1, -1, 0;
    Vec dp(2), dq(2);
    dp << 1, 0;
    dq << 0, 1;
    CHECK(poisson_bracket(W, dp, dq) == doctest::Approx(1.0));
    CHECK(poisson_bracket(W, dq, dp) == doctest::Approx(-1.0));
  }

  TEST_CASE("kahler field for U = |z|^2, H = omega0 |z|^2") {
    const double eps = 0.3, w0 = 1.5;
    const KahlerSystem ks = kahler_from_potential(
        "quad", 1, eps, [](const CVec& z) { return std::norm(z[0]); },
        [w0](const CVec& z) { return w0 * std::norm(z[0]); });
    CVec z(1);
    z[0] = cplx(0.7, 0.2);
    const CVec dz = kahler_field(ks, z);
    CHECK(std::abs(dz[0] - cplx(-eps, w0) * z[0]) < 1e-7);
  }

  TEST_CASE("kahler field vanishes at a critical point of U with H = 0") {
    const KahlerSystem ks = md::kahler_log(0.5, cplx(-1.0, 0.0));
    CVec z(1);
    z[0] = cplx(1.0, 0.0);
    CHECK(std::abs(kahler_field(ks, z)[0]) < 1e-7);
  }

  TEST_CASE("kahler log model converges to |z| = sqrt(-Re c)") {
    const KahlerSystem ks = md::kahler_log(0.5, cplx(-2.0, 0.7));
    CVec z0(1);
    z0[0] = cplx(0.4, 0.3);
    IntegrateOptions o;
    o.abs_tol = o.rel_tol = 1e-11;
    const Vec xT = integrate_to(make_problem(ks), pack(z0), 0.0, 60.0, o);
    CHECK(std::abs(unpack(xT)[0]) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  }

  TEST_CASE("kahler field agrees with the real defining-form route") {
    const KahlerSystem ks = md::kahler_log(0.5, cplx(-1.0, 0.4));
    const CdSystem cd = kahler_as_cd(ks);
    CVec z(1);
    z[0] = cplx(0.8, -0.5);
    CHECK((dynamic_field(cd, pack(z)) - pack(kahler_field(ks, z))).norm() < 1e-9);
  }

  TEST_CASE("toy oscillator relaxes as I(t) = 1 + 2 e^{-kappa t}") {
    const CdSystem sys = md::toy_oscillator({1.0, 1.0, 1.0});
    Vec x0(2);
    x0 << 3.0, 0.0;
    const Trajectory tr = integrate(sys, x0, 0.0, 5.0, 1e-11);
    for (std::size_t i = 0; i < tr.size(); i += 7)
      CHECK(std::abs(tr.x[i][0] - (1.0 + 2.0 * std::exp(-tr.t[i]))) < 1e-8);
  }

  TEST_CASE("raindrop momentum p(t) = (p0 + 1) e^{-t} - 1") {
    const CdSystem sys = md::raindrop(1.0);
    Vec x0(2);
    x0 << 0.5, 0.0;
    const Trajectory tr = integrate(sys, x0, 0.0, 4.0, 1e-11);
    for (std::size_t i = 0; i < tr.size(); i += 5)
      CHECK(std::abs(tr.x[i][0] - (1.5 * std::exp(-tr.t[i]) - 1.0)) < 1e-8);
  }

  TEST_CASE("stationary start stays constant") {
    const CdSystem sys = md::euler_system(1.0);
    Vec x0(2);
    x0 << 0.0, 2.0;
    const Trajectory tr = integrate(sys, x0, 0.0, 10.0, 1e-10);
    CHECK((tr.back() - x0).norm() < 1e-14);
  }

  TEST_CASE("contraction defect of the linear flows") {
    Vec x0(2);
    x0 << 0.8, -0.3;
    Vec a(2), b(2);
    a << 1.0, 0.2;
    b << -0.4, 1.0;
    CHECK(contraction_defect(md::euler_system(1.0), x0, 3.0, {{a, b}}, 1e-12) < 1e-10);
    CHECK(contraction_defect(md::pq_system(1.0), x0, 3.0, {{a, b}}, 1e-12) < 1e-9);
  }

  TEST_CASE("contraction defect on the matrix model") {
    const md::RegisteredSystem r = md::registered_system("matrix", 1.0);
    std::mt19937_64 rng(3);
    const Vec x = r.sample(rng);
    const int n = r.sys.dim;
    Vec a = Vec::Zero(n), b = Vec::Zero(n);
    a[0] = 1.0;
    b[1] = 1.0;
    CHECK(contraction_defect(r.sys, x, 2.0, {{a, b}}, 1e-10) < 1e-6);
  }

  TEST_CASE("zero bracket pair is rejected") {
    Vec x0(2);
    x0 << 0.8, -0.3;
    Vec a(2);
    a << 1.0, 0.0;
    CHECK_THROWS_AS(contraction_defect(md::euler_system(1.0), x0, 1.0, {{a, a}}), Error);
  }

  TEST_CASE("raindrop identities with F = G = H") {
    const CdSystem sys = md::raindrop(1.0);
    const ScalarFn H = [](const Vec& x) { return 0.5 * x[0] * x[0] + x[1]; };
    Vec x(2);
    x << 0.7, -1.2;
    const auto r = identity_residuals(sys, x, H, H);
    CHECK(r.at("null_alpha") <= 1e-9);
    CHECK(r.at("field_derivative") <= 1e-7);
    CHECK(r.at("cartan_contraction") <= 1e-7);
  }

  TEST_CASE("Leibniz identity on the matrix model with random quadratics") {
    const md::RegisteredSystem r = md::registered_system("matrix", 1.0);
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    const int n = r.sys.dim;
    Mat M = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M(i, j) = g(rng);
    M = 0.5 * (M + M.transpose()).eval();
    Vec b(n);
    for (int i = 0; i < n; ++i) b[i] = g(rng);
    const ScalarFn F = [M](const Vec& x) { return 0.5 * x.dot(M * x); };
    const ScalarFn G = [b](const Vec& x) { return b.dot(x); };
    for (int k = 0; k < 5; ++k) CHECK(identity_residuals(r.sys, r.sample(rng), F, G).at("bracket_leibniz") <= 1e-6);
  }

  TEST_CASE("a non-identity is detected") {
    CdSystem sys = md::raindrop(1.0);
    const CdSystem good = sys;
    // a field that is not kappa Omega^{-1} alpha breaks the Cartan identity
    sys.alpha = [good](const Vec& x, double t) {
      Vec a = good.alpha(x, t);
      a[0] += 0.3 * x[1] * x[1];
      return a;
    };
    sys.omega = [good](const Vec& x, double t) { return omega_at(good, x, t); };
    const ScalarFn F = [](const Vec& x) { return x[0]; };
    Vec x(2);
    x << 0.7, -1.2;
    CHECK(identity_residuals(sys, x, F, F).at("cartan_contraction") > 1e-3);
  }

  TEST_CASE("raindrop quasi-integral rate") {
    const CdSystem sys = md::raindrop(1.0);
    Vec x0(2);
    x0 << 2.0, 0.0;
    const Trajectory tr = integrate(sys, x0, 0.0, 10.0, 1e-12);
    const double rate = quasi_integral_rate(tr, [](const Vec& x) { return x[0] + 1.0; });
    CHECK(rate == doctest::Approx(-1.0).epsilon(1e-6));
  }

  TEST_CASE("quasi-integral on a limit cycle vanishes") {
    const CdSystem sys = md::toy_oscillator({1.0, 1.0, 1.0});
    Vec x0(2);
    x0 << 1.0, 0.0;
    const Trajectory tr = integrate(sys, x0, 0.0, 10.0, 1e-10);
    try {
      (void)quasi_integral_rate(tr, [](const Vec& x) { return x[0] - 1.0; });
      FAIL("expected QVanishes");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::QVanishes);
    }
  }

  TEST_CASE("potential rate for U = |z|^2 at z = 1 is -2 eps") {
    const double eps = 0.25;
    const KahlerSystem ks = kahler_from_potential(
        "quad", 1, eps, [](const CVec& z) { return std::norm(z[0]); }, [](const CVec&) { return 0.0; });
    CVec z(1);
    z[0] = 1.0;
    const PotentialRate pr = potential_rate_terms(ks, z);
    CHECK(pr.grad_sq == doctest::Approx(2.0).epsilon(1e-7));
    CHECK(potential_rate(ks, z) == doctest::Approx(-2.0 * eps).epsilon(1e-7));
  }

  TEST_CASE("rotation-invariant potential commutes with the oscillator Hamiltonian") {
    const double w0 = 1.3;
    const int n = 3;
    const KahlerSystem ks = kahler_from_potential(
        "cs", 1, 0.1, [n](const CVec& z) { return std::norm(z[0]) - n * std::log(std::norm(z[0])); },
        [w0](const CVec& z) { return w0 * std::norm(z[0]); });
    CVec z(1);
    z[0] = cplx(0.9, 1.4);
    CHECK(std::abs(potential_rate_terms(ks, z).bracket) < 1e-9);
  }

  TEST_CASE("potential rate equals dU/dt along the flow") {
    const KahlerSystem ks = md::kahler_log(0.4, cplx(-1.0, 0.6));
    CVec z(1);
    z[0] = cplx(0.5, 0.8);
    const CVec dz = kahler_field(ks, z);
    const double h = 1e-5;
    const double dU = (ks.U(z + h * dz) - ks.U(z - h * dz)) / (2 * h);
    CHECK(potential_rate(ks, z) == doctest::Approx(dU).epsilon(1e-6));
  }
}
