#include "cdlab/models/simple.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "cdlab/errors.hpp"

namespace cdlab::models {

namespace {

// Omega for interleaved canonical pairs (p, q): Omega_pq = 1.
Mat canonical_omega(int dim) {
  Mat W = Mat::Zero(dim, dim);
  for (int k = 0; k < dim; k += 2) {
    W(k, k + 1) = 1.0;
    W(k + 1, k) = -1.0;
  }
  return W;
}

CdSystem canonical(std::string name, int dim, double kappa) {
  CdSystem s;
  s.name = std::move(name);
  s.dim = dim;
  s.kappa = kappa;
  s.omega = [dim](const Vec&, double) { return canonical_omega(dim); };
  return s;
}

}  // namespace

CdSystem euler_system(double kappa) {
  CdSystem s = canonical("euler", 2, kappa);
  s.alpha = [](const Vec& x, double) { return Vec{{0.0, x[0]}}; };
  s.hamiltonian = [](const Vec&) { return 0.0; };
  s.quasi_integrals = {{"p", [](const Vec& x) { return x[0]; }}};
  return s;
}

CdSystem pq_system(double kappa) {
  CdSystem s = canonical("pq", 2, kappa);
  s.alpha = [kappa](const Vec& x, double) { return Vec{{x[1] / kappa, x[0] + x[0] / kappa}}; };
  s.hamiltonian = [](const Vec& x) { return x[0] * x[1]; };
  return s;
}

CdSystem toy_oscillator(const ToyParams& p) {
  CdSystem s = canonical("toy_oscillator", 2, p.kappa);
  s.alpha = [p](const Vec& x, double) { return Vec{{p.omega0 / p.kappa, x[0] - p.hbar}}; };
  s.hamiltonian = [p](const Vec& x) { return p.omega0 * x[0]; };
  s.quasi_integrals = {{"I-hbar", [p](const Vec& x) { return x[0] - p.hbar; }}};
  s.angle_coords = {1};
  return s;
}

double toy_action(const ToyParams& p, double I0, double t) {
  return p.hbar + (I0 - p.hbar) * std::exp(-p.kappa * t);
}

CdSystem raindrop(double kappa) {
  CdSystem s = canonical("raindrop", 2, kappa);
  s.alpha = [kappa](const Vec& x, double) { return Vec{{x[0] / kappa, x[0] + 1.0 / kappa}}; };
  s.hamiltonian = [](const Vec& x) { return 0.5 * x[0] * x[0] + x[1]; };
  s.quasi_integrals = {{"p+1/kappa", [kappa](const Vec& x) { return x[0] + 1.0 / kappa; }}};
  return s;
}

CdSystem monopole(const MonopoleParams& p) {
  CdSystem s = canonical("monopole", 2, p.kappa);
  s.alpha = [p](const Vec& x, double) {
    const double pr = x[0], r = x[1];
    return Vec{{pr / (p.m * p.kappa), pr - p.h * p.h / (p.m * r * r * r * p.kappa)}};
  };
  s.guard = [](const Vec& x) { return x[1]; };
  s.hamiltonian = [p](const Vec& x) {
    return x[0] * x[0] / (2 * p.m) + p.h * p.h / (2 * p.m * x[1] * x[1]);
  };
  return s;
}

double monopole_drift_radius(const MonopoleParams& p, double r0, double dt) {
  return std::pow(std::pow(r0, 4) + 4.0 * p.h * p.h * dt / (p.kappa * p.m * p.m), 0.25);
}

CdSystem torus_system(const TorusParams& p) {
  const int n = static_cast<int>(p.h.size());
  CdSystem s = canonical("torus", 2 * n, p.kappa);
  s.alpha = [p, n](const Vec& x, double) {
    Vec I(n);
    for (int k = 0; k < n; ++k) I[k] = x[2 * k];
    const Vec g = p.dH(I);
    Vec a(2 * n);
    for (int k = 0; k < n; ++k) {
      a[2 * k] = g[k] / p.kappa;
      a[2 * k + 1] = x[2 * k] - p.h[k];
    }
    return a;
  };
  s.hamiltonian = [p, n](const Vec& x) {
    Vec I(n);
    for (int k = 0; k < n; ++k) I[k] = x[2 * k];
    return p.H(I);
  };
  for (int k = 0; k < n; ++k) {
    s.quasi_integrals.push_back({"I" + std::to_string(k + 1) + "-h",
                                 [p, k](const Vec& x) { return x[2 * k] - p.h[k]; }});
    s.angle_coords.push_back(2 * k + 1);
  }
  return s;
}

TorusParams torus_quadratic(double kappa, double h) {
  TorusParams p;
  p.kappa = kappa;
  p.h = Vec::Constant(1, h);
  p.H = [](const Vec& I) { return 0.5 * I.squaredNorm(); };
  p.dH = [](const Vec& I) { return I; };
  p.d2H = [](const Vec& I) { return Mat::Identity(I.size(), I.size()); };
  return p;
}

Vec torus_phase_shift(const TorusParams& p, const Vec& I) {
  const int n = static_cast<int>(p.h.size());
  Vec d = Vec::Zero(n);
  const Vec dI = I - p.h;
  boost::math::quadrature::exp_sinh<double> integ;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto f = [&](double tau) {
        if (tau == 0.0) return 0.0;
        const Vec It = p.h + std::exp(-p.kappa * tau) * dI;
        return tau * std::exp(-p.kappa * tau) * p.d2H(It)(i, j);
      };
      d[i] += p.kappa * dI[j] * integ.integrate(f, 0.0, std::numeric_limits<double>::infinity());
    }
  return d;
}

CdSystem circle_particle(const CircleParams& p) {
  CdSystem s = canonical("circle_particle", 2, p.kappa);
  s.alpha = [p](const Vec& x, double) { return Vec{{x[0] / (p.m * p.kappa), x[0] - p.h}}; };
  s.hamiltonian = [p](const Vec& x) { return x[0] * x[0] / (2 * p.m); };
  s.quasi_integrals = {{"p-h", [p](const Vec& x) { return x[0] - p.h; }}};
  s.angle_coords = {1};
  return s;
}

CdSystem forced_oscillator(const ForcedParams& p) {
  CdSystem s = canonical("forced_oscillator", 4, p.kappa);
  // state (p, q, I, phi)
  s.alpha = [p](const Vec& x, double) {
    const double P = x[0], q = x[1], phi = x[3];
    const double k = p.kappa;
    return Vec{{P / (p.m * k), P + (p.k * q + p.f * std::cos(phi)) / k, p.omega / k,
                x[2] - p.f * q * std::sin(phi) / k}};
  };
  s.hamiltonian = [p](const Vec& x) {
    return x[0] * x[0] / (2 * p.m) + 0.5 * p.k * x[1] * x[1] + p.omega * x[2] +
           p.f * x[1] * std::cos(x[3]);
  };
  s.angle_coords = {3};
  return s;
}

double nonauto_h(const NonautoParams& p, double t) {
  return p.h0 + (p.h1 - p.h0) / (1.0 + std::exp(-(t - p.t_center) / p.width));
}

double nonauto_hdot(const NonautoParams& p, double t) {
  const double s = 1.0 / (1.0 + std::exp(-(t - p.t_center) / p.width));
  return (p.h1 - p.h0) * s * (1.0 - s) / p.width;
}

CdSystem nonautonomous_oscillator(const NonautoParams& p) {
  CdSystem s = canonical("nonautonomous_oscillator", 2, p.kappa);
  s.alpha = [p](const Vec& x, double t) { return Vec{{p.omega0 / p.kappa, x[0] - nonauto_h(p, t)}}; };
  s.hamiltonian = [p](const Vec& x) { return p.omega0 * x[0]; };
  s.angle_coords = {1};
  return s;
}

double nonauto_attractor(const NonautoParams& p, double t) {
  // e^{-kappa t} int_{-inf}^t e^{kappa tau} hdot dtau = int_0^inf e^{-kappa u} hdot(t - u) du
  const double span = 40.0 * p.width + 40.0 / p.kappa;
  auto f = [&](double u) { return std::exp(-p.kappa * u) * nonauto_hdot(p, t - u); };
  const double val = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, span, 15, 1e-14);
  return nonauto_h(p, t) - val;
}

CdSystem constants_example(const ConstantsParams& p) {
  CdSystem s = canonical("constants_example", 4, p.kappa);
  s.alpha = [p](const Vec& x, double) {
    return Vec{{0.0, x[0] - p.h, p.omega0 / p.kappa, x[2] - p.h}};
  };
  s.hamiltonian = [p](const Vec& x) { return p.omega0 * x[2]; };
  s.angle_coords = {1, 3};
  return s;
}

KahlerSystem kahler_log(double epsilon, cplx c) {
  KahlerSystem ks;
  ks.name = "kahler_log";
  ks.n = 1;
  ks.epsilon = epsilon;
  ks.U = [c](const CVec& z) { return std::norm(z[0]) + 2.0 * (c * std::log(z[0])).real(); };
  ks.H = [](const CVec&) { return 0.0; };
  ks.dU_bar = [c](const CVec& z) { return CVec::Constant(1, z[0] + std::conj(c / z[0])); };
  ks.dH_bar = [](const CVec&) { return CVec::Zero(1); };
  ks.metric = [](const CVec&) { return CMat::Identity(1, 1); };
  ks.guard = [](const CVec& z) { return std::abs(z[0]); };
  return ks;
}

Vec simple_model_eom(SimpleModel id, const SimpleParams& p, const Vec& x, double t) {
  const double k = p.kappa;
  switch (id) {
    case SimpleModel::raindrop:
      return Vec{{-1.0 - k * x[0], x[0]}};
    case SimpleModel::monopole: {
      const auto& m = p.monopole;
      const double r = x[1];
      if (!(r > 1e-10)) throw Error(Errc::SingularPoint, "monopole r -> 0");
      return Vec{{m.h * m.h / (m.m * r * r * r) - m.kappa * x[0], x[0] / m.m}};
    }
    case SimpleModel::torus: {
      const auto& tp = p.torus;
      const int n = static_cast<int>(tp.h.size());
      Vec I(n);
      for (int j = 0; j < n; ++j) I[j] = x[2 * j];
      const Vec g = tp.dH(I);
      Vec d(2 * n);
      for (int j = 0; j < n; ++j) {
        d[2 * j] = -tp.kappa * (x[2 * j] - tp.h[j]);
        d[2 * j + 1] = g[j];
      }
      return d;
    }
    case SimpleModel::circle_particle: {
      const auto& c = p.circle;
      return Vec{{-c.kappa * (x[0] - c.h), x[0] / c.m}};
    }
    case SimpleModel::forced_oscillator: {
      const auto& f = p.forced;
      return Vec{{-f.kappa * x[0] - f.k * x[1] - f.f * std::cos(x[3]), x[0] / f.m,
                  -f.kappa * x[2] + f.f * x[1] * std::sin(x[3]), f.omega}};
    }
    case SimpleModel::nonautonomous_oscillator: {
      const auto& n = p.nonauto;
      return Vec{{-n.kappa * (x[0] - nonauto_h(n, t)), n.omega0}};
    }
  }
  throw Error(Errc::InvalidArgument, "unknown simple model");
}

}  // namespace cdlab::models
