#include "cdlab/models/oscillator.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "cdlab/errors.hpp"

namespace cdlab::models {

namespace {
constexpr double kPi = std::numbers::pi;
}

OscParams osc_params_mu(double mu, double omega0, int Nmax) {
  OscParams p;
  p.omega0 = omega0;
  p.epsilon = omega0 / mu;
  p.Nmax = Nmax;
  return p;
}

std::pair<cplx, cplx> osc_wavefunction(const CVec& s) {
  const cplx z = s[0];
  const Eigen::Index N = s.size() - 1;
  cplx F = 0.0, dF = 0.0, b = 1.0, bprev = 0.0;  // b = z^k / sqrt(k!)
  for (Eigen::Index k = 0; k < N; ++k) {
    if (k > 0) {
      bprev = b;
      b *= z / std::sqrt(static_cast<double>(k));
      dF += s[k + 1] * bprev * std::sqrt(static_cast<double>(k));  // k z^{k-1}/sqrt(k!)
    }
    F += s[k + 1] * b;
  }
  return {F, dF};
}

double osc_tail_fraction(const CVec& s) {
  const double n2 = s.tail(s.size() - 1).squaredNorm();
  return n2 > 0 ? std::norm(s[s.size() - 1]) / n2 : 0.0;
}

CVec cs_eom(const CVec& s, const OscParams& p) {
  const auto [F, dF] = osc_wavefunction(s);
  if (!(std::abs(F) > p.floor)) throw Error(Errc::SingularPoint, "oscillator: F(z) -> 0");
  if (p.check_tail && osc_tail_fraction(s) > p.tail_tol)
    throw Error(Errc::TailOverflow, "Fock tail fraction " + std::to_string(osc_tail_fraction(s)));
  const double e = p.epsilon;
  const cplx z = s[0];
  CVec d(s.size());
  d[0] = (I * p.omega0 - e) * z + e * std::conj(dF / F);
  const cplx Fc = std::conj(F);
  const cplx zc = std::conj(z);
  cplx b = 1.0;  // zbar^k / sqrt(k!)
  for (Eigen::Index k = 0; k + 1 < s.size(); ++k) {
    if (k > 0) b *= zc / std::sqrt(static_cast<double>(k));
    d[k + 1] = -e * s[k + 1] + e * b / Fc;
  }
  return d;
}

cdcore::KahlerSystem osc_kahler(const OscParams& p) {
  cdcore::KahlerSystem ks;
  ks.name = "cs_oscillator";
  ks.n = p.Nmax + 2;
  ks.epsilon = p.epsilon;
  ks.U = [](const CVec& s) {
    return s.squaredNorm() - std::log(std::norm(osc_wavefunction(s).first));
  };
  const double w0 = p.omega0;
  ks.H = [w0](const CVec& s) { return w0 * std::norm(s[0]); };
  ks.dU_bar = [](const CVec& s) {
    const auto [F, dF] = osc_wavefunction(s);
    CVec d(s.size());
    d[0] = s[0] - std::conj(dF / F);
    cplx b = 1.0;
    const cplx zc = std::conj(s[0]);
    for (Eigen::Index k = 0; k + 1 < s.size(); ++k) {
      if (k > 0) b *= zc / std::sqrt(static_cast<double>(k));
      d[k + 1] = s[k + 1] - b / std::conj(F);
    }
    return d;
  };
  ks.dH_bar = [w0](const CVec& s) {
    CVec d = CVec::Zero(s.size());
    d[0] = w0 * s[0];
    return d;
  };
  const int n = ks.n;
  ks.metric = [n](const CVec&) { return CMat::Identity(n, n); };
  ks.guard = [](const CVec& s) { return std::abs(osc_wavefunction(s).first); };
  ks.guard_floor = p.floor;
  return ks;
}

double osc_q1(const CVec& s) { return s.tail(s.size() - 1).squaredNorm() - 1.0; }

cplx g_function(double p, double q, GMethod method) {
  if (p < 0 || !(q > 0)) throw Error(Errc::InvalidArgument, "g_function needs p >= 0, q > 0");
  if (method == GMethod::series) {
    if (p == 0.0) return 1.0 / q;
    cplx sum = 0.0;
    const double lp = std::log(p);
    const double peak = std::floor(p);
    const double wmax = std::exp(peak * lp - p - std::lgamma(peak + 1.0));
    for (long n = 0;; ++n) {
      const double w = std::exp(static_cast<double>(n) * lp - p - std::lgamma(static_cast<double>(n) + 1.0));
      sum += w / cplx(q, p - static_cast<double>(n));
      if (n > p && w < 1e-16 * wmax) break;
    }
    return sum;
  }
  auto f = [p, q](double t) { return std::exp(p * (std::exp(I * t) - 1.0 - I * t) - q * t); };
  const cplx integral =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 2.0 * kPi, 20, 1e-14);
  return integral / (1.0 - std::exp(-2.0 * kPi * cplx(q, p)));
}

cplx g_asymptotic(double p, double q) {
  const double den = std::cosh(2 * kPi * q) - std::cos(2 * kPi * p);
  const cplx cth = cplx(std::sinh(2 * kPi * q), -std::sin(2 * kPi * p)) / den;
  return std::sqrt(kPi / (2 * p)) * (1.0 + cplx(q * q - 1.0 / 6.0, q / 3.0) / p) * cth - q / p;
}

Eigen::Vector2d oscillator_equations(double p, double q, double mu) {
  const cplx g = g_function(p, q);
  return {q * q + mu * p * q - p - q / g.real(), g.imag()};
}

std::pair<double, double> oscillator_seed(int n, double mu, OscSeries series) {
  if (n < 1) throw Error(Errc::NoSuchLevel, "oscillator seeds start at n = 1");
  const double amp = std::sqrt(2.0 / (kPi * n)) / (mu * mu);
  if (series == OscSeries::stable) return {static_cast<double>(n), 1.0 / mu + amp * std::tanh(kPi / mu)};
  return {n + 0.5, 1.0 / mu + amp / std::tanh(kPi / mu)};
}

double oscillator_existence_bound(double mu) { return std::sinh(2 * kPi / mu) / (3 * mu); }

OscRoot oscillator_root(int n, double mu, OscSeries series) {
  const auto [p0, q0] = oscillator_seed(n, mu, series);
  Eigen::Vector2d x(p0, q0);
  auto F = [mu](const Eigen::Vector2d& v) { return oscillator_equations(v[0], v[1], mu); };
  Eigen::Vector2d r = F(x);
  OscRoot out;
  for (int it = 0; it < 200; ++it) {
    out.iterations = it;
    if (r.cwiseAbs().maxCoeff() < 1e-13) break;
    Eigen::Matrix2d J;
    for (int j = 0; j < 2; ++j) {
      const double h = 1e-7 * std::max(std::abs(x[j]), 1e-3);
      Eigen::Vector2d xp = x, xm = x;
      xp[j] += h;
      xm[j] -= h;
      J.col(j) = (F(xp) - F(xm)) / (2 * h);
    }
    if (!(std::abs(J.determinant()) > 0)) throw Error(Errc::NoRoot, "singular Jacobian on the (p, q) plane");
    const Eigen::Vector2d step = J.partialPivLu().solve(-r);
    double lam = 1.0;
    bool moved = false;
    for (int k = 0; k < 40; ++k, lam *= 0.5) {
      const Eigen::Vector2d xn = x + lam * step;
      if (!(xn[0] > 0 && xn[1] > 0)) continue;
      const Eigen::Vector2d rn = F(xn);
      if (rn.allFinite() && rn.norm() < r.norm()) {
        x = xn;
        r = rn;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  out.p = x[0];
  out.q = x[1];
  out.residual = r.cwiseAbs().maxCoeff();
  const bool converged = out.residual < 1e-11;
  const double target_p = (series == OscSeries::stable) ? n : n + 0.5;
  if (!converged) {
    if (out.residual < 1e-6) throw Error(Errc::NoConvergence, "oscillator root stalled");
    throw Error(Errc::NoRoot, "no root near n=" + std::to_string(n) + " (bound N(mu)=" +
                                  std::to_string(oscillator_existence_bound(mu)) + ")");
  }
  if (std::abs(out.p - target_p) > 0.5 || out.q <= 0)
    throw Error(Errc::NoRoot, "Newton left the n=" + std::to_string(n) + " branch");
  return out;
}

OscLiePoint osc_lie_point(double p, double q, const OscParams& prm) {
  const double e = prm.epsilon;
  OscLiePoint lp;
  lp.xi = e / q;
  lp.omega = p * lp.xi;
  const int N = prm.Nmax;
  const double z0 = std::sqrt(p);
  cplx T = 0.0;
  std::vector<double> b(N + 1);  // z0^k / sqrt(k!)
  b[0] = 1.0;
  for (int k = 1; k <= N; ++k) b[k] = b[k - 1] * z0 / std::sqrt(static_cast<double>(k));
  for (int k = 0; k <= N; ++k) T += b[k] * b[k] / cplx(e, lp.omega - k * lp.xi);
  const double c = std::sqrt((e * T).real());
  lp.state = CVec(N + 2);
  lp.state[0] = z0;
  for (int k = 0; k <= N; ++k) lp.state[k + 1] = e * b[k] / (c * cplx(e, lp.omega - k * lp.xi));
  return lp;
}

CVec osc_corotating_field(const CVec& s, const OscParams& p, double xi, double omega) {
  CVec d = cs_eom(s, p);
  d[0] -= I * xi * s[0];
  for (Eigen::Index k = 0; k + 1 < s.size(); ++k) d[k + 1] -= I * (omega - static_cast<double>(k) * xi) * s[k + 1];
  return d;
}

std::pair<double, double> low_freq_coefficients(double omega0, double epsilon) {
  return {0.5 * omega0, omega0 * omega0 / (8.0 * epsilon)};
}

}  // namespace cdlab::models

#include "cdlab/analysis/floquet.hpp"

namespace cdlab::models {

CVec osc_lie_multipliers(const OscLiePoint& lp, OscParams p) {
  p.check_tail = false;
  const VectorFn W = [&](const Vec& x) { return pack(osc_corotating_field(unpack(x), p, lp.xi, lp.omega)); };
  return analysis::floquet_relative(W, pack(lp.state), 2.0 * std::numbers::pi / lp.xi);
}

}  // namespace cdlab::models
