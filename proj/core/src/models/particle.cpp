#include "cdlab/models/particle.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "cdlab/errors.hpp"

namespace cdlab::models {

namespace {
constexpr double kPi = std::numbers::pi;
using boost::math::quadrature::gauss_kronrod;
}  // namespace

double particle_phi(double x) {
  if (x < 0) throw Error(Errc::InvalidArgument, "particle_phi needs x >= 0");
  if (x == 0.0) return 1.0;
  boost::math::quadrature::exp_sinh<double> q;
  if (x <= 1.0) {
    const double num = q.integrate([x](double t) { return t * std::exp(-x * x * t * t - t); });
    const double den = q.integrate([x](double t) { return std::exp(-x * x * t * t - t); });
    return num / den;
  }
  // t = s / x keeps the Gaussian scale O(1)
  const double num = q.integrate([x](double s) { return s * std::exp(-s * s - s / x); });
  const double den = q.integrate([x](double s) { return std::exp(-s * s - s / x); });
  return num / (x * den);
}

double particle_phi_closed(double x) {
  if (x == 0.0) return 1.0;
  const double y = 1.0 / (2.0 * x);
  double erfcx;
  if (y < 25.0) {
    erfcx = std::exp(y * y) * std::erfc(y);
  } else {
    const double y2 = y * y;  // asymptotic series
    erfcx = (1.0 - 1.0 / (2 * y2) + 3.0 / (4 * y2 * y2) - 15.0 / (8 * y2 * y2 * y2)) / (y * std::sqrt(kPi));
  }
  const double D = std::sqrt(kPi) * y * erfcx;
  return (1.0 - D) / (2.0 * x * x * D);
}

double particle_velocity(double rho) {
  if (!(rho > 0)) throw Error(Errc::InvalidArgument, "particle_velocity needs rho > 0");
  auto g = [rho](double v) { return v * (1.0 + particle_phi(v / rho)) - 1.0; };
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double velocity_small_rho_sqrt(double rho) { return 1.0 - std::sqrt(rho / kPi); }
double velocity_small_rho_linear(double rho) { return 1.0 - rho / std::sqrt(kPi); }

double particle_mass_parameter(double omega, double v) {
  if (!(v > 0)) throw Error(Errc::InvalidArgument, "velocity must be positive");
  return omega / (v * v);
}

double particle_wavetail_modulus(double zeta, const WavetailParams& p) {
  if (!(p.epsilon > 0)) throw Error(Errc::QuadratureDiverges, "wave tail needs eps > 0");
  if (!(p.a > 0) || !(p.v > 0 && p.v < 1)) throw Error(Errc::InvalidArgument, "wave tail needs a > 0, 0 < v < 1");
  const double a2 = p.a * p.a;
  // Gaussian in t centred at tc with width sigma after completing the square
  const double sigma = p.a / p.v;
  const double tc = -zeta / p.v - p.epsilon * a2 / (p.v * p.v);
  const double lo = std::max(0.0, tc - 14.0 * sigma);
  const double hi = std::max(0.0, tc) + 14.0 * sigma;
  auto f = [&](double t) {
    const double u = zeta + p.v * t;
    return std::exp(-u * u / (2 * a2) - p.epsilon * t);
  };
  return gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-14);
}

cplx particle_wavetail(double x3, double q3, const WavetailParams& p) {
  return particle_wavetail_modulus(x3 - q3, p) * std::exp(I * p.p3 * x3);
}

double particle_wavetail_closed(double zeta, const WavetailParams& p) {
  const double a = p.a, v = p.v, e = p.epsilon;
  const double sigma = a / v;
  const double tc = -zeta / v - e * a * a / (v * v);
  // exponent at the centre: -(zeta + v tc)^2/2a^2 - e tc
  const double u = zeta + v * tc;
  const double e0 = -u * u / (2 * a * a) - e * tc;
  const double z = -tc / (std::sqrt(2.0) * sigma);
  double tail;  // exp(e0) * erfc(z)
  if (z > 25.0) {
    const double z2 = z * z;
    tail = std::exp(e0 - z2) * (1.0 - 1.0 / (2 * z2) + 3.0 / (4 * z2 * z2)) / (z * std::sqrt(kPi));
  } else {
    tail = std::exp(e0) * std::erfc(z);
  }
  return sigma * std::sqrt(kPi / 2.0) * tail;
}

cplx particle_kernel(double t, double a, double v, double p) {
  return std::exp(-v * v * t * t / (4 * a * a) + I * p * v * t);
}

TailSimulation particle_tail_simulation(const WavetailParams& p, double t_end, double cells_per_a) {
  if (!(p.epsilon > 0) || !(p.a > 0) || !(p.v > 0 && p.v < 1))
    throw Error(Errc::InvalidArgument, "tail simulation needs a, eps > 0 and 0 < v < 1");
  const double dz = p.a / cells_per_a;
  const double dt = dz / p.v;
  const double extent = 20.0 * std::max(p.a, p.v / p.epsilon);
  const long behind = static_cast<long>(std::ceil(extent / dz));
  const long ahead = static_cast<long>(std::ceil(10.0 * p.a / dz));
  const long n = behind + ahead + 1;
  TailSimulation out;
  out.zeta.resize(n);
  for (long j = 0; j < n; ++j) out.zeta[j] = (j - behind) * dz;
  std::vector<double> F(n, 0.0), G(n, 0.0);
  // source integral along one characteristic step, 3-point Gauss
  static const double gx[3] = {-std::sqrt(0.6), 0.0, std::sqrt(0.6)};
  static const double gw[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
  std::vector<double> S(n, 0.0);
  for (long j = 0; j < n; ++j) {
    double acc = 0.0;
    for (int k = 0; k < 3; ++k) {
      const double s = 0.5 * dt * (1.0 + gx[k]);  // time since leaving cell j+1
      const double zeta = out.zeta[j] + dz - p.v * s;
      acc += gw[k] * std::exp(-p.epsilon * (dt - s)) * std::exp(-zeta * zeta / (2 * p.a * p.a));
    }
    S[j] = 0.5 * dt * acc;
  }
  const double decay = std::exp(-p.epsilon * dt);
  const long steps = static_cast<long>(std::ceil(t_end / dt));
  for (long s = 0; s < steps; ++s) {
    for (long j = 0; j + 1 < n; ++j) G[j] = F[j + 1] * decay + S[j];
    G[n - 1] = S[n - 1];  // inflow ahead of the particle carries no field
    F.swap(G);
  }
  out.F = F;
  out.t_end = steps * dt;
  return out;
}

}  // namespace cdlab::models
