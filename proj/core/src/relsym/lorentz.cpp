#include "cdlab/relsym/lorentz.hpp"

#include <cmath>

#include "cdlab/errors.hpp"

namespace cdlab::relsym {

double Particle1D::energy() const { return std::sqrt(m * m + p * p); }
double Particle1D::velocity() const { return p / energy(); }

Particle1D group_action(GroupKind kind, double s, const Particle1D& x) {
  Particle1D y = x;
  const double H = x.energy();
  switch (kind) {
    case GroupKind::H_t:
      if (H > 0) y.q = x.q + s * x.p / H;
      break;
    case GroupKind::P_h:
      y.q = x.q + s;
      break;
    case GroupKind::N_eps: {
      if (!(H > 0)) throw Error(Errc::InvalidArgument, "N_eps needs H > 0");
      const double c = std::cosh(s), sh = std::sinh(s);
      y.p = c * x.p + sh * H;
      y.q = x.q * H / (c * H + sh * x.p);
      break;
    }
  }
  return y;
}

Ensemble group_action(GroupKind kind, double s, const Ensemble& z) {
  Ensemble out;
  out.reserve(z.size());
  for (const auto& x : z) out.push_back(group_action(kind, s, x));
  return out;
}

Momenta momenta(const Particle1D& x) {
  const double H = x.energy();
  return {H, x.p, -x.q * H};
}

Momenta momentum_transform(GroupKind kind, double s, const Momenta& m) {
  switch (kind) {
    case GroupKind::H_t: return {m.H, m.p, m.N - s * m.p};
    case GroupKind::P_h: return {m.H, m.p, m.N - s * m.H};
    case GroupKind::N_eps: {
      const double c = std::cosh(s), sh = std::sinh(s);
      return {c * m.H + sh * m.p, sh * m.H + c * m.p, m.N};
    }
  }
  return m;
}

Ensemble rigid_body(int n, double d, double m) {
  Ensemble z;
  for (int a = 0; a <= n; ++a) z.push_back({0.0, a * d, m});
  return z;
}

Ensemble boosted_body(const Ensemble& z, double eps, double t) {
  return group_action(GroupKind::H_t, t, group_action(GroupKind::N_eps, eps, z));
}

double body_length(const Ensemble& z) { return z.back().q - z.front().q; }

double velocity_add(double u, double v) {
  if (!(std::abs(u) <= 1.0 && std::abs(v) <= 1.0)) throw Error(Errc::InvalidArgument, "velocities must satisfy |u|, |v| <= 1");
  return (u + v) / (1.0 + u * v);
}

LightClockState light_clock_state(double L0, double eps, double t) {
  const double v = std::tanh(eps);
  const double L = L0 / std::cosh(eps);
  LightClockState s;
  s.left = v * t;
  s.right = L + v * t;
  // photon leaves the left mirror at t = 0; legs of duration L/(1-v) and L/(1+v)
  const double up = L / (1.0 - v), down = L / (1.0 + v);
  const double period = up + down;
  // cycle index rounded so that t = k * period (up to rounding) starts cycle k
  double k = std::floor(t / period);
  if (t - period * (k + 1.0) > -1e-12 * period) k += 1.0;
  const double tau = std::max(0.0, t - period * k);
  const double cycle_start = period * k;
  if (tau < up) {
    s.photon = v * cycle_start + tau;
    s.direction = 1;
  } else {
    s.photon = v * cycle_start + up - (tau - up);
    s.direction = -1;
  }
  return s;
}

double clock_dilation(double T0, double eps, ClockMechanism mech) {
  if (!(T0 > 0)) throw Error(Errc::InvalidArgument, "T0 must be positive");
  if (mech == ClockMechanism::abstract) return T0 * std::cosh(eps);
  // event-driven bounce: photon at speed 1 between mirrors moving at v, rest length T0/2
  const double v = std::tanh(eps);
  const double L = 0.5 * T0 / std::cosh(eps);
  double t = 0.0, x = 0.0;
  const double t_hit = (L - x + v * t) / (1.0 - v);  // x + (t' - t) = L + v t'
  t = t_hit;
  x = L + v * t;
  const double t_back = (x + t) / (1.0 + v);  // x - (t' - t) = v t'
  return t_back;
}

double commutation_defect(const Ensemble& states, double t, double eps) {
  double worst = 0.0;
  for (const auto& x : states) {
    const Particle1D lhs = group_action(GroupKind::H_t, t, group_action(GroupKind::N_eps, eps, x));
    const Particle1D rhs = group_action(
        GroupKind::P_h, t * std::tanh(eps),
        group_action(GroupKind::N_eps, eps, group_action(GroupKind::H_t, t / std::cosh(eps), x)));
    worst = std::max({worst, std::abs(lhs.p - rhs.p), std::abs(lhs.q - rhs.q)});
  }
  return worst;
}

double quasi_periodicity_defect(double L0, double eps, const std::vector<double>& times, double shift) {
  const double T = 2.0 * L0 * std::cosh(eps);
  double worst = 0.0;
  for (double t : times) {
    const LightClockState a = light_clock_state(L0, eps, t);
    const LightClockState b = light_clock_state(L0, eps, t + T);
    worst = std::max({worst, std::abs(b.left - a.left - shift), std::abs(b.right - a.right - shift),
                      std::abs(b.photon - a.photon - shift), b.direction == a.direction ? 0.0 : 1.0});
  }
  return worst;
}

std::pair<double, double> simultaneity_gaps(int n, double d, double w) {
  const double ew = std::atanh(w);
  // body A moves right, body B moves left, starting 2D apart so they meet at t = D / w
  const double D = 10.0 * n * d;
  Ensemble A = group_action(GroupKind::N_eps, ew, rigid_body(n, d));
  Ensemble B = group_action(GroupKind::P_h, 2.0 * D, group_action(GroupKind::N_eps, -ew, rigid_body(n, d)));
  auto gap = [](const Ensemble& a, const Ensemble& b) {
    // time at which particle k of a meets particle k of b, for the two endpoints
    auto meet = [&](std::size_t k) {
      return (b[k].q - a[k].q) / (a[k].velocity() - b[k].velocity());
    };
    return std::abs(meet(0) - meet(a.size() - 1));
  };
  const double before = gap(A, B);
  // the boost that stops body A acts on the whole process at t = 0
  const Ensemble A2 = group_action(GroupKind::N_eps, -ew, A);
  const Ensemble B2 = group_action(GroupKind::N_eps, -ew, B);
  return {before, gap(A2, B2)};
}

}  // namespace cdlab::relsym
