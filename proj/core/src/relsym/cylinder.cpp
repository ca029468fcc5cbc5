#include "cdlab/relsym/cylinder.hpp"

#include <cmath>

#include "cdlab/cdcore/integrator.hpp"
#include "cdlab/errors.hpp"

namespace cdlab::relsym {

double CylinderPotential::U(const Eigen::Vector3d& x) const {
  double u = 0.0;
  for (std::size_t a = 0; a < centers.size(); ++a) u -= strengths[a] / (x - centers[a]).norm();
  return u;
}

Eigen::Vector3d CylinderPotential::gradU(const Eigen::Vector3d& x) const {
  Eigen::Vector3d g = Eigen::Vector3d::Zero();
  for (std::size_t a = 0; a < centers.size(); ++a) {
    const Eigen::Vector3d d = x - centers[a];
    const double r = d.norm();
    g += strengths[a] * d / (r * r * r);
  }
  return g;
}

double cylinder_energy(const Vec& st) { return std::sqrt(st.segment<3>(3).squaredNorm() + st[7] * st[7]); }

double cylinder_hamiltonian(const Vec& st, const CylinderPotential& pot) {
  return cylinder_energy(st) * (1.0 + pot.U(st.head<3>()));
}

namespace {

Vec eom_unchecked(const Vec& st, const CylinderPotential& pot) {
  const Eigen::Vector3d x = st.head<3>();
  const Eigen::Vector3d p = st.segment<3>(3);
  const double m = st[7];
  const double f = 1.0 + pot.U(x);
  const double E = cylinder_energy(st);
  Vec d = Vec::Zero(9);
  if (E > 0) {
    d.head<3>() = f * p / E;
    d[6] = f * m / E;
  }
  d.segment<3>(3) = -E * pot.gradU(x);
  d[7] = 0.0;
  d[8] = std::abs(d[6]);
  return d;
}

}  // namespace

Vec cylinder_eom(const Vec& st, const CylinderPotential& pot) {
  const double f = 1.0 + pot.U(st.head<3>());
  if (!(f >= kSurfaceFloor)) throw Error(Errc::SurfaceReached, "1 + U = " + std::to_string(f));
  return eom_unchecked(st, pot);
}

double cylinder_speed_defect(const Vec& st, const CylinderPotential& pot) {
  const Vec d = cylinder_eom(st, pot);
  const double f = 1.0 + pot.U(st.head<3>());
  return d.head<3>().squaredNorm() + d[6] * d[6] - f * f;
}

CylinderRun cylinder_integrate(const Vec& state0, const CylinderPotential& pot, double t_end, double dt, double tol) {
  const auto f = [&pot](const Vec& x) { return 1.0 + pot.U(x.head<3>()); };
  if (!(f(state0) >= kSurfaceFloor)) throw Error(Errc::SurfaceReached, "initial state on the surface");
  // the surface is reached in finite time, so it is an event that halts the run rather than a guard
  cdcore::OdeProblem free_prob;
  free_prob.rhs = [&pot](const Vec& x, double, Vec& dx) { dx = eom_unchecked(x, pot); };
  cdcore::OdeProblem prob = free_prob;
  prob.monitor = [&f](const Vec& x) {
    if (!(f(x) >= kSurfaceFloor)) throw Error(Errc::SurfaceReached, "1 + U below the floor");
  };
  cdcore::IntegrateOptions o;
  o.abs_tol = o.rel_tol = tol;
  CylinderRun run;
  Vec x = state0;
  double t = 0.0;
  run.t.push_back(t);
  run.x.push_back(x);
  while (t < t_end - 1e-12) {
    const double t1 = std::min(t_end, t + dt);
    try {
      x = cdcore::integrate_to(prob, x, t, t1, o);
    } catch (const Error& e) {
      if (e.code() != Errc::SurfaceReached) throw;
      double lo = t, hi = t1;
      Vec x_lo = x;
      while (hi - lo > 1e-12 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        const Vec xm = cdcore::integrate_to(free_prob, x_lo, lo, mid, o);
        if (f(xm) >= kSurfaceFloor) {
          lo = mid;
          x_lo = xm;
        } else {
          hi = mid;
        }
      }
      run.surface_reached = true;
      run.t_event = lo;
      run.t.push_back(lo);
      run.x.push_back(x_lo);
      return run;
    }
    t = t1;
    run.t.push_back(t);
    run.x.push_back(x);
  }
  return run;
}

double BoostedParams::alpha() const { return 1.0 / std::sqrt(1.0 - v * v); }
double BoostedParams::beta() const { return alpha() * v; }

Vec boosted_cd_eom(const Vec& st, const BoostedParams& prm) {
  const double p = st[0];
  const double H = std::sqrt(p * p + prm.m * prm.m);
  const double E = std::sqrt(prm.b * prm.b + prm.m * prm.m);
  const double Sq = prm.b, St = -E;
  Vec d(2);
  d[0] = -prm.alpha() * prm.kappa * (p - Sq) + prm.kappa * prm.beta() * (H + St);
  d[1] = H > 0 ? p / H : 0.0;
  return d;
}

double boosted_decay_rate(const BoostedParams& prm) {
  const double E = std::sqrt(prm.b * prm.b + prm.m * prm.m);
  return prm.kappa * (prm.alpha() - prm.beta() * prm.b / E);
}

}  // namespace cdlab::relsym
