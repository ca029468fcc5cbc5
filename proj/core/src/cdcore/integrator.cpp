#include "cdlab/cdcore/integrator.hpp"

#include <algorithm>
#include <boost/numeric/odeint.hpp>
#include <cmath>

#include "cdlab/cdcore/field.hpp"
#include "cdlab/errors.hpp"

namespace cdlab::cdcore {

namespace odeint = boost::numeric::odeint;

Vec Trajectory::at(double time) const {
  if (t.empty()) throw Error(Errc::InvalidArgument, "empty trajectory");
  if (time <= t.front()) return x.front();
  if (time >= t.back()) return x.back();
  const auto it = std::upper_bound(t.begin(), t.end(), time);
  const std::size_t j = static_cast<std::size_t>(it - t.begin());
  const double w = (time - t[j - 1]) / (t[j] - t[j - 1]);
  return (1.0 - w) * x[j - 1] + w * x[j];
}

namespace {

using State = std::vector<double>;

struct Stepper {
  const OdeProblem& prob;
  const IntegrateOptions& opts;
  std::size_t n;
  odeint::controlled_runge_kutta<odeint::runge_kutta_dopri5<State>> ctrl;
  Vec xin, dxout;

  Stepper(const OdeProblem& p, const IntegrateOptions& o, std::size_t dim)
      : prob(p),
        opts(o),
        n(dim),
        ctrl(odeint::default_error_checker<double, odeint::range_algebra, odeint::default_operations>(
            o.abs_tol, o.rel_tol, 1.0, 1.0)),
        xin(dim),
        dxout(dim) {}

  void operator()(const State& x, State& dx, double t) {
    for (std::size_t i = 0; i < n; ++i) xin[i] = x[i];
    prob.rhs(xin, t, dxout);
    for (std::size_t i = 0; i < n; ++i) dx[i] = dxout[i];
  }
};

Vec to_vec(const State& s) { return Eigen::Map<const Vec>(s.data(), static_cast<Eigen::Index>(s.size())); }

template <class Sink>
void run(const OdeProblem& prob, const Vec& x0, double t0, double t1, const IntegrateOptions& opts,
         Trajectory& stats, Sink&& sink) {
  if (!(t1 >= t0)) throw Error(Errc::InvalidArgument, "integration interval reversed");
  if (!all_finite(x0)) throw Error(Errc::NonFinite, "initial state");
  if (prob.guard && !(prob.guard(x0) >= prob.guard_floor))
    throw Error(Errc::SingularPoint, "initial state below guard floor");
  const std::size_t n = static_cast<std::size_t>(x0.size());
  Stepper sys(prob, opts, n);
  State x(x0.data(), x0.data() + n), backup(n);
  double t = t0;
  sink(t, x0);
  if (t1 == t0) return;

  double h = std::min(opts.initial_step, t1 - t0);
  const bool grid = opts.sample_dt > 0.0;
  long k_next = 1;
  int guard_streak = 0, nonfinite_streak = 0;
  long steps = 0;

  while (t < t1) {
    double target = t1;
    if (grid) target = std::min(t1, t0 + static_cast<double>(k_next) * opts.sample_dt);
    double hh = std::min({h, opts.max_step, target - t});
    const double floor = 1e-14 * std::max(1.0, std::abs(t));
    if (hh < floor) {
      if (target - t < floor) {  // landed on the grid point up to round-off
        t = target;
      } else {
        stats.events.push_back({t, EventKind::step_floor});
        throw Error(Errc::StepUnderflow, "step below floor at t=" + std::to_string(t));
      }
    } else {
      if (++steps > opts.max_steps) throw Error(Errc::StepUnderflow, "step budget exhausted");
      backup = x;
      const double t_before = t;
      const double h_try_in = hh;
      odeint::controlled_step_result res;
      bool guard_fail = false;
      try {
        res = sys.ctrl.try_step(std::ref(sys), x, t, hh);
      } catch (const Error& e) {
        if (e.code() != Errc::SingularPoint) throw;
        guard_fail = true;
        res = odeint::fail;
      }
      if (!guard_fail && res == odeint::success && prob.guard) {
        const Vec xn = to_vec(x);
        if (!(prob.guard(xn) >= prob.guard_floor)) guard_fail = true;
      }
      if (guard_fail) {
        x = backup;
        t = t_before;
        h = 0.5 * h_try_in;
        ++stats.rejected;
        stats.events.push_back({t, EventKind::singularity_guard});
        if (++guard_streak > opts.max_guard_rejects)
          throw Error(Errc::SingularityPersistent, "guard below floor near t=" + std::to_string(t));
        continue;
      }
      if (res != odeint::success) {
        ++stats.rejected;
        h = hh;
        continue;
      }
      guard_streak = 0;
      bool finite = true;
      for (double v : x) finite = finite && std::isfinite(v);
      if (!finite) {
        x = backup;
        t = t_before;
        h = 0.25 * h_try_in;
        ++stats.rejected;
        if (++nonfinite_streak > 30) throw Error(Errc::NonFinite, "state diverged near t=" + std::to_string(t));
        continue;
      }
      nonfinite_streak = 0;
      ++stats.accepted;
      // keep the controller's suggestion unless the step was clipped to a grid point
      h = (h_try_in < h) ? std::max(h, hh) : hh;
      if (grid && std::abs(t - target) <= 1e-12 * std::max(1.0, std::abs(target))) t = target;
    }
    const Vec xv = to_vec(x);
    if (prob.monitor) prob.monitor(xv);
    if (!grid) {
      sink(t, xv);
    } else if (t == target) {
      sink(t, xv);
      ++k_next;
    }
  }
}

}  // namespace

Trajectory integrate(const OdeProblem& prob, const Vec& x0, double t0, double t1,
                     const IntegrateOptions& opts) {
  Trajectory traj;
  run(prob, x0, t0, t1, opts, traj, [&](double t, const Vec& x) {
    if (t < opts.record_from) return;
    if (!traj.t.empty() && t <= traj.t.back()) return;
    traj.t.push_back(t);
    traj.x.push_back(x);
  });
  return traj;
}

Vec integrate_to(const OdeProblem& prob, const Vec& x0, double t0, double t1,
                 const IntegrateOptions& opts) {
  Trajectory stats;
  Vec last = x0;
  IntegrateOptions o = opts;
  o.sample_dt = 0.0;
  run(prob, x0, t0, t1, o, stats, [&](double, const Vec& x) { last = x; });
  return last;
}

OdeProblem make_problem(const CdSystem& sys) {
  OdeProblem p;
  p.rhs = [sys](const Vec& x, double t, Vec& dx) { dx = dynamic_field(sys, x, t); };
  p.guard = sys.guard;
  p.guard_floor = sys.guard_floor;
  return p;
}

OdeProblem make_problem(const KahlerSystem& ks) {
  OdeProblem p;
  p.rhs = [ks](const Vec& x, double, Vec& dx) { dx = pack(kahler_field(ks, unpack(x))); };
  if (ks.guard) {
    auto g = ks.guard;
    p.guard = [g](const Vec& x) { return g(unpack(x)); };
    p.guard_floor = ks.guard_floor;
  }
  return p;
}

Trajectory integrate(const CdSystem& sys, const Vec& x0, double t0, double t1, double tol) {
  IntegrateOptions o;
  o.abs_tol = tol;
  o.rel_tol = tol;
  return integrate(make_problem(sys), x0, t0, t1, o);
}

}  // namespace cdlab::cdcore
