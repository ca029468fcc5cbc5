#pragma once
#include <functional>
#include <limits>
#include <vector>

#include "cdlab/cdcore/system.hpp"

namespace cdlab::cdcore {

enum class EventKind { singularity_guard, step_floor };

struct TrajEvent {
  double t;
  EventKind kind;
};

struct Trajectory {
  std::vector<double> t;
  std::vector<Vec> x;
  std::vector<TrajEvent> events;
  long accepted = 0;
  long rejected = 0;

  std::size_t size() const { return t.size(); }
  const Vec& back() const { return x.back(); }
  // Linear interpolation between stored samples.
  Vec at(double time) const;
};

using Rhs = std::function<void(const Vec& x, double t, Vec& dx)>;

struct OdeProblem {
  Rhs rhs;
  std::function<double(const Vec&)> guard;
  double guard_floor = 1e-10;
  // Called on each accepted state; may throw (e.g. TailOverflow).
  std::function<void(const Vec&)> monitor;
};

struct IntegrateOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double max_step = std::numeric_limits<double>::infinity();
  double initial_step = 1e-3;
  // >0: samples on the uniform grid t0 + k*sample_dt (steps land on grid points);
  // 0: every accepted step is stored.
  double sample_dt = 0.0;
  double record_from = -std::numeric_limits<double>::infinity();
  int max_guard_rejects = 60;
  long max_steps = 200'000'000;
};

Trajectory integrate(const OdeProblem& prob, const Vec& x0, double t0, double t1,
                     const IntegrateOptions& opts = {});

// Same stepping, only the final state is kept.
Vec integrate_to(const OdeProblem& prob, const Vec& x0, double t0, double t1,
                 const IntegrateOptions& opts = {});

OdeProblem make_problem(const CdSystem& sys);
OdeProblem make_problem(const KahlerSystem& ks);

Trajectory integrate(const CdSystem& sys, const Vec& x0, double t0, double t1, double tol);

}  // namespace cdlab::cdcore
