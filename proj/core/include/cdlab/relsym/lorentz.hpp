#pragma once
#include <vector>

#include "cdlab/types.hpp"

namespace cdlab::relsym {

// Free particle on a line, c = 1: H = sqrt(m^2 + p^2), N = -q H.
struct Particle1D {
  double p = 0.0;
  double q = 0.0;
  double m = 1.0;
  double energy() const;
  double velocity() const;  // p / H
};
using Ensemble = std::vector<Particle1D>;

enum class GroupKind { H_t, P_h, N_eps };
// H_t: q += t p/H; P_h: q += h; N_eps: p -> ch p + sh H, q -> q H / (ch H + sh p).
Particle1D group_action(GroupKind kind, double param, const Particle1D& x);
Ensemble group_action(GroupKind kind, double param, const Ensemble& z);

// (H, p, N) and its images under the three one-parameter groups (Lorentz-linear form).
struct Momenta {
  double H = 0.0, p = 0.0, N = 0.0;
};
Momenta momenta(const Particle1D& x);
Momenta momentum_transform(GroupKind kind, double param, const Momenta& m);

// Equilibrium lattice q_a = a d, p_a = 0, a = 0..n.
Ensemble rigid_body(int n, double d, double m = 1.0);
// H_t(N_eps Z) evaluated at time t.
Ensemble boosted_body(const Ensemble& z, double eps, double t);
double body_length(const Ensemble& z);

double velocity_add(double u, double v);

enum class ClockMechanism { light_clock_sim, abstract };
// Rest period T0 (light clock: length T0/2). Returns the period of the clock moving with v = th(eps).
double clock_dilation(double T0, double eps, ClockMechanism mech);

struct LightClockState {
  double left = 0.0, right = 0.0, photon = 0.0;
  int direction = 1;
};
// Piecewise-analytic light clock of rest length L0 boosted by eps, at time t.
LightClockState light_clock_state(double L0, double eps, double t);

// max over states of |H_t N_eps x - P_{t th eps} N_eps H_{t/ch eps} x| in (p, q).
double commutation_defect(const Ensemble& states, double t, double eps);

// Quasi-periodicity of a moving clock: max deviation of Z_eps(t + T0 ch eps) from P_shift Z_eps(t)
// over the sample times, with shift = T0 sh eps.
double quasi_periodicity_defect(double L0, double eps, const std::vector<double>& times, double shift);

// Two bodies approaching with speeds +-w coincide simultaneously; after the boost that stops the
// first body the endpoint coincidences happen at different times. Returns (before, after) time gaps.
std::pair<double, double> simultaneity_gaps(int n, double d, double w);

}  // namespace cdlab::relsym
