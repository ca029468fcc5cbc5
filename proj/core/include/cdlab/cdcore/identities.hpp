#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cdlab/cdcore/integrator.hpp"

namespace cdlab::cdcore {

// Transports each tangent pair along the flow by the variational equations and returns
// max |Omega(xi(T), eta(T)) - e^{-kappa T} Omega(xi0, eta0)| / |Omega(xi0, eta0)|.
double contraction_defect(const CdSystem& sys, const Vec& x0, double T,
                          const std::vector<std::pair<Vec, Vec>>& pairs, double tol = 1e-10);

// Residuals of the algebraic consequences of i_V d(alpha) = -kappa alpha at x:
//   null_alpha          alpha(V) = 0
//   cartan_contraction  L_V alpha + kappa alpha = 0
//   field_derivative    V.F + kappa alpha(J dF) = 0
//   bracket_leibniz     L^k_V {F,G} = {L^k F, G} + {F, L^k G},  L^k = V. + kappa
//   commutator_form     V.(alpha(W)) + kappa alpha(W) = alpha([V, W]),  W = X_F
// Each residual is divided by 1 + the magnitude of its largest term. h > 0 fixes the finite-difference
// step; h <= 0 reports, per identity, the smallest residual over steps {2e-3, 1e-3, 5e-4, 2e-4}, each
// also Richardson-combined with its half step.
std::map<std::string, double> identity_residuals(const CdSystem& sys, const Vec& x,
                                                 const ScalarFn& F, const ScalarFn& G,
                                                 double t = 0.0, double h = 0.0);

struct RateFit {
  double rate = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
  std::size_t samples = 0;
};

// Least-squares slope of log|Q(x(t))| over samples with t in [t_from, t_to].
RateFit quasi_integral_fit(const Trajectory& traj, const ScalarFn& Q,
                           double t_from = -std::numeric_limits<double>::infinity(),
                           double t_to = std::numeric_limits<double>::infinity(),
                           double floor = 1e-12);
double quasi_integral_rate(const Trajectory& traj, const ScalarFn& Q);

}  // namespace cdlab::cdcore
