#pragma once
#include <vector>

#include "cdlab/types.hpp"

namespace cdlab::models {

// Massless CS particle with H = |p|, c = 1. a = rho / kappa is the packet breadth.
struct ParticleParams {
  double rho = 0.01;
  double kappa = 1.0;
  double a() const { return rho / kappa; }
  double epsilon() const { return 0.5 * kappa; }
};

// Ratio int t e^{-x^2 t^2 - t} dt / int e^{-x^2 t^2 - t} dt by quadrature.
double particle_phi(double x);
// The same ratio via D = (sqrt(pi)/2x) erfcx(1/2x): Phi = (1 - D) / (2 x^2 D).
double particle_phi_closed(double x);
double particle_velocity(double rho);
double velocity_small_rho_sqrt(double rho);    // 1 - sqrt(rho/pi)
double velocity_small_rho_linear(double rho);  // 1 - rho/sqrt(pi)
double particle_mass_parameter(double omega, double v);

struct WavetailParams {
  double a = 0.01;
  double epsilon = 0.5;
  double v = 0.99;
  double p3 = 1.0;
};
// Longitudinal factor int_0^inf exp(-(zeta + v t)^2 / 2a^2 - eps t) dt, zeta = x3 - q3.
double particle_wavetail_modulus(double zeta, const WavetailParams& p);
cplx particle_wavetail(double x3, double q3, const WavetailParams& p);
// Gaussian closed form of the same integral.
double particle_wavetail_closed(double zeta, const WavetailParams& p);

// Kernel of the resolvent symbol along the translation orbit.
cplx particle_kernel(double t, double a, double v, double p);

struct TailSimulation {
  std::vector<double> zeta;
  std::vector<double> F;
  double t_end = 0.0;
};
// dF/dt = -eps F + g(x - q(t)), q = v t, in the comoving frame on a grid with one cell per step.
TailSimulation particle_tail_simulation(const WavetailParams& p, double t_end, double cells_per_a = 8.0);

}  // namespace cdlab::models
