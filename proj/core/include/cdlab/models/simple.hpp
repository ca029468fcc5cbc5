#pragma once
#include <functional>
#include <string>

#include "cdlab/cdcore/system.hpp"

namespace cdlab::models {

using cdcore::CdSystem;
using cdcore::KahlerSystem;

// Phase-space layouts are canonical pairs (p, q) or (I, phi), interleaved per degree of freedom.

// alpha = p dq. V = -kappa p d/dp.
CdSystem euler_system(double kappa);
// alpha = p dq + kappa^{-1} d(pq). Flow (p, q) -> (e^{-(kappa+1)t} p, e^t q).
CdSystem pq_system(double kappa);

struct ToyParams {
  double kappa = 1.0;
  double omega0 = 1.0;
  double hbar = 1.0;
};
// alpha = (I - hbar) dphi + kappa^{-1} d(I omega0), state (I, phi).
CdSystem toy_oscillator(const ToyParams& p);
double toy_action(const ToyParams& p, double I0, double t);

// alpha = p dq + kappa^{-1} dH, H = p^2/2 + q.
CdSystem raindrop(double kappa);

struct MonopoleParams {
  double kappa = 1.0;
  double m = 1.0;
  double h = 1.0;
};
// Reduced monopole, state (p_r, r): alpha = p_r dr + kappa^{-1} d(p_r^2/2m + h^2/2mr^2).
CdSystem monopole(const MonopoleParams& p);
// Slow-regime radius (r0^4 + 4h^2 (t - t0) / kappa m^2)^{1/4}.
double monopole_drift_radius(const MonopoleParams& p, double r0, double dt);

struct TorusParams {
  double kappa = 1.0;
  Vec h;                                      // attractor I = h
  std::function<double(const Vec&)> H;        // H(I)
  std::function<Vec(const Vec&)> dH;          // dH/dI
  std::function<Mat(const Vec&)> d2H;         // Hessian, used by the phase-shift formula
};
// alpha = (I - h) dphi + kappa^{-1} dH(I), state (I_1, phi_1, ..., I_n, phi_n).
CdSystem torus_system(const TorusParams& p);
TorusParams torus_quadratic(double kappa, double h);  // one dof, H = I^2/2
// Retraction phase shifts Delta_i(I) = kappa sum_j (I_j - h_j) int tau e^{-kappa tau} H_ij(I(tau)) dtau.
Vec torus_phase_shift(const TorusParams& p, const Vec& I);

struct CircleParams {
  double kappa = 1.0;
  double m = 1.0;
  double h = 1.0;
  double L = 2.0 * 3.14159265358979323846;
};
// alpha = (p - h) dq + kappa^{-1} d(p^2/2m), q mod L.
CdSystem circle_particle(const CircleParams& p);

struct ForcedParams {
  double kappa = 1.0;
  double m = 1.0;
  double k = 1.0;  // U(q) = k q^2 / 2
  double omega = 1.0;
  double f = 1.0;
};
// alpha = p dq + I dphi + kappa^{-1} dH, H = p^2/2m + kq^2/2 + omega I + f q cos(phi); state (p, q, I, phi).
CdSystem forced_oscillator(const ForcedParams& p);

struct NonautoParams {
  double kappa = 1.0;
  double omega0 = 1.0;
  double h0 = 1.0;
  double h1 = 2.0;
  double t_center = 0.0;
  double width = 1.0;
};
double nonauto_h(const NonautoParams& p, double t);
double nonauto_hdot(const NonautoParams& p, double t);
// alpha = (I - h(t)) dphi + kappa^{-1} d(I omega0), state (I, phi).
CdSystem nonautonomous_oscillator(const NonautoParams& p);
// f(t) = h(t) - e^{-kappa t} int_{-inf}^t e^{kappa tau} hdot(tau) dtau, by quadrature.
double nonauto_attractor(const NonautoParams& p, double t);

struct ConstantsParams {
  double kappa = 1.0;
  double omega0 = 1.0;
  double h = 1.0;
};
// alpha = (I1 - h) dphi1 + (I2 - h) dphi2 + kappa^{-1} d(omega0 I2), state (I1, phi1, I2, phi2).
CdSystem constants_example(const ConstantsParams& p);

// U = |z|^2 + 2 Re(c log z), H = 0.
KahlerSystem kahler_log(double epsilon, cplx c);

enum class SimpleModel { raindrop, monopole, torus, circle_particle, forced_oscillator, nonautonomous_oscillator };

struct SimpleParams {
  double kappa = 1.0;
  MonopoleParams monopole;
  TorusParams torus;
  CircleParams circle;
  ForcedParams forced;
  NonautoParams nonauto;
};

// The printed right-hand sides, written out directly (independent of the defining-form route).
Vec simple_model_eom(SimpleModel id, const SimpleParams& p, const Vec& x, double t = 0.0);

}  // namespace cdlab::models
