#pragma once
#include <utility>

#include "cdlab/cdcore/system.hpp"

namespace cdlab::models {

// State layout (complex): [z, F_0, ..., F_Nmax]; F(z) = sum F_k z^k / sqrt(k!).
struct OscParams {
  double omega0 = 1.0;
  double epsilon = 0.005;
  int Nmax = 64;
  double floor = 1e-10;
  double tail_tol = 1e-8;
  bool check_tail = true;
};

OscParams osc_params_mu(double mu, double omega0 = 1.0, int Nmax = 64);

// F(z) and dF/dz for the Fock coefficients in state.
std::pair<cplx, cplx> osc_wavefunction(const CVec& state);
double osc_tail_fraction(const CVec& state);

CVec cs_eom(const CVec& state, const OscParams& p);
cdcore::KahlerSystem osc_kahler(const OscParams& p);
double osc_q1(const CVec& state);  // |F|^2 - 1

enum class GMethod { series, integral };
cplx g_function(double p, double q, GMethod method = GMethod::series);
// Saddle-point form for large p; used only to seed root searches.
cplx g_asymptotic(double p, double q);

// The two real equations q^2 + mu p q - p - q / Re g = 0, Im g = 0.
Eigen::Vector2d oscillator_equations(double p, double q, double mu);

enum class OscSeries { stable, unstable };
std::pair<double, double> oscillator_seed(int n, double mu, OscSeries series);
// (1/3mu) sh(2 pi / mu)
double oscillator_existence_bound(double mu);

struct OscRoot {
  double p = 0.0, q = 0.0;
  double residual = 0.0;
  int iterations = 0;
};
OscRoot oscillator_root(int n, double mu, OscSeries series);

struct OscLiePoint {
  CVec state;   // (z, F) at t = 0, gauge F(z) real positive
  double xi = 0.0;
  double omega = 0.0;
};
// z = sqrt(p), xi = eps / q, omega = p xi, F_k = eps zbar^k / (sqrt(k!) cbar (eps + i(omega - k xi))).
OscLiePoint osc_lie_point(double p, double q, const OscParams& params);
// d/dt - generator, whose zeros are the Lie solutions: W_z = V_z - i xi z, W_k = V_k - i(omega - k xi) F_k.
CVec osc_corotating_field(const CVec& state, const OscParams& p, double xi, double omega);

// (omega0 / 2, omega0^2 / 8 eps)
std::pair<double, double> low_freq_coefficients(double omega0, double epsilon);

}  // namespace cdlab::models

namespace cdlab::models {
// Multipliers of the Lie solution over one rotation period 2 pi / xi, from the co-rotating field.
CVec osc_lie_multipliers(const OscLiePoint& lp, OscParams p);
}  // namespace cdlab::models
