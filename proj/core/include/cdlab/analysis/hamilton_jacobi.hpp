#pragma once
#include <functional>
#include <utility>
#include <vector>

#include "cdlab/types.hpp"

namespace cdlab::analysis {

// S(q, t) = a q^2 + Re(b q e^{i omega t} + c e^{2 i omega t}) for the forced oscillator
// H = p^2/2m + k q^2/2 + f q cos(omega t); H(S_q) + S_t + kappa S = constant.
struct HJSolution {
  double a = 0.0;
  cplx b;
  cplx c;
  double constant = 0.0;
};
struct HJParams {
  double m = 1.0, k = 1.0, omega = 1.0, f = 1.0, kappa = 1.0;
};

double hj_threshold(double m, double k);  // kappa_0 = 2 sqrt(k/m)
// Both quadratic solutions (equal at kappa = kappa_0); NoSolution below the threshold.
std::pair<HJSolution, HJSolution> hj_quadratic(const HJParams& p);
double hj_action(const HJSolution& s, double omega, double q, double t);
// H(S_q, q, t) + S_t + kappa S - constant, with analytic derivatives.
double hj_residual(const HJSolution& s, const HJParams& p, double q, double t);

enum class HJForm { generalized, gauge };
// max over samples (q, t) of |d/dq(H(S_q, q, t) + S_t [+ kappa S])|, derivatives by 5-point differences.
double invariant_manifold_residual(const std::function<double(double, double, double)>& H,
                                   const std::function<double(double, double)>& S, double kappa,
                                   const std::vector<std::pair<double, double>>& samples,
                                   HJForm form = HJForm::generalized, double h = 1e-3);

}  // namespace cdlab::analysis
