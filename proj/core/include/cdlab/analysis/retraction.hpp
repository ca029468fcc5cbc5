#pragma once
#include <string>
#include <vector>

#include "cdlab/cdcore/system.hpp"

namespace cdlab::analysis {

// CD flow g_t and physical-Hamiltonian flow h_t (either sign of t) of a system with a registered PH.
Vec cd_flow(const cdcore::CdSystem& sys, const Vec& x, double t, double tol = 1e-12);
Vec ph_flow(const cdcore::CdSystem& sys, const Vec& x, double t, double tol = 1e-12);

struct RetractionOptions {
  double T0 = 1.0;      // first horizon, in units of 1/kappa
  double T_max = 200.0; // in units of 1/kappa
  double tol = 1e-9;
  double ode_tol = 1e-12;
};
// h_{-T} g_T x for a doubling sequence of T until successive values agree; NoLimit otherwise.
Vec retraction(const cdcore::CdSystem& sys, const Vec& x, const RetractionOptions& o = {});

struct ConstantEntry {
  std::string name;
  double flow_variation = 0.0;     // max |F(g_t x) - F(x)| over the samples
  double retraction_defect = 0.0;  // max |F(x) - F(r(x))|
  double attractor_spread = 0.0;   // spread of F over the retracted points
  bool constant_along_flow = false;
  bool equals_on_retraction = false;
};
struct ConstantsReport {
  std::vector<ConstantEntry> entries;
  Mat brackets;  // pairwise {F_a, F_b} at the first sample, confirmed constants only (NaN otherwise)
};
ConstantsReport constants_of_motion_check(
    const cdcore::CdSystem& sys, const std::vector<std::pair<std::string, std::function<double(const Vec&)>>>& Fs,
    const std::vector<Vec>& starts, double T, double tol = 1e-6);

// max |theta(Vbar)| over samples (x, t), where theta is a covector on M x R and Vbar = (V(x, t), 1).
double standard_gauge_residual(const std::function<Vec(const Vec&, double)>& theta,
                               const std::function<Vec(const Vec&, double)>& field,
                               const std::vector<std::pair<Vec, double>>& samples);

}  // namespace cdlab::analysis
