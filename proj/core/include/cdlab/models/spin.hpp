#pragma once
#include "cdlab/cdcore/system.hpp"

namespace cdlab::models {

// State layout (complex): [s1, s2, F_0, ..., F_m]; F(x) = sum_k F_k x1^k x2^(m-k) / sqrt(k!(m-k)!).
struct SpinParams {
  int m = 1;
  double lambda = 1.0;
  double epsilon = 0.01;
  double floor = 1e-10;
};

// kahler: gradient form of the potential ||F||^2 + s*s - log|F(s)|^2 with H = s* diag(-lambda/2, lambda/2) s.
// printed: ds/dt = (-eps + i m lambda sigma3 / 2) s + (eps / F(s)) dF/ds,
//          dF_k/dt = -eps F_k + eps conj(mono_k(s)) / F(s).
enum class SpinForm { kahler, printed };

CVec spin_monomials(const Eigen::Vector2cd& s, int m);
// F(s) and its gradient dF/ds
std::pair<cplx, Eigen::Vector2cd> spin_wavefunction(const CVec& state, int m);

CVec spin_eom(const CVec& state, const SpinParams& p, SpinForm form = SpinForm::kahler);
cdcore::KahlerSystem spin_kahler(const SpinParams& p);

// S_alpha = -(m/2) s* sigma_alpha s / (s* s)
Eigen::Vector3d spin_vector(const Eigen::Vector2cd& s, int m);
double spin_hamiltonian(const Eigen::Vector2cd& s, int m, double lambda);  // lambda S3
double spin_q1(const CVec& state, int m);  // ||F||^2 - 1
double spin_q2(const CVec& state, int m);  // s*s - m

}  // namespace cdlab::models
