#pragma once
#include "cdlab/cdcore/system.hpp"

namespace cdlab::cdcore {

// d(alpha) at x, analytic when supplied, else central differences with h = 1e-6 (1 + |x|).
Mat omega_at(const CdSystem& sys, const Vec& x, double t = 0.0);

// Throws DegenerateForm when the smallest singular value of omega is below the floor.
void check_nondegenerate(const Mat& omega, double floor);

// V = kappa J alpha, J = Omega^{-1}.
Vec dynamic_field(const CdSystem& sys, const Vec& x, double t = 0.0);

// Hamiltonian field X_F = Omega^{-1} dF.
Vec hamiltonian_field(const Mat& omega, const Vec& dF);

// {F, G} = dG . Omega^{-1} dF.
double poisson_bracket(const Mat& omega, const Vec& dF, const Vec& dG);
double poisson_bracket(const CdSystem& sys, const ScalarFn& F, const ScalarFn& G, const Vec& x,
                       double t = 0.0);

// Kahler dynamics in complex coordinates.
CVec kahler_field(const KahlerSystem& ks, const CVec& z);

// The defining form alpha = Im dU(holomorphic part) + kappa^{-1} dH as a real CD-system
// with analytic Omega = i sum G_ik dz_i ^ dzbar_k.
CdSystem kahler_as_cd(const KahlerSystem& ks);

struct PotentialRate {
  double bracket = 0.0;   // {H, U}
  double grad_sq = 0.0;   // |grad U|^2 := 2 U^{i kbar} U_i U_kbar
  double rate = 0.0;      // bracket - eps * grad_sq
};

PotentialRate potential_rate_terms(const KahlerSystem& ks, const CVec& z);
double potential_rate(const KahlerSystem& ks, const CVec& z);

}  // namespace cdlab::cdcore
