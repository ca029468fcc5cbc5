#pragma once
#include "cdlab/types.hpp"

namespace cdlab::analysis {

// Multipliers of a periodic orbit through x0 with period T: eigenvalues of the monodromy matrix
// from the variational equations, sorted by decreasing modulus.
CVec floquet(const VectorFn& field, const Vec& x0, double T, double tol = 1e-10);

// Relative equilibrium: x0 is a zero of the co-rotating field W; the multipliers over T are
// exp(T * eig(DW(x0))), sorted by decreasing modulus.
CVec floquet_relative(const VectorFn& corotating, const Vec& x0, double T, double h = 1e-6);

// Largest n Lyapunov exponents by QR re-orthonormalisation every renorm_dt over [0, t_total].
Vec lyapunov_exponents(const VectorFn& field, const Vec& x0, double t_total, int n, double renorm_dt,
                       double tol = 1e-9);

// Index of the multiplier closest to 1 and its distance.
std::pair<int, double> trivial_multiplier(const CVec& mult);

}  // namespace cdlab::analysis
