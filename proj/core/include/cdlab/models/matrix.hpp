#pragma once
#include <utility>

#include "cdlab/cdcore/system.hpp"

namespace cdlab::models {

// State layout (complex): [psi_1..psi_N, chi_1..chi_N].
struct MatrixModel {
  int N = 2;
  CMat A;  // Hermitian
  double epsilon = 0.5;
  double floor = 1e-10;
};

MatrixModel matrix_model(const CMat& A, double kappa);

CVec matrix_eom(const MatrixModel& m, const CVec& state);
cplx matrix_pairing(const CVec& state);  // chi psi

// U = chi chi* + psi* psi - log|chi psi|^2, H = psi* A psi with analytic derivatives.
cdcore::KahlerSystem matrix_kahler(const MatrixModel& m);
// Same potential and Hamiltonian, every derivative by finite differences.
cdcore::KahlerSystem matrix_kahler_fd(const MatrixModel& m);

double matrix_energy(const MatrixModel& m, const CVec& state);  // psi* A psi
double matrix_q1(const CVec& state);                           // psi* psi - 1
double matrix_q2(const CVec& state);                           // chi chi* - 1
double matrix_qc(const CVec& state, const CMat& C);            // psi* C psi - chi C chi*

// psi = x_m, chi = e^{i phase} x_m^* for the m-th unit eigenvector of A.
CVec matrix_series1(const MatrixModel& m, int level, double phase = 0.0);

struct Series2 {
  double lambda = 0.0;
  double I_a = 0.5, I_b = 0.5;
  cplx phase;     // e^{i(phi_b - phi_a)}
  double omega = 0.0;
  Vec c;          // diagonal of C
  CVec x, y;      // psi(0) = x, chi(0) = y
};

// Two-level Lie solution for diagonal A = diag(omegas); indices are 0-based.
Series2 matrix_series2(int a, int b, const Vec& omegas, double kappa);
// The Lie ansatz psi(t) = e^{itC} x e^{i omega t}, chi(t) = y e^{-itC}, evaluated at t.
CVec matrix_series2_state(const Series2& s, double t);

// (mu^2 / 2 kappa, mu^2 / 4 kappa)
std::pair<double, double> matrix_rates(double mu, double kappa);

}  // namespace cdlab::models
