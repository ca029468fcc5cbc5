#pragma once
#include <vector>

#include "cdlab/cdcore/system.hpp"

namespace cdlab::models {

// State layout (complex): psi (N x k, column-major) then chi (k x N, column-major).
struct FermionModel {
  int N = 4;
  int k = 2;
  CMat A;
  double epsilon = 0.5;
  double floor = 1e-10;
};

FermionModel fermion_model(const CMat& A, int k, double kappa);

CMat fermion_psi(const FermionModel& m, const CVec& s);
CMat fermion_chi(const FermionModel& m, const CVec& s);
CVec fermion_pack(const CMat& psi, const CMat& chi);

CVec fermion_eom(const FermionModel& m, const CVec& s);
cdcore::KahlerSystem fermion_kahler(const FermionModel& m);

double fermion_energy(const FermionModel& m, const CVec& s);  // Tr(psi* A psi)
// omega_{i1} + ... + omega_{ik} for strictly increasing 0-based indices.
double fermion_energy(const Vec& omegas, const std::vector<int>& levels);
// All k-subset sums in lexicographic index order.
std::vector<double> fermion_spectrum(const Vec& omegas, int k);

CMat fermion_q1(const FermionModel& m, const CVec& s);  // psi* psi - 1_k
CMat fermion_q2(const FermionModel& m, const CVec& s);  // chi chi* - 1_k
double fermion_qc(const FermionModel& m, const CVec& s, const CMat& C);
CMat fermion_projector(const FermionModel& m, const CVec& s);  // psi (chi psi)^{-1} chi

// psi = (e_{i1} .. e_{ik}) u*, chi = v psi*.
CVec fermion_exact(const FermionModel& m, const std::vector<int>& levels, const CMat& u, const CMat& v);

}  // namespace cdlab::models
