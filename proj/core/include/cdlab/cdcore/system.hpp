#pragma once
#include <functional>
#include <string>
#include <vector>

#include "cdlab/types.hpp"

namespace cdlab::cdcore {

struct PhaseState {
  Vec x;
  double t = 0.0;
};

// A CD-system given by its defining form. The dynamic field is V = kappa * Omega^{-1} alpha
// with Omega_ij = d_i alpha_j - d_j alpha_i.
//
// Sign convention, fixed here and nowhere else: for x = (p, q) and alpha = p dq the form is
// Omega = [[0, 1], [-1, 0]], the Hamiltonian field of F is X_F = Omega^{-1} dF and
// {F, G} = dG . X_F, so {p, q} = +1 and alpha = p dq + kappa^{-1} dH gives
// dp/dt = -H_q - kappa p, dq/dt = H_p.
struct CdSystem {
  std::string name;
  int dim = 2;
  double kappa = 1.0;
  std::function<Vec(const Vec&, double)> alpha;
  // Optional analytic d(alpha); central differences are used when empty.
  std::function<Mat(const Vec&, double)> omega;
  // Optional singular guard; the point is singular when guard(x) < guard_floor.
  std::function<double(const Vec&)> guard;
  double guard_floor = 1e-10;
  double degeneracy_floor = 1e-10;
  // Physical Hamiltonian candidate, if the model registers one.
  std::function<double(const Vec&)> hamiltonian;
  // Declared quasi-integrals (name, function).
  std::vector<std::pair<std::string, std::function<double(const Vec&)>>> quasi_integrals;
  // Coordinates that are angles (used only by analyses that unwrap phases).
  std::vector<int> angle_coords;
};

// Kahler CD-system on C^n: dz/dt solves sum_i U_{i kbar} dz_i/dt = i H_kbar - eps U_kbar.
struct KahlerSystem {
  std::string name;
  int n = 1;
  double epsilon = 0.5;
  std::function<double(const CVec&)> U;
  std::function<double(const CVec&)> H;
  std::function<CVec(const CVec&)> dU_bar;  // dU/dzbar_k
  std::function<CVec(const CVec&)> dH_bar;  // dH/dzbar_k
  std::function<CMat(const CVec&)> metric;  // G(i,k) = d^2 U / dz_i dzbar_k
  std::function<double(const CVec&)> guard;
  double guard_floor = 1e-10;
};

// Kahler system whose derivatives are all taken by finite differences of U and H.
KahlerSystem kahler_from_potential(std::string name, int n, double epsilon,
                                   std::function<double(const CVec&)> U,
                                   std::function<double(const CVec&)> H);

}  // namespace cdlab::cdcore
