#pragma once
#include <functional>
#include <vector>

#include "cdlab/types.hpp"

namespace cdlab::relsym {

// Geodesic motion on R^3 x S^1 with H0 = E (1 + U(x)), E = sqrt(p^2 + m^2).
// State layout: [x(3), p(3), s, m, tau].
struct CylinderPotential {
  std::vector<Eigen::Vector3d> centers;
  std::vector<double> strengths;  // k E_a; U = -sum strength / |x - x_a|
  double U(const Eigen::Vector3d& x) const;
  Eigen::Vector3d gradU(const Eigen::Vector3d& x) const;
};

constexpr double kSurfaceFloor = 1e-6;

// Throws SurfaceReached when 1 + U < kSurfaceFloor.
Vec cylinder_eom(const Vec& state, const CylinderPotential& pot);
double cylinder_speed_defect(const Vec& state, const CylinderPotential& pot);  // |xdot|^2 + sdot^2 - (1+U)^2
double cylinder_energy(const Vec& state);  // E = sqrt(p^2 + m^2)
double cylinder_hamiltonian(const Vec& state, const CylinderPotential& pot);

struct CylinderRun {
  std::vector<double> t;
  std::vector<Vec> x;
  bool surface_reached = false;
  double t_event = 0.0;
};
// Samples every dt until t_end or until the trajectory reaches the surface 1 + U = kSurfaceFloor.
CylinderRun cylinder_integrate(const Vec& state0, const CylinderPotential& pot, double t_end, double dt,
                               double tol = 1e-11);

// Boosted free particle: theta = e^{kappa beta q}[p dq - H dt - dS], H = sqrt(p^2 + m^2), S = b q - E t.
struct BoostedParams {
  double m = 1.0;
  double b = 0.0;
  double kappa = 1.0;
  double v = 0.0;  // alpha = 1/sqrt(1 - v^2), beta = alpha v
  double alpha() const;
  double beta() const;
};
// pdot = -H_q - alpha kappa (p - S_q) + kappa beta (H + S_t), qdot = H_p; state (p, q).
Vec boosted_cd_eom(const Vec& state, const BoostedParams& prm);
// Linearised decay rate of p - b: kappa (alpha - beta b / E).
double boosted_decay_rate(const BoostedParams& prm);

}  // namespace cdlab::relsym
