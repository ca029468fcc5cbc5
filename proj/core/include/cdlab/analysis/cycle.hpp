#pragma once
#include <functional>
#include <string>
#include <vector>

#include "cdlab/cdcore/integrator.hpp"

namespace cdlab::analysis {

struct CycleOptions {
  double tol = 1e-6;              // successive returns must agree to this state distance
  double recurrence_tol = 1e-2;   // a section crossing within this distance counts as a return
  double fixed_point_speed = 1e-9;
  std::vector<int> angle_coords;  // compared modulo 2 pi
  std::function<double(const Vec&)> hamiltonian;  // optional energy candidate
  int fft_coord = -1;             // coordinate used for the FFT period seed; -1 picks the largest-variance one
};

struct CycleReport {
  bool converged = false;
  double period = 0.0;
  double fft_period = 0.0;  // 0 when unavailable
  double return_distance = 0.0;
  std::vector<double> t;    // one period of samples ending at the final state
  std::vector<Vec> x;
  CVec floquet_multipliers;
  double energy = 0.0;
  double energy_defect = 0.0;
  std::vector<double> quantization_integrals;
};

// Returns to the hyperplane through the final state orthogonal to the flow direction.
// Throws NoRecurrence (fixed point or no closing return) or NotConverged (returns still contracting).
CycleReport detect_cycle(const cdcore::Trajectory& traj, const CycleOptions& opts = {});

// Dominant period of one coordinate over the uniformly resampled tail of the trajectory; 0 if none.
double fft_period_estimate(const cdcore::Trajectory& traj, int coord, double t_from);

// Loop basis element: canonical pair (p index, q index) or a complex coordinate stored at (re, im),
// whose loop integral is the polar form of Im(zbar dz).
struct LoopSpec {
  enum class Kind { canonical, complex_polar } kind = Kind::canonical;
  int i = 0;
  int j = 1;
};
// Trapezoidal loop integrals of p dq over one period of samples; OpenLoop when the samples do not close.
std::vector<double> quantization_integral(const std::vector<Vec>& samples, const std::vector<LoopSpec>& loops,
                                          double close_tol = 1e-4, const std::vector<int>& angle_coords = {});

struct EnergyReport {
  double E = 0.0;
  double defect = 0.0;
};
EnergyReport hamiltonian_on_attractor(const std::function<double(const Vec&)>& H, const std::vector<Vec>& samples);

// Unwraps a sampled phase (values taken modulo 2 pi) and returns scale * (average phase rate) over t >= t_from.
// BranchJump when consecutive samples differ by more than pi/2 after unwrapping.
double action_rate(const std::vector<double>& t, const std::vector<double>& wrapped_phase, double scale = 1.0,
                   double t_from = -1e300);

// Max |Omega(e_a, e_b)| over local-PCA tangent bases of dimension d; 0 for d <= 1.
double isotropy_defect(const std::function<Mat(const Vec&)>& omega, const std::vector<Vec>& samples, int d,
                       int max_centers = 50);

}  // namespace cdlab::analysis
