#pragma once
#include <string>

#include "cdlab/lie/resolvent.hpp"

namespace cdlab::lie {

struct GeneratorSpec {
  enum class Kind { u1_rotation, translation, euclidean, diagonal };
  Kind kind = Kind::u1_rotation;
  Vec payload;
};
std::string kind_name(GeneratorSpec::Kind k);

enum class Classification { spectral, non_spectral, unknown };
std::string classification_name(Classification c);

struct LieCandidate {
  Vec params;  // gauge-fixed coordinates of the model point
  CVec z;
  GeneratorSpec xi;
  double omega = 0.0;
  double epsilon = 0.0;
  double residual = 0.0;
  double consistency = 0.0;  // |A(z, xi) - omega| before omega is reset to A
  Classification classification = Classification::unknown;
  int iterations = 0;
  bool converged = false;
};

// A model whose Lie solutions are zeros of the finite spectral equations.
class LieModel {
 public:
  virtual ~LieModel() = default;
  virtual std::string name() const = 0;
  virtual int param_dim() const = 0;
  virtual int xi_dim() const = 0;
  virtual GeneratorSpec::Kind xi_kind() const = 0;
  virtual CVec point(const Vec& params) const = 0;
  virtual double hamiltonian(const CVec& z) const = 0;
  virtual double symbol(const CVec& z, const Vec& xi) const = 0;  // A(z, xi)
  virtual SpectralData spectral_data(const CVec& z, const Vec& xi) const = 0;
  virtual cplx resolvent(const CVec& z, const Vec& xi, double omega, double eps) const {
    return resolvent_discrete(spectral_data(z, xi), omega, eps);
  }
  virtual double guard(const CVec&) const { return 1.0; }
  virtual double guard_floor() const { return 1e-10; }
  // Seed near level n; `series` selects among model-specific seed families.
  virtual LieCandidate spectral_seed(int n, double eps, int series = 0) const = 0;
  // Largest eps for which spectral seeds are expected inside the Newton basin.
  virtual double seed_threshold() const = 0;
};

// [Re R, Re/Im d/dz_k (H - A + i eps log R) for each k, (A - omega) if with_consistency]
Vec lie_residual(const LieModel& model, const CVec& z, const Vec& xi, double omega, double epsilon,
                 bool with_consistency = false);

struct SolveOptions {
  double tol = 1e-10;
  int max_iter = 100;
  double fd_step = 1e-7;
  bool continuation = false;
  double eps_start = 0.0;  // 0: 0.2 * min level gap at the seed
  double ratio = 0.5;
  bool with_consistency = false;
  int restarts = 3;
};

LieCandidate solve_lie(const LieModel& model, const LieCandidate& seed, double epsilon, const SolveOptions& opts = {});

// eps^2 sum_{j != n} (rho_j / rho_n) / (omega_j - omega_n)
double deviation_second_order(int n, double epsilon, const SpectralData& sd);

LieCandidate spectral_seed(const LieModel& model, int n, double epsilon, int series = 0);

}  // namespace cdlab::lie
