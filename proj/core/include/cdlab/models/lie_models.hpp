#pragma once
#include "cdlab/lie/solver.hpp"

namespace cdlab::models {

// CS oscillator. params = [p] with z = sqrt(p) (gauge: z real); xi = [rotation rate].
// Levels k xi with Poisson(|z|^2) weights, H = omega0 |z|^2, A = xi |z|^2.
class OscillatorLie : public lie::LieModel {
 public:
  explicit OscillatorLie(double omega0 = 1.0) : omega0_(omega0) {}
  std::string name() const override { return "cs_oscillator"; }
  int param_dim() const override { return 1; }
  int xi_dim() const override { return 1; }
  lie::GeneratorSpec::Kind xi_kind() const override { return lie::GeneratorSpec::Kind::u1_rotation; }
  CVec point(const Vec& params) const override;
  double hamiltonian(const CVec& z) const override;
  double symbol(const CVec& z, const Vec& xi) const override;
  lie::SpectralData spectral_data(const CVec& z, const Vec& xi) const override;
  double guard(const CVec& z) const override { return std::norm(z[0]); }
  // series 0: stable seeds, series 1: unstable seeds
  lie::LieCandidate spectral_seed(int n, double eps, int series = 0) const override;
  double seed_threshold() const override { return omega0_ / 20.0; }
  double omega0() const { return omega0_; }

 private:
  double omega0_;
};

// Spin model reduced to the spinor. params = [theta], s = sqrt(m)(sin theta, cos theta);
// xi = [a]; levels (2k - m) a with binomial weights, H = lambda S3, A = -2 a S3.
class SpinLie : public lie::LieModel {
 public:
  SpinLie(int m, double lambda) : m_(m), lambda_(lambda) {}
  std::string name() const override { return "spin"; }
  int param_dim() const override { return 1; }
  int xi_dim() const override { return 1; }
  lie::GeneratorSpec::Kind xi_kind() const override { return lie::GeneratorSpec::Kind::u1_rotation; }
  CVec point(const Vec& params) const override;
  double hamiltonian(const CVec& s) const override;
  double symbol(const CVec& s, const Vec& xi) const override;
  lie::SpectralData spectral_data(const CVec& s, const Vec& xi) const override;
  double guard(const CVec& s) const override { return s.squaredNorm(); }
  lie::LieCandidate spectral_seed(int n, double eps, int series = 0) const override;
  double seed_threshold() const override { return 0.2 * std::abs(lambda_); }
  int m() const { return m_; }
  double lambda() const { return lambda_; }

 private:
  int m_;
  double lambda_;
};

// Matrix model with generator C = 0. params = (Re chi, Im chi); levels are the eigenvalues of A
// with weights |chi x_j|^2 / chi chi*, and A(z, 0) is the symbol chi A chi* / chi chi*.
class MatrixLie : public lie::LieModel {
 public:
  explicit MatrixLie(const CMat& A);
  std::string name() const override { return "matrix"; }
  int param_dim() const override { return 2 * static_cast<int>(A_.rows()); }
  int xi_dim() const override { return 0; }
  lie::GeneratorSpec::Kind xi_kind() const override { return lie::GeneratorSpec::Kind::diagonal; }
  CVec point(const Vec& params) const override;
  double hamiltonian(const CVec&) const override { return 0.0; }
  double symbol(const CVec& chi, const Vec& xi) const override;
  lie::SpectralData spectral_data(const CVec& chi, const Vec& xi) const override;
  double guard(const CVec& chi) const override { return chi.norm(); }
  lie::LieCandidate spectral_seed(int n, double eps, int series = 0) const override;
  double seed_threshold() const override;

 private:
  CMat A_;
  Vec levels_;
  CMat vecs_;
};

}  // namespace cdlab::models
