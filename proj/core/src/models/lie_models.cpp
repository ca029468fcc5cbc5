#include "cdlab/models/lie_models.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "cdlab/errors.hpp"
#include "cdlab/models/oscillator.hpp"
#include "cdlab/models/spin.hpp"

namespace cdlab::models {

using lie::LieCandidate;
using lie::SpectralData;

CVec OscillatorLie::point(const Vec& params) const {
  CVec z(1);
  z[0] = params[0] > 0 ? std::sqrt(params[0]) : 0.0;
  return z;
}

double OscillatorLie::hamiltonian(const CVec& z) const { return omega0_ * std::norm(z[0]); }
double OscillatorLie::symbol(const CVec& z, const Vec& xi) const { return xi[0] * std::norm(z[0]); }

SpectralData OscillatorLie::spectral_data(const CVec& z, const Vec& xi) const {
  const double p = std::norm(z[0]);
  std::vector<double> w;
  if (p == 0.0) {
    w.push_back(1.0);
  } else {
    const double lp = std::log(p);
    const double peak = std::floor(p);
    const double wmax = std::exp(peak * lp - p - std::lgamma(peak + 1.0));
    for (int k = 0;; ++k) {
      const double wk = std::exp(k * lp - p - std::lgamma(k + 1.0));
      w.push_back(wk);
      if ((k > p && wk < 1e-17 * wmax) || k > 100000) break;
    }
  }
  SpectralData sd;
  const Eigen::Index K = static_cast<Eigen::Index>(w.size());
  sd.omega.resize(K);
  sd.rho.resize(K);
  for (Eigen::Index k = 0; k < K; ++k) {
    // keep levels ascending for either sign of xi
    const Eigen::Index idx = xi[0] >= 0 ? k : K - 1 - k;
    sd.omega[idx] = static_cast<double>(k) * xi[0];
    sd.rho[idx] = w[k];
  }
  return sd;
}

LieCandidate OscillatorLie::spectral_seed(int n, double eps, int series) const {
  if (n < 1) throw Error(Errc::NoSuchLevel, "oscillator levels start at n = 1");
  const double mu = omega0_ / eps;
  const auto [p, q] = oscillator_seed(n, mu, series == 0 ? OscSeries::stable : OscSeries::unstable);
  LieCandidate c;
  c.params = Vec::Constant(1, p);
  c.z = point(c.params);
  c.xi.kind = xi_kind();
  c.xi.payload = Vec::Constant(1, eps / q);
  c.omega = p * eps / q;
  c.epsilon = eps;
  return c;
}

CVec SpinLie::point(const Vec& params) const {
  CVec s(2);
  const double r = std::sqrt(static_cast<double>(m_));
  s[0] = r * std::sin(params[0]);
  s[1] = r * std::cos(params[0]);
  return s;
}

double SpinLie::hamiltonian(const CVec& s) const { return lambda_ * spin_vector(Eigen::Vector2cd(s[0], s[1]), m_)[2]; }

double SpinLie::symbol(const CVec& s, const Vec& xi) const {
  return -2.0 * xi[0] * spin_vector(Eigen::Vector2cd(s[0], s[1]), m_)[2];
}

SpectralData SpinLie::spectral_data(const CVec& s, const Vec& xi) const {
  const double u = std::norm(s[0]) / s.squaredNorm();
  SpectralData sd;
  sd.omega.resize(m_ + 1);
  sd.rho.resize(m_ + 1);
  for (int k = 0; k <= m_; ++k) {
    const int idx = xi[0] >= 0 ? k : m_ - k;
    const double binom = std::exp(std::lgamma(m_ + 1.0) - std::lgamma(k + 1.0) - std::lgamma(m_ - k + 1.0));
    sd.omega[idx] = (2.0 * k - m_) * xi[0];
    sd.rho[idx] = binom * std::pow(u, k) * std::pow(1.0 - u, m_ - k);
  }
  return sd;
}

LieCandidate SpinLie::spectral_seed(int n, double eps, int) const {
  if (n < 0 || n > m_) throw Error(Errc::NoSuchLevel, "spin level index must lie in [0, m]");
  LieCandidate c;
  c.params = Vec::Constant(1, std::asin(std::sqrt(static_cast<double>(n) / m_)));
  c.z = point(c.params);
  c.xi.kind = xi_kind();
  c.xi.payload = Vec::Constant(1, -0.5 * lambda_);
  c.omega = (2.0 * n - m_) * (-0.5 * lambda_);
  c.epsilon = eps;
  return c;
}

MatrixLie::MatrixLie(const CMat& A) : A_(A) {
  Eigen::SelfAdjointEigenSolver<CMat> es(A);
  levels_ = es.eigenvalues();
  vecs_ = es.eigenvectors();
}

CVec MatrixLie::point(const Vec& params) const {
  const Eigen::Index N = A_.rows();
  CVec chi(N);
  for (Eigen::Index i = 0; i < N; ++i) chi[i] = cplx(params[i], params[N + i]);
  return chi;
}

double MatrixLie::symbol(const CVec& chi, const Vec&) const {
  // chi is a row vector: chi A chi* = sum chi_i A_ij conj(chi_j)
  return (chi.transpose() * A_ * chi.conjugate())(0, 0).real() / chi.squaredNorm();
}

SpectralData MatrixLie::spectral_data(const CVec& chi, const Vec&) const {
  SpectralData sd;
  sd.omega = levels_;
  sd.rho.resize(levels_.size());
  const double n2 = chi.squaredNorm();
  for (Eigen::Index j = 0; j < levels_.size(); ++j)
    sd.rho[j] = std::norm((chi.transpose() * vecs_.col(j))(0, 0)) / n2;
  return sd;
}

LieCandidate MatrixLie::spectral_seed(int n, double eps, int) const {
  if (n < 0 || n >= levels_.size()) throw Error(Errc::NoSuchLevel, "matrix level index out of range");
  const Eigen::Index N = A_.rows();
  const CVec chi = vecs_.col(n).conjugate();
  LieCandidate c;
  c.params.resize(2 * N);
  for (Eigen::Index i = 0; i < N; ++i) {
    c.params[i] = chi[i].real();
    c.params[N + i] = chi[i].imag();
  }
  c.z = chi;
  c.xi.kind = xi_kind();
  c.xi.payload = Vec(0);
  c.omega = levels_[n];
  c.epsilon = eps;
  return c;
}

double MatrixLie::seed_threshold() const {
  double g = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 1; j < levels_.size(); ++j) g = std::min(g, levels_[j] - levels_[j - 1]);
  return 0.2 * g;
}

}  // namespace cdlab::models
