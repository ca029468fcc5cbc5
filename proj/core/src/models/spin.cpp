#include "cdlab/models/spin.hpp"

#include <cmath>

#include "cdlab/errors.hpp"

namespace cdlab::models {

CVec spin_monomials(const Eigen::Vector2cd& s, int m) {
  CVec out(m + 1);
  for (int k = 0; k <= m; ++k)
    out[k] = std::pow(s[0], k) * std::pow(s[1], m - k) /
             std::sqrt(std::tgamma(k + 1.0) * std::tgamma(m - k + 1.0));
  return out;
}

std::pair<cplx, Eigen::Vector2cd> spin_wavefunction(const CVec& st, int m) {
  if (st.size() != m + 3)
    throw Error(Errc::InvalidArgument, "spin state needs m + 3 = " + std::to_string(m + 3) + " components");
  const cplx s1 = st[0], s2 = st[1];
  cplx F = 0.0;
  Eigen::Vector2cd dF = Eigen::Vector2cd::Zero();
  for (int k = 0; k <= m; ++k) {
    const double nrm = 1.0 / std::sqrt(std::tgamma(k + 1.0) * std::tgamma(m - k + 1.0));
    const cplx c = st[2 + k] * nrm;
    F += c * std::pow(s1, k) * std::pow(s2, m - k);
    if (k > 0) dF[0] += c * static_cast<double>(k) * std::pow(s1, k - 1) * std::pow(s2, m - k);
    if (m - k > 0) dF[1] += c * static_cast<double>(m - k) * std::pow(s1, k) * std::pow(s2, m - k - 1);
  }
  return {F, dF};
}

CVec spin_eom(const CVec& st, const SpinParams& p, SpinForm form) {
  const int m = p.m;
  const auto [F, dF] = spin_wavefunction(st, m);
  if (!(std::abs(F) > p.floor)) throw Error(Errc::SingularPoint, "spin: F(s) -> 0");
  const double e = p.epsilon;
  const Eigen::Vector2cd s(st[0], st[1]);
  const CVec mono = spin_monomials(s, m);
  CVec d(st.size());
  if (form == SpinForm::printed) {
    d[0] = (-e + I * (m * p.lambda / 2.0)) * s[0] + e * dF[0] / F;
    d[1] = (-e - I * (m * p.lambda / 2.0)) * s[1] + e * dF[1] / F;
    for (int k = 0; k <= m; ++k) d[2 + k] = -e * st[2 + k] + e * std::conj(mono[k]) / F;
  } else {
    const cplx Fc = std::conj(F);
    d[0] = I * (-p.lambda / 2.0) * s[0] - e * (s[0] - std::conj(dF[0]) / Fc);
    d[1] = I * (p.lambda / 2.0) * s[1] - e * (s[1] - std::conj(dF[1]) / Fc);
    for (int k = 0; k <= m; ++k) d[2 + k] = -e * (st[2 + k] - std::conj(mono[k]) / Fc);
  }
  return d;
}

cdcore::KahlerSystem spin_kahler(const SpinParams& p) {
  cdcore::KahlerSystem ks;
  const int m = p.m;
  const double lam = p.lambda;
  ks.name = "spin";
  ks.n = m + 3;
  ks.epsilon = p.epsilon;
  ks.U = [m](const CVec& st) { return st.squaredNorm() - std::log(std::norm(spin_wavefunction(st, m).first)); };
  ks.H = [lam](const CVec& st) { return 0.5 * lam * (std::norm(st[1]) - std::norm(st[0])); };
  ks.dU_bar = [m](const CVec& st) {
    const auto [F, dF] = spin_wavefunction(st, m);
    const cplx Fc = std::conj(F);
    const CVec mono = spin_monomials(Eigen::Vector2cd(st[0], st[1]), m);
    CVec d(st.size());
    d[0] = st[0] - std::conj(dF[0]) / Fc;
    d[1] = st[1] - std::conj(dF[1]) / Fc;
    for (int k = 0; k <= m; ++k) d[2 + k] = st[2 + k] - std::conj(mono[k]) / Fc;
    return d;
  };
  ks.dH_bar = [lam](const CVec& st) {
    CVec d = CVec::Zero(st.size());
    d[0] = -0.5 * lam * st[0];
    d[1] = 0.5 * lam * st[1];
    return d;
  };
  const int n = ks.n;
  ks.metric = [n](const CVec&) { return CMat::Identity(n, n); };
  ks.guard = [m](const CVec& st) { return std::abs(spin_wavefunction(st, m).first); };
  ks.guard_floor = p.floor;
  return ks;
}

Eigen::Vector3d spin_vector(const Eigen::Vector2cd& s, int m) {
  const double n2 = s.squaredNorm();
  if (!(n2 > 1e-300)) throw Error(Errc::ZeroSpinor, "spin_vector of the zero spinor");
  const cplx c = std::conj(s[0]) * s[1];
  // s* sigma1 s = 2 Re(conj(s1) s2), s* sigma2 s = 2 Im(conj(s1) s2), s* sigma3 s = |s1|^2 - |s2|^2
  const double f = -0.5 * m / n2;
  return {f * 2.0 * c.real(), f * 2.0 * c.imag(), f * (std::norm(s[0]) - std::norm(s[1]))};
}

double spin_hamiltonian(const Eigen::Vector2cd& s, int m, double lambda) { return lambda * spin_vector(s, m)[2]; }

double spin_q1(const CVec& st, int m) { return st.segment(2, m + 1).squaredNorm() - 1.0; }
double spin_q2(const CVec& st, int m) { return std::norm(st[0]) + std::norm(st[1]) - m; }

}  // namespace cdlab::models
