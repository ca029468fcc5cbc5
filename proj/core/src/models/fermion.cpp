#include "cdlab/models/fermion.hpp"

#include <cmath>

#include "cdlab/errors.hpp"

namespace cdlab::models {

FermionModel fermion_model(const CMat& A, int k, double kappa) {
  FermionModel m;
  m.N = static_cast<int>(A.rows());
  m.k = k;
  m.A = A;
  m.epsilon = 0.5 * kappa;
  return m;
}

CMat fermion_psi(const FermionModel& m, const CVec& s) {
  return Eigen::Map<const CMat>(s.data(), m.N, m.k);
}

CMat fermion_chi(const FermionModel& m, const CVec& s) {
  return Eigen::Map<const CMat>(s.data() + m.N * m.k, m.k, m.N);
}

CVec fermion_pack(const CMat& psi, const CMat& chi) {
  CVec s(psi.size() + chi.size());
  s.head(psi.size()) = Eigen::Map<const CVec>(psi.data(), psi.size());
  s.tail(chi.size()) = Eigen::Map<const CVec>(chi.data(), chi.size());
  return s;
}

CVec fermion_eom(const FermionModel& m, const CVec& s) {
  const CMat psi = fermion_psi(m, s), chi = fermion_chi(m, s);
  const CMat cp = chi * psi;
  const cplx det = cp.determinant();
  if (!(std::abs(det) > m.floor)) throw Error(Errc::SingularPoint, "fermion model: det(chi psi) -> 0");
  const CMat inv = cp.adjoint().inverse();  // (psi* chi*)^{-1}
  const double e = m.epsilon;
  const CMat dpsi = I * (m.A * psi) - e * psi + e * chi.adjoint() * inv;
  const CMat dchi = -e * chi + e * inv * psi.adjoint();
  return fermion_pack(dpsi, dchi);
}

cdcore::KahlerSystem fermion_kahler(const FermionModel& m) {
  cdcore::KahlerSystem ks;
  ks.name = "fermion";
  ks.n = 2 * m.N * m.k;
  ks.epsilon = m.epsilon;
  const FermionModel mm = m;
  ks.U = [mm](const CVec& s) {
    return s.squaredNorm() - std::log(std::norm((fermion_chi(mm, s) * fermion_psi(mm, s)).determinant()));
  };
  ks.H = [mm](const CVec& s) { return fermion_energy(mm, s); };
  ks.dU_bar = [mm](const CVec& s) {
    const CMat psi = fermion_psi(mm, s), chi = fermion_chi(mm, s);
    const CMat inv = (chi * psi).adjoint().inverse();
    // d log det(chi psi)/d psi = (chi psi)^{-T} chi^T, conjugated for the zbar derivative
    return fermion_pack(psi - chi.adjoint() * inv, chi - inv * psi.adjoint());
  };
  ks.dH_bar = [mm](const CVec& s) {
    const CMat psi = fermion_psi(mm, s);
    return fermion_pack(mm.A * psi, CMat::Zero(mm.k, mm.N));
  };
  const int n = ks.n;
  ks.metric = [n](const CVec&) { return CMat::Identity(n, n); };
  ks.guard = [mm](const CVec& s) { return std::abs((fermion_chi(mm, s) * fermion_psi(mm, s)).determinant()); };
  ks.guard_floor = m.floor;
  return ks;
}

double fermion_energy(const FermionModel& m, const CVec& s) {
  const CMat psi = fermion_psi(m, s);
  return (psi.adjoint() * m.A * psi).trace().real();
}

double fermion_energy(const Vec& w, const std::vector<int>& levels) {
  double e = 0.0;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    if (levels[j] < 0 || levels[j] >= w.size() || (j > 0 && levels[j] <= levels[j - 1]))
      throw Error(Errc::BadIndexSet, "indices must be strictly increasing and in range");
    e += w[levels[j]];
  }
  return e;
}

std::vector<double> fermion_spectrum(const Vec& w, int k) {
  std::vector<double> out;
  const int N = static_cast<int>(w.size());
  std::vector<int> idx(k);
  for (int j = 0; j < k; ++j) idx[j] = j;
  if (k == 0) return {0.0};
  if (k > N) return out;
  while (true) {
    out.push_back(fermion_energy(w, idx));
    int j = k - 1;
    while (j >= 0 && idx[j] == N - k + j) --j;
    if (j < 0) break;
    ++idx[j];
    for (int l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
  }
  return out;
}

CMat fermion_q1(const FermionModel& m, const CVec& s) {
  const CMat psi = fermion_psi(m, s);
  return psi.adjoint() * psi - CMat::Identity(m.k, m.k);
}

CMat fermion_q2(const FermionModel& m, const CVec& s) {
  const CMat chi = fermion_chi(m, s);
  return chi * chi.adjoint() - CMat::Identity(m.k, m.k);
}

double fermion_qc(const FermionModel& m, const CVec& s, const CMat& C) {
  const CMat psi = fermion_psi(m, s), chi = fermion_chi(m, s);
  return (psi.adjoint() * C * psi - chi * C * chi.adjoint()).trace().real();
}

CMat fermion_projector(const FermionModel& m, const CVec& s) {
  const CMat psi = fermion_psi(m, s), chi = fermion_chi(m, s);
  return psi * (chi * psi).inverse() * chi;
}

CVec fermion_exact(const FermionModel& m, const std::vector<int>& levels, const CMat& u, const CMat& v) {
  if (static_cast<int>(levels.size()) != m.k) throw Error(Errc::BadIndexSet, "need k levels");
  Eigen::SelfAdjointEigenSolver<CMat> es(m.A);
  CMat E(m.N, m.k);
  for (int j = 0; j < m.k; ++j) {
    if (levels[j] < 0 || levels[j] >= m.N || (j > 0 && levels[j] <= levels[j - 1]))
      throw Error(Errc::BadIndexSet, "indices must be strictly increasing and in range");
    E.col(j) = es.eigenvectors().col(levels[j]);
  }
  const CMat psi = E * u.adjoint();
  return fermion_pack(psi, v * psi.adjoint());
}

}  // namespace cdlab::models
