#include "cdlab/models/matrix.hpp"

#include <cmath>

#include "cdlab/errors.hpp"

namespace cdlab::models {

MatrixModel matrix_model(const CMat& A, double kappa) {
  MatrixModel m;
  m.N = static_cast<int>(A.rows());
  m.A = A;
  m.epsilon = 0.5 * kappa;
  return m;
}

cplx matrix_pairing(const CVec& s) {
  const Eigen::Index N = s.size() / 2;
  return (s.tail(N).transpose() * s.head(N))(0);
}

CVec matrix_eom(const MatrixModel& m, const CVec& s) {
  const int N = m.N;
  const cplx cp = matrix_pairing(s);
  if (!(std::abs(cp) > m.floor)) throw Error(Errc::SingularPoint, "matrix model: chi psi -> 0");
  const auto psi = s.head(N);
  const auto chi = s.tail(N);
  const double e = m.epsilon;
  CVec d(2 * N);
  d.head(N) = I * (m.A * psi) - e * psi + e * (chi / cp).conjugate();
  d.tail(N) = -e * chi + e * (psi / cp).conjugate();
  return d;
}

cdcore::KahlerSystem matrix_kahler(const MatrixModel& m) {
  cdcore::KahlerSystem ks;
  ks.name = "matrix";
  ks.n = 2 * m.N;
  ks.epsilon = m.epsilon;
  const int N = m.N;
  const CMat A = m.A;
  ks.U = [N](const CVec& s) { return s.squaredNorm() - std::log(std::norm(matrix_pairing(s))); };
  ks.H = [A, N](const CVec& s) { return (s.head(N).adjoint() * A * s.head(N))(0).real(); };
  ks.dU_bar = [N](const CVec& s) {
    const cplx cpc = std::conj(matrix_pairing(s));
    CVec d(2 * N);
    d.head(N) = s.head(N) - s.tail(N).conjugate() / cpc;
    d.tail(N) = s.tail(N) - s.head(N).conjugate() / cpc;
    return d;
  };
  ks.dH_bar = [A, N](const CVec& s) {
    CVec d = CVec::Zero(2 * N);
    d.head(N) = A * s.head(N);
    return d;
  };
  ks.metric = [N](const CVec&) { return CMat::Identity(2 * N, 2 * N); };
  ks.guard = [](const CVec& s) { return std::abs(matrix_pairing(s)); };
  ks.guard_floor = m.floor;
  return ks;
}

cdcore::KahlerSystem matrix_kahler_fd(const MatrixModel& m) {
  const auto a = matrix_kahler(m);
  auto ks = cdcore::kahler_from_potential("matrix_fd", a.n, a.epsilon, a.U, a.H);
  ks.guard = a.guard;
  ks.guard_floor = a.guard_floor;
  return ks;
}

double matrix_energy(const MatrixModel& m, const CVec& s) {
  return (s.head(m.N).adjoint() * m.A * s.head(m.N))(0).real();
}

double matrix_q1(const CVec& s) { return s.head(s.size() / 2).squaredNorm() - 1.0; }
double matrix_q2(const CVec& s) { return s.tail(s.size() / 2).squaredNorm() - 1.0; }

double matrix_qc(const CVec& s, const CMat& C) {
  const Eigen::Index N = s.size() / 2;
  const CVec psi = s.head(N), chi = s.tail(N);
  return ((psi.adjoint() * C * psi)(0) - (chi.transpose() * C * chi.conjugate())(0)).real();
}

CVec matrix_series1(const MatrixModel& m, int level, double phase) {
  if (level < 0 || level >= m.N) throw Error(Errc::NoSuchLevel, "matrix level out of range");
  Eigen::SelfAdjointEigenSolver<CMat> es(m.A);
  const CVec x = es.eigenvectors().col(level);
  CVec s(2 * m.N);
  s.head(m.N) = x;
  s.tail(m.N) = std::exp(I * phase) * x.conjugate();
  return s;
}

Series2 matrix_series2(int a, int b, const Vec& w, double kappa) {
  const int N = static_cast<int>(w.size());
  if (a < 0 || b < 0 || a >= N || b >= N) throw Error(Errc::NoSuchLevel, "series-2 index out of range");
  if (a == b || std::abs(w[a] - w[b]) < 1e-14) throw Error(Errc::DegeneratePair, "omega_a == omega_b");
  Series2 s;
  s.lambda = (w[a] + w[b]) / (2.0 * kappa);
  const cplx r = I * (w[b] - w[a]) / (2.0 * kappa);
  s.phase = (1.0 + r) / (1.0 - r);
  s.omega = 0.5 * (w[a] + w[b]);
  s.c = Vec::Zero(N);
  s.c[a] = 0.25 * (w[a] - w[b]);
  s.c[b] = -s.c[a];
  const double h = std::sqrt(0.5);
  s.x = CVec::Zero(N);
  s.y = CVec::Zero(N);
  s.x[a] = s.x[b] = h;
  s.y[a] = h;
  s.y[b] = s.phase * h;  // y_b x_b = y_a x_a * phase
  return s;
}

CVec matrix_series2_state(const Series2& s, double t) {
  const Eigen::Index N = s.x.size();
  CVec st(2 * N);
  for (Eigen::Index k = 0; k < N; ++k) {
    st[k] = std::exp(I * (s.c[k] + s.omega) * t) * s.x[k];
    st[N + k] = s.y[k] * std::exp(-I * s.c[k] * t);
  }
  return st;
}

std::pair<double, double> matrix_rates(double mu, double kappa) {
  return {mu * mu / (2.0 * kappa), mu * mu / (4.0 * kappa)};
}

}  // namespace cdlab::models
