#include <cmath>

#include "cdlab/cdcore/field.hpp"
#include "cdlab/errors.hpp"

namespace cdlab::cdcore {

namespace {

Eigen::LLT<CMat> metric_llt_transposed(const KahlerSystem& ks, const CVec& z) {
  const CMat G = ks.metric(z);
  if (!G.allFinite()) throw Error(Errc::MetricDegenerate, ks.name + ": non-finite metric");
  if ((G - G.adjoint()).norm() > 1e-8 * (1.0 + G.norm()))
    throw Error(Errc::MetricDegenerate, ks.name + ": metric not Hermitian");
  Eigen::LLT<CMat> llt(G.transpose());
  if (llt.info() != Eigen::Success) throw Error(Errc::MetricDegenerate, ks.name + ": metric not positive definite");
  return llt;
}

}  // namespace

CVec kahler_field(const KahlerSystem& ks, const CVec& z) {
  if (ks.guard && !(ks.guard(z) >= ks.guard_floor))
    throw Error(Errc::SingularPoint, ks.name + ": guard below floor");
  const CVec rhs = I * ks.dH_bar(z) - ks.epsilon * ks.dU_bar(z);
  return metric_llt_transposed(ks, z).solve(rhs);
}

CdSystem kahler_as_cd(const KahlerSystem& ks) {
  CdSystem sys;
  sys.name = ks.name;
  sys.dim = 2 * ks.n;
  sys.kappa = 2.0 * ks.epsilon;
  const double kappa = sys.kappa;
  sys.alpha = [ks, kappa](const Vec& x, double) {
    const CVec z = unpack(x);
    const CVec u = ks.dU_bar(z);
    const CVec h = ks.dH_bar(z);
    Vec a(x.size());
    for (int k = 0; k < ks.n; ++k) {
      a[2 * k] = -u[k].imag() + 2.0 / kappa * h[k].real();
      a[2 * k + 1] = u[k].real() + 2.0 / kappa * h[k].imag();
    }
    return a;
  };
  sys.omega = [ks](const Vec& x, double) {
    const CMat G = ks.metric(unpack(x));
    Mat W = Mat::Zero(2 * ks.n, 2 * ks.n);
    for (int a = 0; a < ks.n; ++a)
      for (int b = 0; b < ks.n; ++b) {
        const double S = G(a, b).real(), A = G(a, b).imag();
        W(2 * a, 2 * b) += -2.0 * A;
        W(2 * a + 1, 2 * b + 1) += -2.0 * A;
        W(2 * a, 2 * b + 1) += 2.0 * S;
        W(2 * b + 1, 2 * a) -= 2.0 * S;
      }
    return W;
  };
  if (ks.guard) {
    auto g = ks.guard;
    sys.guard = [g](const Vec& x) { return g(unpack(x)); };
    sys.guard_floor = ks.guard_floor;
  }
  auto H = ks.H;
  sys.hamiltonian = [H](const Vec& x) { return H(unpack(x)); };
  return sys;
}

PotentialRate potential_rate_terms(const KahlerSystem& ks, const CVec& z) {
  const auto llt = metric_llt_transposed(ks, z);
  const CVec u = ks.dU_bar(z);
  const CVec uz = u.conjugate();  // dU/dz_i for real U
  PotentialRate r;
  r.bracket = 2.0 * (uz.transpose() * llt.solve(I * ks.dH_bar(z)))(0).real();
  r.grad_sq = 2.0 * (uz.transpose() * llt.solve(u))(0).real();
  r.rate = r.bracket - ks.epsilon * r.grad_sq;
  return r;
}

double potential_rate(const KahlerSystem& ks, const CVec& z) { return potential_rate_terms(ks, z).rate; }

}  // namespace cdlab::cdcore
