#include "cdlab/analysis/floquet.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "cdlab/cdcore/integrator.hpp"
#include "cdlab/errors.hpp"

namespace cdlab::analysis {

namespace {

CVec sorted_desc(CVec v) {
  std::sort(v.data(), v.data() + v.size(), [](cplx a, cplx b) { return std::abs(a) > std::abs(b); });
  return v;
}

// Augmented system [x, M] with dM/dt = Df(x) M; Df M by directional differences column by column.
cdcore::OdeProblem variational(const VectorFn& f, Eigen::Index n, Eigen::Index cols) {
  cdcore::OdeProblem p;
  p.rhs = [f, n, cols](const Vec& y, double, Vec& dy) {
    const Vec x = y.head(n);
    const Vec fx = f(x);
    dy.resize(y.size());
    dy.head(n) = fx;
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Vec v = y.segment(n + c * n, n);
      const double vn = v.norm();
      if (vn == 0.0) {
        dy.segment(n + c * n, n).setZero();
        continue;
      }
      const double h = 1e-6 * (1.0 + x.norm()) / vn;
      dy.segment(n + c * n, n) = (f(x + h * v) - f(x - h * v)) / (2.0 * h);
    }
  };
  return p;
}

}  // namespace

CVec floquet(const VectorFn& f, const Vec& x0, double T, double tol) {
  if (!(T > 0)) throw Error(Errc::InvalidArgument, "floquet needs T > 0");
  const Eigen::Index n = x0.size();
  Vec y(n + n * n);
  y.head(n) = x0;
  Mat Id = Mat::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) y.segment(n + c * n, n) = Id.col(c);
  cdcore::IntegrateOptions o;
  o.abs_tol = o.rel_tol = tol;
  const Vec yT = cdcore::integrate_to(variational(f, n, n), y, 0.0, T, o);
  Mat M(n, n);
  for (Eigen::Index c = 0; c < n; ++c) M.col(c) = yT.segment(n + c * n, n);
  Eigen::EigenSolver<Mat> es(M, false);
  return sorted_desc(es.eigenvalues());
}

CVec floquet_relative(const VectorFn& W, const Vec& x0, double T, double h) {
  const Mat D = fd_jacobian(W, x0, h);
  Eigen::EigenSolver<Mat> es(D, false);
  CVec lam = es.eigenvalues();
  for (Eigen::Index k = 0; k < lam.size(); ++k) lam[k] = std::exp(T * lam[k]);
  return sorted_desc(lam);
}

Vec lyapunov_exponents(const VectorFn& f, const Vec& x0, double t_total, int k, double renorm_dt, double tol) {
  const Eigen::Index n = x0.size();
  k = std::min<int>(k, static_cast<int>(n));
  Mat Q = Mat::Identity(n, k);
  Vec x = x0;
  Vec sums = Vec::Zero(k);
  cdcore::IntegrateOptions o;
  o.abs_tol = o.rel_tol = tol;
  const auto prob = variational(f, n, k);
  double t = 0.0;
  while (t < t_total - 1e-12) {
    const double dt = std::min(renorm_dt, t_total - t);
    Vec y(n + n * k);
    y.head(n) = x;
    for (int c = 0; c < k; ++c) y.segment(n + c * n, n) = Q.col(c);
    const Vec yT = cdcore::integrate_to(prob, y, 0.0, dt, o);
    x = yT.head(n);
    Mat Y(n, k);
    for (int c = 0; c < k; ++c) Y.col(c) = yT.segment(n + c * n, n);
    Eigen::HouseholderQR<Mat> qr(Y);
    const Mat R = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    Mat Qf = qr.householderQ() * Mat::Identity(n, k);
    for (int c = 0; c < k; ++c) {
      double r = R(c, c);
      if (r < 0) Qf.col(c) = -Qf.col(c);
      sums[c] += std::log(std::abs(r));
    }
    Q = Qf;
    t += dt;
  }
  return sums / t_total;
}

std::pair<int, double> trivial_multiplier(const CVec& mult) {
  int best = -1;
  double d = 1e300;
  for (Eigen::Index k = 0; k < mult.size(); ++k)
    if (std::abs(mult[k] - 1.0) < d) {
      d = std::abs(mult[k] - 1.0);
      best = static_cast<int>(k);
    }
  return {best, d};
}

}  // namespace cdlab::analysis
