#include "cdlab/cdcore/field.hpp"

#include <cmath>

#include "cdlab/errors.hpp"

namespace cdlab::cdcore {

Mat omega_at(const CdSystem& sys, const Vec& x, double t) {
  if (sys.omega) return sys.omega(x, t);
  // D(j, i) = d alpha_j / d x_i, so Omega = D^T - D.
  const Mat D = fd_jacobian([&](const Vec& y) { return sys.alpha(y, t); }, x, 1e-6);
  return D.transpose() - D;
}

void check_nondegenerate(const Mat& omega, double floor) {
  Eigen::JacobiSVD<Mat> svd(omega);
  const double smin = svd.singularValues().minCoeff();
  if (!(smin > floor)) throw Error(Errc::DegenerateForm, "omega smallest singular value " + std::to_string(smin));
}

Vec dynamic_field(const CdSystem& sys, const Vec& x, double t) {
  if (sys.guard && !(sys.guard(x) >= sys.guard_floor))
    throw Error(Errc::SingularPoint, sys.name + ": guard below floor");
  const Mat W = omega_at(sys, x, t);
  check_nondegenerate(W, sys.degeneracy_floor);
  return sys.kappa * W.partialPivLu().solve(sys.alpha(x, t));
}

Vec hamiltonian_field(const Mat& omega, const Vec& dF) { return omega.partialPivLu().solve(dF); }

double poisson_bracket(const Mat& omega, const Vec& dF, const Vec& dG) {
  check_nondegenerate(omega, 1e-12);
  return dG.dot(hamiltonian_field(omega, dF));
}

double poisson_bracket(const CdSystem& sys, const ScalarFn& F, const ScalarFn& G, const Vec& x,
                       double t) {
  return poisson_bracket(omega_at(sys, x, t), fd_gradient(F, x), fd_gradient(G, x));
}

}  // namespace cdlab::cdcore
