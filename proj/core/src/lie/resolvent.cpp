#include "cdlab/lie/resolvent.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "cdlab/errors.hpp"

namespace cdlab::lie {

void SpectralData::validate(double tol) const {
  if (omega.size() != rho.size() || omega.size() == 0)
    throw Error(Errc::InvalidArgument, "spectral data needs matching nonempty levels and weights");
  for (Eigen::Index j = 0; j < rho.size(); ++j) {
    if (!(rho[j] >= 0.0)) throw Error(Errc::InvalidArgument, "negative spectral weight");
    if (j > 0 && omega[j] < omega[j - 1]) throw Error(Errc::InvalidArgument, "levels not ascending");
  }
  if (std::abs(rho.sum() - 1.0) > tol) throw Error(Errc::InvalidArgument, "spectral weights not normalized");
}

cplx resolvent_discrete(const SpectralData& sd, double omega, double epsilon) {
  if (!(epsilon > 0)) throw Error(Errc::InvalidArgument, "resolvent needs eps > 0");
  cplx r = 0.0;
  for (Eigen::Index j = 0; j < sd.omega.size(); ++j) r += sd.rho[j] / cplx(sd.omega[j] - omega, epsilon);
  return r;
}

cplx resolvent_integral(const Kernel& kernel, double omega, double epsilon, const ResolventIntegralOptions& opts) {
  if (!(epsilon > 0)) throw Error(Errc::InvalidArgument, "resolvent needs eps > 0");
  const cplx rate(epsilon, omega);
  auto f = [&](double t) { return std::exp(-rate * t) * kernel(t); };
  double panel = 1.0 / epsilon;
  if (omega != 0.0) panel = std::min(panel, 20.0 * std::numbers::pi / std::abs(omega));
  panel = std::min(panel, 10.0);
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  cplx sum = 0.0;
  int quiet = 0;
  double t = 0.0;
  for (int k = 0; k < opts.max_panels; ++k) {
    const cplx part = GK::integrate(f, t, t + panel, 15, 1e-3 * opts.rel_tol);
    if (!std::isfinite(part.real()) || !std::isfinite(part.imag()))
      throw Error(Errc::QuadratureDiverges, "non-finite panel at t=" + std::to_string(t));
    sum += part;
    t += panel;
    const double envelope = std::abs(f(t));
    const double scale = std::abs(sum);
    if (std::abs(part) <= 1e-3 * opts.rel_tol * scale && envelope * panel <= 1e-3 * opts.rel_tol * scale) {
      if (++quiet >= 3) return -I * sum;
    } else {
      quiet = 0;
    }
  }
  throw Error(Errc::QuadratureDiverges, "tail not decaying within " + std::to_string(opts.max_panels) + " panels");
}

}  // namespace cdlab::lie
