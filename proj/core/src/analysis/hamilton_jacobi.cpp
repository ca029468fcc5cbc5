#include "cdlab/analysis/hamilton_jacobi.hpp"

#include <cmath>

#include "cdlab/errors.hpp"

namespace cdlab::analysis {

double hj_threshold(double m, double k) { return 2.0 * std::sqrt(k / m); }

std::pair<HJSolution, HJSolution> hj_quadratic(const HJParams& p) {
  if (!(p.m > 0 && p.k > 0)) throw Error(Errc::InvalidArgument, "hj_quadratic needs m, k > 0");
  const double disc = p.kappa * p.kappa - 4.0 * p.k / p.m;
  if (disc < -1e-14 * p.kappa * p.kappa)
    throw Error(Errc::NoSolution, "kappa below 2 sqrt(k/m): no quadratic invariant surface");
  const double root = std::sqrt(std::max(0.0, disc));
  auto make = [&](double sign) {
    HJSolution s;
    s.a = p.m * (-p.kappa + sign * root) / 4.0;
    s.b = -p.f / cplx(p.kappa + 2.0 * s.a / p.m, p.omega);
    s.c = -s.b * s.b / (4.0 * p.m * cplx(p.kappa, 2.0 * p.omega));
    s.constant = std::norm(s.b) / (4.0 * p.m);
    return s;
  };
  return {make(+1.0), make(-1.0)};
}

double hj_action(const HJSolution& s, double omega, double q, double t) {
  const cplx e = std::exp(I * omega * t);
  return s.a * q * q + (s.b * q * e + s.c * e * e).real();
}

double hj_residual(const HJSolution& s, const HJParams& p, double q, double t) {
  const cplx e = std::exp(I * p.omega * t);
  const double Sq = 2.0 * s.a * q + (s.b * e).real();
  const double St = (I * p.omega * (s.b * q * e + 2.0 * s.c * e * e)).real();
  const double H = Sq * Sq / (2.0 * p.m) + 0.5 * p.k * q * q + p.f * q * std::cos(p.omega * t);
  return H + St + p.kappa * hj_action(s, p.omega, q, t) - s.constant;
}

namespace {
template <class F>
double d5(const F& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}
}  // namespace

double invariant_manifold_residual(const std::function<double(double, double, double)>& H,
                                   const std::function<double(double, double)>& S, double kappa,
                                   const std::vector<std::pair<double, double>>& samples, HJForm form, double h) {
  double worst = 0.0;
  for (const auto& [q0, t0] : samples) {
    const double t = t0;
    auto G = [&](double q) {
      const double Sq = d5([&](double y) { return S(y, t); }, q, h);
      const double St = d5([&](double s) { return S(q, s); }, t, h);
      double g = H(Sq, q, t) + St;
      if (form == HJForm::generalized) g += kappa * S(q, t);
      return g;
    };
    worst = std::max(worst, std::abs(d5(G, q0, h)));
  }
  return worst;
}

}  // namespace cdlab::analysis
