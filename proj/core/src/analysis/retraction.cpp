#include "cdlab/analysis/retraction.hpp"

#include <cmath>
#include <limits>

#include "cdlab/cdcore/field.hpp"
#include "cdlab/cdcore/integrator.hpp"
#include "cdlab/errors.hpp"

namespace cdlab::analysis {

namespace {

cdcore::IntegrateOptions opts(double tol) {
  cdcore::IntegrateOptions o;
  o.abs_tol = o.rel_tol = tol;
  return o;
}

}  // namespace

Vec cd_flow(const cdcore::CdSystem& sys, const Vec& x, double t, double tol) {
  if (t < 0) throw Error(Errc::InvalidArgument, "the CD flow is a semiflow; t must be >= 0");
  return cdcore::integrate_to(cdcore::make_problem(sys), x, 0.0, t, opts(tol));
}

Vec ph_flow(const cdcore::CdSystem& sys, const Vec& x, double t, double tol) {
  if (!sys.hamiltonian) throw Error(Errc::InvalidArgument, sys.name + " registers no physical Hamiltonian");
  const double sign = t >= 0 ? 1.0 : -1.0;
  cdcore::OdeProblem p;
  p.rhs = [&sys, sign](const Vec& y, double, Vec& dy) {
    const Mat W = cdcore::omega_at(sys, y);
    dy = sign * cdcore::hamiltonian_field(W, fd_gradient4(sys.hamiltonian, y, 1e-3));
  };
  return cdcore::integrate_to(p, x, 0.0, std::abs(t), opts(tol));
}

Vec retraction(const cdcore::CdSystem& sys, const Vec& x, const RetractionOptions& o) {
  const double unit = 1.0 / sys.kappa;
  double T = o.T0 * unit;
  Vec prev = ph_flow(sys, cd_flow(sys, x, T, o.ode_tol), -T, o.ode_tol);
  while (T < o.T_max * unit) {
    T *= 2.0;
    const Vec next = ph_flow(sys, cd_flow(sys, x, T, o.ode_tol), -T, o.ode_tol);
    if ((next - prev).norm() < o.tol * (1.0 + next.norm())) return next;
    prev = next;
  }
  throw Error(Errc::NoLimit, "h_{-T} g_T x not Cauchy by T = " + std::to_string(T));
}

ConstantsReport constants_of_motion_check(
    const cdcore::CdSystem& sys, const std::vector<std::pair<std::string, std::function<double(const Vec&)>>>& Fs,
    const std::vector<Vec>& starts, double T, double tol) {
  ConstantsReport rep;
  std::vector<Vec> ends, retracted;
  for (const auto& x : starts) {
    ends.push_back(cd_flow(sys, x, T));
    retracted.push_back(retraction(sys, x));
  }
  for (const auto& [name, F] : Fs) {
    ConstantEntry e;
    e.name = name;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t k = 0; k < starts.size(); ++k) {
      e.flow_variation = std::max(e.flow_variation, std::abs(F(ends[k]) - F(starts[k])));
      e.retraction_defect = std::max(e.retraction_defect, std::abs(F(starts[k]) - F(retracted[k])));
      lo = std::min(lo, F(retracted[k]));
      hi = std::max(hi, F(retracted[k]));
    }
    e.attractor_spread = hi - lo;
    e.constant_along_flow = e.flow_variation < tol;
    e.equals_on_retraction = e.retraction_defect < tol;
    rep.entries.push_back(e);
  }
  const Eigen::Index n = static_cast<Eigen::Index>(Fs.size());
  rep.brackets = Mat::Constant(n, n, std::numeric_limits<double>::quiet_NaN());
  if (!starts.empty())
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = 0; b < n; ++b)
        if (rep.entries[a].constant_along_flow && rep.entries[b].constant_along_flow)
          rep.brackets(a, b) = cdcore::poisson_bracket(sys, Fs[a].second, Fs[b].second, starts.front());
  return rep;
}

double standard_gauge_residual(const std::function<Vec(const Vec&, double)>& theta,
                               const std::function<Vec(const Vec&, double)>& field,
                               const std::vector<std::pair<Vec, double>>& samples) {
  double worst = 0.0;
  for (const auto& [x, t] : samples) {
    const Vec th = theta(x, t);
    const Vec V = field(x, t);
    if (th.size() != V.size() + 1) throw Error(Errc::InvalidArgument, "theta must live on M x R");
    worst = std::max(worst, std::abs(th.head(V.size()).dot(V) + th[V.size()]));
  }
  return worst;
}

}  // namespace cdlab::analysis
