#include "cdlab/cdcore/identities.hpp"

#include <cmath>

#include "cdlab/cdcore/field.hpp"
#include "cdlab/errors.hpp"

namespace cdlab::cdcore {

double contraction_defect(const CdSystem& sys, const Vec& x0, double T,
                          const std::vector<std::pair<Vec, Vec>>& pairs, double tol) {
  const int n = sys.dim;
  const Mat W0 = omega_at(sys, x0, 0.0);
  std::vector<double> b0;
  for (const auto& [xi, eta] : pairs) {
    const double b = xi.dot(W0 * eta);
    if (std::abs(b) < 1e-14) throw Error(Errc::ZeroBracket, "Omega(xi0, eta0) vanishes");
    b0.push_back(b);
  }
  const int m = static_cast<int>(pairs.size());
  Vec y(n * (1 + 2 * m));
  y.head(n) = x0;
  for (int k = 0; k < m; ++k) {
    y.segment(n * (1 + 2 * k), n) = pairs[k].first;
    y.segment(n * (2 + 2 * k), n) = pairs[k].second;
  }
  OdeProblem prob;
  prob.rhs = [&sys, n, m](const Vec& s, double t, Vec& ds) {
    ds.resize(s.size());
    const Vec x = s.head(n);
    ds.head(n) = dynamic_field(sys, x, t);
    const double hx = 1e-6 * (1.0 + x.norm());
    for (int j = 0; j < 2 * m; ++j) {
      const Vec v = s.segment(n * (1 + j), n);
      const double vn = v.norm();
      if (vn == 0.0) {
        ds.segment(n * (1 + j), n).setZero();
        continue;
      }
      const double h = hx / vn;
      ds.segment(n * (1 + j), n) =
          (dynamic_field(sys, x + h * v, t) - dynamic_field(sys, x - h * v, t)) / (2.0 * h);
    }
  };
  if (sys.guard) {
    auto g = sys.guard;
    prob.guard = [g, n](const Vec& s) { return g(s.head(n)); };
    prob.guard_floor = sys.guard_floor;
  }
  IntegrateOptions o;
  o.abs_tol = tol;
  o.rel_tol = tol;
  const Vec yT = integrate_to(prob, y, 0.0, T, o);
  const Mat WT = omega_at(sys, yT.head(n), T);
  double defect = 0.0;
  for (int k = 0; k < m; ++k) {
    const Vec xi = yT.segment(n * (1 + 2 * k), n), eta = yT.segment(n * (2 + 2 * k), n);
    const double bT = xi.dot(WT * eta);
    defect = std::max(defect, std::abs(bT - std::exp(-sys.kappa * T) * b0[k]) / std::abs(b0[k]));
  }
  return defect;
}

namespace {

// signed defect of one identity together with the magnitude of the terms it compares
struct Term {
  Vec diff;
  double scale;
};

Vec scalar(double v) { return Vec::Constant(1, v); }

std::map<std::string, Term> terms_at_step(const CdSystem& sys, const Vec& x, const ScalarFn& F, const ScalarFn& G,
                                          double t, double h) {
  const double kappa = sys.kappa;
  auto alpha = [&](const Vec& y) { return sys.alpha(y, t); };
  auto V = [&](const Vec& y) { return dynamic_field(sys, y, t); };
  auto J = [&](const Vec& y, const Vec& covec) { return hamiltonian_field(omega_at(sys, y, t), covec); };
  auto bracket = [&](const ScalarFn& f, const ScalarFn& g, const Vec& y) {
    return fd_gradient4(g, y, h).dot(J(y, fd_gradient4(f, y, h)));
  };

  std::map<std::string, Term> r;
  const Vec v = V(x);
  const Vec a = alpha(x);
  r["null_alpha"] = {scalar(a.dot(v)), a.norm() * v.norm()};

  // (L_V alpha)_j = V^i d_i alpha_j + alpha_i d_j V^i
  Mat Da(sys.dim, sys.dim), DV(sys.dim, sys.dim);
  for (int j = 0; j < sys.dim; ++j) {
    Vec e = Vec::Zero(sys.dim);
    e[j] = 1.0;
    Da.col(j) = fd_directional_vec(alpha, x, e, h);
    DV.col(j) = fd_directional_vec(V, x, e, h);
  }
  const Vec lie = Da * v + DV.transpose() * a;
  r["cartan_contraction"] = {lie + kappa * a,
                             std::max((Da * v).cwiseAbs().maxCoeff(), kappa * a.cwiseAbs().maxCoeff())};

  const double vF = fd_directional(F, x, v, h);
  r["field_derivative"] = {scalar(vF + kappa * a.dot(J(x, fd_gradient4(F, x, h)))), std::abs(vF)};

  ScalarFn B = [&](const Vec& y) { return bracket(F, G, y); };
  ScalarFn LF = [&](const Vec& y) { return fd_gradient4(F, y, h).dot(V(y)) + kappa * F(y); };
  ScalarFn LG = [&](const Vec& y) { return fd_gradient4(G, y, h).dot(V(y)) + kappa * G(y); };
  const double lhs = fd_directional(B, x, v, h) + kappa * B(x);
  const double rhs = bracket(LF, G, x) + bracket(F, LG, x);
  r["bracket_leibniz"] = {scalar(lhs - rhs), std::max(std::abs(lhs), std::abs(rhs))};

  VectorFn W = [&](const Vec& y) { return J(y, fd_gradient4(F, y, h)); };
  ScalarFn aW = [&](const Vec& y) { return alpha(y).dot(W(y)); };
  const Vec w = W(x);
  const Vec comm = fd_directional_vec(W, x, v, h) - fd_directional_vec(V, x, w, h);
  const double vaW = fd_directional(aW, x, v, h) + kappa * aW(x);
  r["commutator_form"] = {scalar(vaW - a.dot(comm)), std::max(std::abs(vaW), std::abs(a.dot(comm)))};
  return r;
}

// each residual is scaled by 1 + the largest magnitude among the terms it compares
double scaled(const Vec& diff, double scale) { return diff.cwiseAbs().maxCoeff() / (1.0 + std::abs(scale)); }

}  // namespace

std::map<std::string, double> identity_residuals(const CdSystem& sys, const Vec& x, const ScalarFn& F,
                                                 const ScalarFn& G, double t, double h) {
  std::map<std::string, double> best;
  if (h > 0.0) {
    for (const auto& [id, term] : terms_at_step(sys, x, F, G, t, h)) best[id] = scaled(term.diff, term.scale);
    return best;
  }
  // fourth-order differences leave an h^4 defect; Richardson on (h, h/2) removes it
  for (double step : {2e-3, 1e-3, 5e-4, 2e-4}) {
    const auto coarse = terms_at_step(sys, x, F, G, t, step);
    const auto fine = terms_at_step(sys, x, F, G, t, step / 2);
    for (const auto& [id, term] : fine) {
      const Vec extrap = (16.0 * term.diff - coarse.at(id).diff) / 15.0;
      const double v = std::min(scaled(extrap, term.scale), scaled(term.diff, term.scale));
      if (!best.count(id) || v < best[id]) best[id] = v;
    }
  }
  return best;
}

RateFit quasi_integral_fit(const Trajectory& traj, const ScalarFn& Q, double t_from, double t_to,
                           double floor) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    if (traj.t[i] < t_from || traj.t[i] > t_to) continue;
    const double q = Q(traj.x[i]);
    if (!(std::abs(q) > floor))
      throw Error(Errc::QVanishes, "quasi-integral below floor at t=" + std::to_string(traj.t[i]));
    pts.emplace_back(traj.t[i], std::log(std::abs(q)));
  }
  if (pts.size() < 2) throw Error(Errc::InsufficientSamples, "need two samples for a rate fit");
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(pts.size());
  RateFit f;
  f.samples = pts.size();
  f.rate = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  f.intercept = (sy - f.rate * sx) / n;
  double ss = 0;
  for (auto [x, y] : pts) ss += std::pow(y - f.intercept - f.rate * x, 2);
  f.rms = std::sqrt(ss / n);
  return f;
}

double quasi_integral_rate(const Trajectory& traj, const ScalarFn& Q) { return quasi_integral_fit(traj, Q).rate; }

}  // namespace cdlab::cdcore
