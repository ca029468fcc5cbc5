#include "cdlab/lie/solver.hpp"

#include <cmath>
#include <limits>

#include "cdlab/errors.hpp"

namespace cdlab::lie {

std::string kind_name(GeneratorSpec::Kind k) {
  switch (k) {
    case GeneratorSpec::Kind::u1_rotation: return "u1_rotation";
    case GeneratorSpec::Kind::translation: return "translation";
    case GeneratorSpec::Kind::euclidean: return "euclidean";
    case GeneratorSpec::Kind::diagonal: return "diagonal";
  }
  return "unknown";
}

std::string classification_name(Classification c) {
  switch (c) {
    case Classification::spectral: return "spectral";
    case Classification::non_spectral: return "non_spectral";
    default: return "unknown";
  }
}

namespace {

// Wirtinger d/dz_k of a real-or-complex scalar function via 5-point stencils in x and y.
template <class F>
cplx wirtinger(const F& f, const CVec& z, Eigen::Index k, double h) {
  auto at = [&](cplx d) {
    CVec w = z;
    w[k] += d;
    return f(w);
  };
  const double hk = h * (1.0 + std::abs(z[k]));
  auto d5 = [&](cplx dir) {
    return (-at(2.0 * hk * dir) + 8.0 * at(hk * dir) - 8.0 * at(-hk * dir) + at(-2.0 * hk * dir)) / (12.0 * hk);
  };
  return 0.5 * (d5(1.0) - I * d5(I));
}

}  // namespace

Vec lie_residual(const LieModel& model, const CVec& z, const Vec& xi, double omega, double epsilon,
                 bool with_consistency) {
  const cplx R = model.resolvent(z, xi, omega, epsilon);
  if (!(std::abs(R) > 1e-300) || !std::isfinite(std::abs(R)))
    throw Error(Errc::ResolventZero, "resolvent symbol vanishes; log R undefined");
  const Eigen::Index n = z.size();
  Vec r(1 + 2 * n + (with_consistency ? 1 : 0));
  r[0] = R.real();
  constexpr double h = 1e-4;
  auto phi_real = [&](const CVec& w) { return cplx(model.hamiltonian(w) - model.symbol(w, xi), 0.0); };
  auto res = [&](const CVec& w) { return model.resolvent(w, xi, omega, epsilon); };
  for (Eigen::Index k = 0; k < n; ++k) {
    // d log R = dR / R keeps the principal branch out of the derivative
    const cplx d = wirtinger(phi_real, z, k, h) + I * epsilon * wirtinger(res, z, k, h) / R;
    r[1 + 2 * k] = d.real();
    r[2 + 2 * k] = d.imag();
  }
  if (with_consistency) r[1 + 2 * n] = model.symbol(z, xi) - omega;
  return r;
}

namespace {

struct Unknowns {
  int np, nx;
  Vec pack(const LieCandidate& c) const {
    Vec u(np + nx + 1);
    u << c.params, c.xi.payload, c.omega;
    return u;
  }
};

Vec residual_at(const LieModel& m, const Vec& u, double eps, bool cons) {
  const int np = m.param_dim(), nx = m.xi_dim();
  const CVec z = m.point(u.head(np));
  if (!(m.guard(z) > m.guard_floor())) throw Error(Errc::LeftDomain, "singular guard tripped during the solve");
  return lie_residual(m, z, u.segment(np, nx), u[np + nx], eps, cons);
}

LieCandidate finish(const LieModel& m, const Vec& u, double eps, double res, int iters) {
  const int np = m.param_dim(), nx = m.xi_dim();
  LieCandidate c;
  c.params = u.head(np);
  c.z = m.point(c.params);
  c.xi.kind = m.xi_kind();
  c.xi.payload = u.segment(np, nx);
  const double A = m.symbol(c.z, c.xi.payload);
  c.consistency = std::abs(A - u[np + nx]);
  c.omega = A;
  c.epsilon = eps;
  c.residual = res;
  c.iterations = iters;
  c.converged = true;
  const SpectralData sd = m.spectral_data(c.z, c.xi.payload);
  double dist = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < sd.omega.size(); ++j)
    if (sd.rho[j] > 1e-12) dist = std::min(dist, std::abs(c.omega - sd.omega[j]));
  c.classification = dist <= eps ? Classification::spectral : Classification::non_spectral;
  return c;
}

LieCandidate newton(const LieModel& m, Vec u, double eps, const SolveOptions& o) {
  Vec r = residual_at(m, u, eps, o.with_consistency);
  if (!r.allFinite()) throw Error(Errc::NoConvergence, "non-finite residual at the seed");
  double lambda = 1e-6;
  for (int it = 0; it < o.max_iter; ++it) {
    if (r.cwiseAbs().maxCoeff() < o.tol) return finish(m, u, eps, r.cwiseAbs().maxCoeff(), it);
    Mat J(r.size(), u.size());
    for (Eigen::Index j = 0; j < u.size(); ++j) {
      const double h = o.fd_step * std::max(1.0, std::abs(u[j]));
      Vec up = u, um = u;
      up[j] += h;
      um[j] -= h;
      J.col(j) = (residual_at(m, up, eps, o.with_consistency) - residual_at(m, um, eps, o.with_consistency)) / (2 * h);
    }
    if (!J.allFinite() || J.norm() == 0.0) throw Error(Errc::SingularJacobian, "finite-difference Jacobian is singular");
    const Mat JtJ = J.transpose() * J;
    const Vec g = J.transpose() * r;
    const Vec D = JtJ.diagonal().cwiseMax(1e-12 * JtJ.diagonal().maxCoeff());
    bool accepted = false;
    for (int k = 0; k < 40 && !accepted; ++k) {
      Mat A = JtJ;
      A.diagonal() += lambda * D;
      const Vec step = A.ldlt().solve(-g);
      const Vec un = u + step;
      Vec rn;
      try {
        rn = residual_at(m, un, eps, o.with_consistency);
      } catch (const Error& e) {
        if (e.code() != Errc::LeftDomain && e.code() != Errc::ResolventZero) throw;
        lambda *= 10.0;
        continue;
      }
      if (rn.allFinite() && rn.norm() < r.norm()) {
        u = un;
        r = rn;
        lambda = std::max(lambda / 10.0, 1e-12);
        accepted = true;
      } else {
        lambda *= 10.0;
      }
    }
    if (!accepted) {
      if (r.cwiseAbs().maxCoeff() < 1e3 * o.tol) return finish(m, u, eps, r.cwiseAbs().maxCoeff(), it);
      throw Error(Errc::SingularJacobian, "no descent direction (residual " + std::to_string(r.norm()) + ")");
    }
  }
  if (r.cwiseAbs().maxCoeff() < o.tol) return finish(m, u, eps, r.cwiseAbs().maxCoeff(), o.max_iter);
  throw Error(Errc::NoConvergence, "Newton did not converge in " + std::to_string(o.max_iter) + " iterations");
}

double min_gap(const SpectralData& sd) {
  double g = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 1; j < sd.omega.size(); ++j)
    if (sd.omega[j] - sd.omega[j - 1] > 1e-14) g = std::min(g, sd.omega[j] - sd.omega[j - 1]);
  return g;
}

}  // namespace

LieCandidate solve_lie(const LieModel& model, const LieCandidate& seed, double epsilon, const SolveOptions& opts) {
  if (!(epsilon > 0)) throw Error(Errc::InvalidArgument, "solve_lie needs eps > 0");
  const Unknowns uk{model.param_dim(), model.xi_dim()};
  if (seed.params.size() != uk.np || seed.xi.payload.size() != uk.nx)
    throw Error(Errc::InvalidArgument, "seed shape does not match the model");
  Vec u = uk.pack(seed);
  std::vector<double> schedule;
  if (opts.continuation) {
    double e0 = opts.eps_start;
    if (!(e0 > 0)) e0 = 0.2 * min_gap(model.spectral_data(model.point(seed.params), seed.xi.payload));
    if (std::isfinite(e0))
      for (double e = e0; e > epsilon; e *= opts.ratio) schedule.push_back(e);
  }
  schedule.push_back(epsilon);
  LieCandidate out;
  int total = 0;
  for (double e : schedule) {
    Vec start = u;
    for (int attempt = 0;; ++attempt) {
      try {
        out = newton(model, start, e, opts);
        break;
      } catch (const Error& err) {
        if (err.code() != Errc::ResolventZero || attempt >= opts.restarts) throw;
        for (Eigen::Index j = 0; j < start.size(); ++j) start[j] += 1e-6 * (j + 1) * std::max(1.0, std::abs(start[j]));
      }
    }
    total += out.iterations;
    u = uk.pack(out);
  }
  out.iterations = total;
  return out;
}

double deviation_second_order(int n, double epsilon, const SpectralData& sd) {
  if (n < 0 || n >= sd.omega.size()) throw Error(Errc::NoSuchLevel, "level index out of range");
  if (!(sd.rho[n] > 0)) throw Error(Errc::InvalidArgument, "rho_n must be positive");
  double s = 0.0;
  for (Eigen::Index j = 0; j < sd.omega.size(); ++j) {
    if (j == n) continue;
    const double gap = sd.omega[j] - sd.omega[n];
    if (std::abs(gap) < 1e-14) throw Error(Errc::DegenerateLevel, "level " + std::to_string(n) + " is degenerate");
    s += (sd.rho[j] / sd.rho[n]) / gap;
  }
  return epsilon * epsilon * s;
}

LieCandidate spectral_seed(const LieModel& model, int n, double epsilon, int series) {
  return model.spectral_seed(n, epsilon, series);
}

}  // namespace cdlab::lie
