#include "cdlab/analysis/cycle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <unsupported/Eigen/FFT>

#include "cdlab/errors.hpp"

namespace cdlab::analysis {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double a) { return a - kTwoPi * std::round(a / kTwoPi); }

Vec diff(const Vec& a, const Vec& b, const std::vector<int>& angles) {
  Vec d = a - b;
  for (int k : angles) d[k] = wrap(d[k]);
  return d;
}

// Cubic Lagrange interpolation on the four samples around [t_i, t_{i+1}].
Vec interp4(const cdcore::Trajectory& tr, std::size_t i, double time) {
  const std::size_t n = tr.size();
  std::size_t lo = i > 0 ? i - 1 : 0;
  if (lo + 3 >= n) lo = n >= 4 ? n - 4 : 0;
  const std::size_t m = std::min<std::size_t>(4, n - lo);
  Vec out = Vec::Zero(tr.x[lo].size());
  for (std::size_t a = 0; a < m; ++a) {
    double w = 1.0;
    for (std::size_t b = 0; b < m; ++b)
      if (b != a) w *= (time - tr.t[lo + b]) / (tr.t[lo + a] - tr.t[lo + b]);
    out += w * tr.x[lo + a];
  }
  return out;
}

}  // namespace

double fft_period_estimate(const cdcore::Trajectory& traj, int coord, double t_from) {
  std::size_t start = 0;
  while (start < traj.size() && traj.t[start] < t_from) ++start;
  if (traj.size() < start + 16) return 0.0;
  const double span = traj.t.back() - traj.t[start];
  const std::size_t N = std::min<std::size_t>(4096, traj.size() - start);
  const double dt = span / static_cast<double>(N);
  std::vector<double> y(N);
  double mean = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    y[k] = traj.at(traj.t[start] + dt * static_cast<double>(k))[coord];
    mean += y[k];
  }
  mean /= static_cast<double>(N);
  for (auto& v : y) v -= mean;
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> Y;
  fft.fwd(Y, y);
  std::size_t best = 0;
  double bestmag = 0.0;
  for (std::size_t k = 1; k < N / 2; ++k)
    if (std::abs(Y[k]) > bestmag) {
      bestmag = std::abs(Y[k]);
      best = k;
    }
  // a peak needs at least two periods in the window
  if (best < 2 || bestmag < 1e-12 * static_cast<double>(N)) return 0.0;
  return span / static_cast<double>(best);
}

CycleReport detect_cycle(const cdcore::Trajectory& tr, const CycleOptions& o) {
  const std::size_t n = tr.size();
  if (n < 8) throw Error(Errc::InsufficientSamples, "trajectory too short for cycle detection");
  const Vec& xs = tr.x.back();
  const double ts = tr.t.back();
  const Vec vel = diff(tr.x[n - 1], tr.x[n - 2], o.angle_coords) / (tr.t[n - 1] - tr.t[n - 2]);
  if (vel.norm() < o.fixed_point_speed)
    throw Error(Errc::NoRecurrence, "fixed point (attractor dimension 0), speed " + std::to_string(vel.norm()));
  const Vec nrm = vel.normalized();

  CycleReport rep;
  int coord = o.fft_coord;
  if (coord < 0) {
    // coordinates that are constant on the attractor up to a decaying transient carry no period
    double best = 1e-6 * (1.0 + xs.norm());
    for (Eigen::Index c = 0; c < xs.size(); ++c) {
      if (std::find(o.angle_coords.begin(), o.angle_coords.end(), c) != o.angle_coords.end()) continue;
      double lo = 1e300, hi = -1e300;
      for (std::size_t k = n / 2; k < n; ++k) {
        lo = std::min(lo, tr.x[k][c]);
        hi = std::max(hi, tr.x[k][c]);
      }
      if (hi - lo > best) {
        best = hi - lo;
        coord = static_cast<int>(c);
      }
    }
  }
  if (coord >= 0 && coord < xs.size()) rep.fft_period = fft_period_estimate(tr, coord, tr.t[n / 2]);
  // crossings closer in time than this are the departure from the section, not a return
  const double min_gap = rep.fft_period > 0 ? 0.5 * rep.fft_period : 10.0 * (tr.t[n - 1] - tr.t[n - 2]);

  struct Return {
    double t;
    double dist;
    std::size_t i;
  };
  std::vector<Return> returns;
  auto s_of = [&](const Vec& x) { return diff(x, xs, o.angle_coords).dot(nrm); };
  for (std::size_t i = n - 1; i-- > 0;) {
    if (ts - tr.t[i + 1] < min_gap) continue;
    const double s0 = s_of(tr.x[i]), s1 = s_of(tr.x[i + 1]);
    if (!(s0 < 0.0 && s1 >= 0.0)) continue;
    // Illinois-type false position on the cubic interpolant
    double a = tr.t[i], b = tr.t[i + 1], fa = s0, fb = s1;
    double best_t = std::abs(s0) < std::abs(s1) ? a : b, best_f = std::min(std::abs(s0), std::abs(s1));
    int side = 0;
    for (int it = 0; it < 100 && b - a > 1e-15 * std::max(1.0, std::abs(b)); ++it) {
      const double c = b - fb * (b - a) / (fb - fa);
      const double fc = s_of(interp4(tr, i, c));
      if (std::abs(fc) < best_f) {
        best_f = std::abs(fc);
        best_t = c;
      }
      if (best_f < 1e-15) break;
      if ((fc < 0) == (fa < 0)) {
        a = c;
        fa = fc;
        if (side == -1) fb *= 0.5;
        side = -1;
      } else {
        b = c;
        fb = fc;
        if (side == 1) fa *= 0.5;
        side = 1;
      }
    }
    const double tc = best_t;
    const double dist = diff(interp4(tr, i, tc), xs, o.angle_coords).norm();
    returns.push_back({tc, dist, i});
    if (returns.size() >= 64) break;
  }
  if (returns.empty()) throw Error(Errc::NoRecurrence, "no return to the section (attractor dimension >= 1)");
  const double scale = 1.0 + xs.norm();
  auto first_close = std::find_if(returns.begin(), returns.end(),
                                  [&](const Return& r) { return r.dist < o.recurrence_tol * scale; });
  if (first_close == returns.end())
    throw Error(Errc::NoRecurrence, "section returns do not close; quasi-periodic or chaotic (dimension >= 2)");
  rep.period = ts - first_close->t;
  rep.return_distance = first_close->dist;
  if (first_close->dist >= o.tol) {
    throw Error(Errc::NotConverged, "returns differ by " + std::to_string(first_close->dist) + " > tol");
  }
  rep.converged = true;
  const double t_start = first_close->t;
  rep.t.push_back(t_start);
  rep.x.push_back(interp4(tr, first_close->i, t_start));
  for (std::size_t i = 0; i < n; ++i)
    if (tr.t[i] > t_start) {
      rep.t.push_back(tr.t[i]);
      rep.x.push_back(tr.x[i]);
    }
  if (o.hamiltonian) {
    const EnergyReport e = hamiltonian_on_attractor(o.hamiltonian, rep.x);
    rep.energy = e.E;
    rep.energy_defect = e.defect;
  }
  return rep;
}

std::vector<double> quantization_integral(const std::vector<Vec>& s, const std::vector<LoopSpec>& loops,
                                          double close_tol, const std::vector<int>& angle_coords) {
  if (s.size() < 3) throw Error(Errc::InsufficientSamples, "loop needs at least three samples");
  const double gap = diff(s.back(), s.front(), angle_coords).norm();
  if (gap > close_tol * (1.0 + s.front().norm()))
    throw Error(Errc::OpenLoop, "loop does not close (gap " + std::to_string(gap) + ")");
  std::vector<double> out;
  for (const auto& L : loops) {
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
      if (L.kind == LoopSpec::Kind::canonical) {
        acc += 0.5 * (s[k][L.i] + s[k + 1][L.i]) * (s[k + 1][L.j] - s[k][L.j]);
      } else {
        const cplx a(s[k][L.i], s[k][L.j]), b(s[k + 1][L.i], s[k + 1][L.j]);
        acc += 0.5 * (std::norm(a) + std::norm(b)) * std::arg(std::conj(a) * b);
      }
    }
    out.push_back(acc);
  }
  return out;
}

EnergyReport hamiltonian_on_attractor(const std::function<double(const Vec&)>& H, const std::vector<Vec>& samples) {
  EnergyReport r;
  if (samples.empty()) return r;
  std::vector<double> v;
  for (const auto& x : samples) v.push_back(H(x));
  for (double e : v) r.E += e;
  r.E /= static_cast<double>(v.size());
  for (double e : v) r.defect = std::max(r.defect, std::abs(e - r.E));
  return r;
}

double action_rate(const std::vector<double>& t, const std::vector<double>& ph, double scale, double t_from) {
  if (t.size() != ph.size() || t.size() < 2) throw Error(Errc::InsufficientSamples, "phase series too short");
  double lifted = ph[0];
  double t0 = 0, s0 = 0, t1 = 0, s1 = 0;
  bool started = false;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k > 0) {
      const double d = wrap(ph[k] - ph[k - 1]);
      if (std::abs(d) >= std::numbers::pi / 2)
        throw Error(Errc::BranchJump, "phase step " + std::to_string(d) + " at t=" + std::to_string(t[k]));
      lifted += d;
    }
    if (t[k] >= t_from) {
      if (!started) {
        t0 = t[k];
        s0 = lifted;
        started = true;
      }
      t1 = t[k];
      s1 = lifted;
    }
  }
  if (!started || t1 <= t0) throw Error(Errc::InsufficientSamples, "empty averaging window");
  return scale * (s1 - s0) / (t1 - t0);
}

double isotropy_defect(const std::function<Mat(const Vec&)>& omega, const std::vector<Vec>& s, int d,
                       int max_centers) {
  if (d <= 1) return 0.0;
  const int N = static_cast<int>(s.size());
  const int k = std::min(20, N / 10);
  if (k < d + 1) throw Error(Errc::InsufficientSamples, "too few samples for local PCA");
  const int stride = std::max(1, N / max_centers);
  double worst = 0.0;
  std::vector<std::pair<double, int>> dist(N);
  for (int c = 0; c < N; c += stride) {
    for (int j = 0; j < N; ++j) dist[j] = {(s[j] - s[c]).squaredNorm(), j};
    std::partial_sort(dist.begin(), dist.begin() + k, dist.end());
    Vec mean = Vec::Zero(s[c].size());
    for (int a = 0; a < k; ++a) mean += s[dist[a].second];
    mean /= k;
    Mat C = Mat::Zero(mean.size(), mean.size());
    for (int a = 0; a < k; ++a) {
      const Vec dv = s[dist[a].second] - mean;
      C += dv * dv.transpose();
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(C);
    const Mat E = es.eigenvectors().rightCols(d);
    const Mat W = omega(s[c]);
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) worst = std::max(worst, std::abs(E.col(a).dot(W * E.col(b))));
  }
  return worst;
}

}  // namespace cdlab::analysis
