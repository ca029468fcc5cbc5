#include <cmath>

#include "cdlab/types.hpp"

namespace cdlab {

bool all_finite(const Vec& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!std::isfinite(x[i])) return false;
  return true;
}

Vec fd_gradient(const ScalarFn& f, const Vec& x, double h) {
  Vec g(x.size());
  Vec y = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double hi = h * (1.0 + std::abs(x[i]));
    y[i] = x[i] + hi;
    const double fp = f(y);
    y[i] = x[i] - hi;
    const double fm = f(y);
    y[i] = x[i];
    g[i] = (fp - fm) / (2.0 * hi);
  }
  return g;
}

Mat fd_jacobian(const VectorFn& f, const Vec& x, double h) {
  Vec y = x;
  Mat J;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double hi = h * (1.0 + std::abs(x[i]));
    y[i] = x[i] + hi;
    const Vec fp = f(y);
    y[i] = x[i] - hi;
    const Vec fm = f(y);
    y[i] = x[i];
    if (i == 0) J.resize(fp.size(), x.size());
    J.col(i) = (fp - fm) / (2.0 * hi);
  }
  return J;
}

double fd_directional(const ScalarFn& f, const Vec& x, const Vec& v, double h) {
  const double n = v.norm();
  if (n == 0.0) return 0.0;
  const double s = h / n;
  const double f1 = f(x + s * v), fm1 = f(x - s * v);
  const double f2 = f(x + 2 * s * v), fm2 = f(x - 2 * s * v);
  return (8.0 * (f1 - fm1) - (f2 - fm2)) / (12.0 * s);
}

Vec fd_gradient4(const ScalarFn& f, const Vec& x, double h) {
  Vec g(x.size());
  Vec y = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double hi = h * (1.0 + std::abs(x[i]));
    auto at = [&](double s) {
      y[i] = x[i] + s;
      const double v = f(y);
      y[i] = x[i];
      return v;
    };
    g[i] = (8.0 * (at(hi) - at(-hi)) - (at(2 * hi) - at(-2 * hi))) / (12.0 * hi);
  }
  return g;
}

Vec fd_directional_vec(const VectorFn& f, const Vec& x, const Vec& v, double h) {
  const double n = v.norm();
  if (n == 0.0) return Vec::Zero(f(x).size());
  const double s = h / n;
  return (8.0 * (f(x + s * v) - f(x - s * v)) - (f(x + 2 * s * v) - f(x - 2 * s * v))) / (12.0 * s);
}

}  // namespace cdlab
