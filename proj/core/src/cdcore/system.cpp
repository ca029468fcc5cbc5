#include "cdlab/cdcore/system.hpp"

#include <cmath>

namespace cdlab::cdcore {

namespace {

// Wirtinger derivative d/dzbar_k = (d/dx_k + i d/dy_k) / 2 by central differences.
CVec wirtinger_bar(const std::function<double(const CVec&)>& f, const CVec& z, double h) {
  CVec d(z.size());
  CVec w = z;
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    const double hk = h * (1.0 + std::abs(z[k]));
    w[k] = z[k] + hk;
    const double fxp = f(w);
    w[k] = z[k] - hk;
    const double fxm = f(w);
    w[k] = z[k] + cplx(0, hk);
    const double fyp = f(w);
    w[k] = z[k] - cplx(0, hk);
    const double fym = f(w);
    w[k] = z[k];
    d[k] = 0.5 * cplx((fxp - fxm) / (2 * hk), (fyp - fym) / (2 * hk));
  }
  return d;
}

}  // namespace

KahlerSystem kahler_from_potential(std::string name, int n, double epsilon,
                                   std::function<double(const CVec&)> U,
                                   std::function<double(const CVec&)> H) {
  KahlerSystem ks;
  ks.name = std::move(name);
  ks.n = n;
  ks.epsilon = epsilon;
  ks.U = U;
  ks.H = H;
  ks.dU_bar = [U](const CVec& z) { return wirtinger_bar(U, z, 1e-6); };
  ks.dH_bar = [H](const CVec& z) { return wirtinger_bar(H, z, 1e-6); };
  // G_ik = d_{z_i} d_{zbar_k} U, from the derivative of dU_bar along z_i.
  ks.metric = [U, n](const CVec& z) {
    CMat G(n, n);
    CVec w = z;
    const double h = 1e-4;
    for (int i = 0; i < n; ++i) {
      const double hi = h * (1.0 + std::abs(z[i]));
      w[i] = z[i] + hi;
      const CVec xp = wirtinger_bar(U, w, 1e-4);
      w[i] = z[i] - hi;
      const CVec xm = wirtinger_bar(U, w, 1e-4);
      w[i] = z[i] + cplx(0, hi);
      const CVec yp = wirtinger_bar(U, w, 1e-4);
      w[i] = z[i] - cplx(0, hi);
      const CVec ym = wirtinger_bar(U, w, 1e-4);
      w[i] = z[i];
      const CVec dx = (xp - xm) / (2 * hi);
      const CVec dy = (yp - ym) / (2 * hi);
      for (int k = 0; k < n; ++k) G(i, k) = 0.5 * (dx[k] - I * dy[k]);
    }
    return G;
  };
  return ks;
}

}  // namespace cdlab::cdcore
