#pragma once
#include <Eigen/Dense>
#include <complex>
#include <functional>

namespace cdlab {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

inline constexpr cplx I{0.0, 1.0};

using ScalarFn = std::function<double(const Vec&)>;
using VectorFn = std::function<Vec(const Vec&)>;

// Complex coordinates are stored as interleaved (Re, Im) pairs.
inline CVec unpack(const Vec& x) {
  CVec z(x.size() / 2);
  for (Eigen::Index k = 0; k < z.size(); ++k) z[k] = cplx(x[2 * k], x[2 * k + 1]);
  return z;
}

inline Vec pack(const CVec& z) {
  Vec x(2 * z.size());
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    x[2 * k] = z[k].real();
    x[2 * k + 1] = z[k].imag();
  }
  return x;
}

bool all_finite(const Vec& x);

// Central-difference gradient with step h*(1+|x_i|).
Vec fd_gradient(const ScalarFn& f, const Vec& x, double h = 1e-5);
// Central-difference Jacobian, columns are d f / d x_j.
Mat fd_jacobian(const VectorFn& f, const Vec& x, double h = 1e-6);
// Fourth-order directional derivative d/ds f(x + s v) at s = 0.
double fd_directional(const ScalarFn& f, const Vec& x, const Vec& v, double h = 1e-3);
// Fourth-order gradient, step h*(1+|x_i|).
Vec fd_gradient4(const ScalarFn& f, const Vec& x, double h = 1e-3);
// Fourth-order directional derivative of a vector function.
Vec fd_directional_vec(const VectorFn& f, const Vec& x, const Vec& v, double h = 1e-3);

}  // namespace cdlab
