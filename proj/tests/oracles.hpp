#pragma once

// Independent quadrature oracles built on Boost; nothing here calls the library's own quadrature.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace oracle {

inline double raw_bump(double t) { return std::abs(t) < 1.0 ? std::exp(1.0 / (t * t - 1.0)) : 0.0; }

inline double integrate(const std::function<double(double)>& f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(f, a, b);
}

// Oscillatory integrands: composite Gauss-Kronrod on short panels.
inline double integrate_panels(const std::function<double(double)>& f, double a, double b, double panel) {
  double acc = 0;
  for (double x = a; x < b; x += panel)
    acc += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, x, std::min(x + panel, b), 0, 0);
  return acc;
}

// a with 2 pi a^2 int raw^2 = 1
inline double bump_a() {
  double I = integrate([](double t) { return raw_bump(t) * raw_bump(t); }, -1.0, 1.0);
  return 1.0 / std::sqrt(2.0 * std::numbers::pi * I);
}

inline double phi_hat(double w) {
  const double a = bump_a();
  return a * integrate([w](double t) { return raw_bump(t) * std::cos(w * t); }, -1.0, 1.0);
}

// psi_hat(w) = 2 pi (phi * phi)(w)
inline double psi_hat(double w) {
  if (std::abs(w) >= 2.0) return 0.0;
  const double a = bump_a();
  double lo = std::max(-1.0, w - 1.0), hi = std::min(1.0, w + 1.0);
  return 2.0 * std::numbers::pi * a * a * integrate([w](double s) { return raw_bump(s) * raw_bump(w - s); }, lo, hi);
}

inline double raw_mass() { return integrate(raw_bump, -1.0, 1.0); }

// int e^{-s} rho(s) ds
inline double bump_exp_moment() {
  return integrate([](double s) { return std::exp(-s) * raw_bump(s); }, -1.0, 1.0) / raw_mass();
}

// int_a^b e^{i s^2} ds
inline std::complex<double> fresnel(double a, double b) {
  double re = integrate_panels([](double s) { return std::cos(s * s); }, a, b, 0.05);
  double im = integrate_panels([](double s) { return std::sin(s * s); }, a, b, 0.05);
  return {re, im};
}

}  // namespace oracle
