#pragma once

// Reference evaluations used only by the tests. Nothing here calls into the
// library, so agreement is a genuine cross-check.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>

namespace oracle {

using big = boost::multiprecision::cpp_bin_float_50;

enum class Ch { Dpar, Dperp, Npar, Nperp };

// Brace function evaluated from the trigonometric form in 50-digit arithmetic.
inline big brace(Ch ch, const big& x) {
  using boost::multiprecision::cos;
  using boost::multiprecision::sin;
  const big c = cos(2 * x);
  const big s = sin(2 * x);
  const big x2 = x * x;
  const big x3 = x2 * x;
  switch (ch) {
  case Ch::Dpar:
    return big(2) / 3 + c / (2 * x2) - s / (4 * x3);
  case Ch::Dperp:
    return big(1) / 3 + c / (2 * x2) - s / (4 * x3) + s / (2 * x);
  case Ch::Npar:
    return big(1) / 3 - c / (4 * x2) + s / (8 * x3);
  case Ch::Nperp:
    return big(1) / 3 - c / (2 * x2) + s / (4 * x3) - s / (2 * x);
  }
  return 0;
}

inline double brace_d(Ch ch, double x) { return static_cast<double>(brace(ch, big(x))); }

// Ratio to the free kernel: 3/2 B for D par, 3 B otherwise.
inline double ratio(Ch ch, double x) {
  return (ch == Ch::Dpar ? 1.5 : 3.0) * brace_d(ch, x);
}

// Kernel at frequency nu by direct angular quadrature of the momentum-space
// integrand, written out independently of the library:
//   par : (pi g^2 / 2 m Omega) (2pi)^-3 p^2 * int dOmega p sin^2 th / 2 [1 -/+ cos(2 p a cos th)]
//   perp: (pi g^2 / 2 m Omega) (2pi)^-3 p^2 * int dOmega p cos^2 th [1 +/- cos(2 p a cos th)]
inline double kernel_by_quadrature(Ch ch, double nu, double g, double m, double Om, double a) {
  const double p = std::abs(nu) - Om;
  if (p <= 0.0)
    return 0.0;
  const double pi = std::numbers::pi;
  const bool par = ch == Ch::Dpar || ch == Ch::Npar;
  // Dirichlet par and Neumann perp carry a minus sign in front of the cosine.
  const double sgn = (ch == Ch::Dpar || ch == Ch::Nperp) ? -1.0 : 1.0;
  auto f = [&](double th) {
    const double c = std::cos(th);
    const double s = std::sin(th);
    const double bracket = 1.0 + sgn * std::cos(2.0 * p * a * c);
    // p_par^2 / 2 is already the azimuthal average of (p^1)^2.
    return par ? s * p * s * s / 2.0 * bracket * 2.0 * pi : s * p * c * c * bracket * 2.0 * pi;
  };
  double err = 0.0;
  const int pieces = 8 + 8 * static_cast<int>(std::ceil(p * a));
  double total = 0.0;
  for (int i = 0; i < pieces; ++i)
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, pi * i / pieces, pi * (i + 1) / pieces, 10, 1e-11, &err);
  return (pi * g * g / (2.0 * m * Om)) / std::pow(2.0 * pi, 3) * p * p * total;
}

} // namespace oracle
