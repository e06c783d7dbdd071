#pragma once

#include <array>
#include <complex>

#include "atommirror/types.hpp"

namespace atommirror {

/// Below this dimensionless distance the shape functions switch from the
/// direct trigonometric formula to a Taylor series in x^2.
inline constexpr double kSeriesSwitch = 0.05;

/// Dimensionless brace factor B(x) of the dissipation kernels.
///
/// The kernels read m(nu) = prefactor * (|nu| - Omega)^3 * B(a (|nu| - Omega)),
///   Dirichlet par : 2/3 + cos(2x)/(2x^2) - sin(2x)/(4x^3)
///   Dirichlet perp: 1/3 + cos(2x)/(2x^2) - sin(2x)/(4x^3) + sin(2x)/(2x)
///   Neumann   par : 1/3 - cos(2x)/(4x^2) + sin(2x)/(8x^3)
///   Neumann   perp: 1/3 - cos(2x)/(2x^2) + sin(2x)/(4x^3) - sin(2x)/(2x)
/// Throws DomainError for x < 0 (or NaN).
double shape_function(BoundaryCondition bc, MotionAxis axis, double x);

// The two evaluation branches, exposed for continuity checks.
double shape_function_series(BoundaryCondition bc, MotionAxis axis, double x);
double shape_function_direct(BoundaryCondition bc, MotionAxis axis, double x);

/// m(nu)/m0(nu) as a function of x alone.
double ratio_to_free(BoundaryCondition bc, MotionAxis axis, double x);

/// g^2 / (8 pi m Omega) for Dirichlet parallel, g^2 / (4 pi m Omega) otherwise.
double kernel_prefactor(BoundaryCondition bc, MotionAxis axis, const AtomParams& p);

/// Free-space kernel g^2/(12 pi m Omega) * theta(|nu| - Omega) * (|nu| - Omega)^3.
double m0(double nu, const AtomParams& p);

/// Mirror kernel m_par or m_perp at frequency nu; zero for |nu| <= Omega.
double kernel(MotionAxis axis, double nu, const AtomParams& p, const MirrorConfig& mc);

/// prefactor * omega^3 * B(omega a): the kernel with (|nu| - Omega) replaced by
/// the emitted energy omega, no threshold. Used by the decay-channel sidebands.
double sideband_kernel(MotionAxis axis, double omega, const AtomParams& p,
                       const MirrorConfig& mc);

/// diag(m_par, m_par, m_perp).
struct DissipationMatrix {
  double m_par = 0.0;
  double m_perp = 0.0;

  std::array<double, 3> diagonal() const { return {m_par, m_par, m_perp}; }
  double operator()(int i, int j) const;
};

DissipationMatrix dissipation_matrix(double nu, const AtomParams& p, const MirrorConfig& mc);

/// i / (m (nu^2 - Omega^2 + i eps)). eps must be > 0.
std::complex<double> oscillator_propagator(double nu, const AtomParams& p, double eps);

} // namespace atommirror
