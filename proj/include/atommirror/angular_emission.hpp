#pragma once

#include <complex>

#include "atommirror/types.hpp"

namespace atommirror {

/// Polar angle theta in [0, pi] from the mirror normal through the atom;
/// azimuth phi in [0, 2 pi) with phi = 0 along the parallel motion (x^1).
struct SphericalDirection {
  double theta = 0.0;
  double phi = 0.0;

  void validate() const;
};

/// Dimensionless angular pattern p(ka, theta, phi):
///   D par : sin^2(theta) sin^2(ka cos theta) cos^2(phi)
///   D perp: cos^2(theta) cos^2(ka cos theta)
///   N par : sin^2(theta) cos^2(ka cos theta) cos^2(phi)
///   N perp: cos^2(theta) sin^2(ka cos theta)
double pattern(BoundaryCondition bc, MotionAxis axis, double ka, const SphericalDirection& dir);

/// g^2 / (2 (2pi)^3 m Omega) for parallel (per dtheta dphi) and
/// g^2 / (2 (2pi)^2 m Omega) for perpendicular (phi already integrated).
double density_prefactor(MotionAxis axis, const AtomParams& p);

/// Differential excitation probability per dk dtheta [dphi] with the trajectory
/// factor |y(Omega + k)|^2 stripped: prefactor * k^3 * sin(theta) * pattern.
/// Perpendicular results are phi-integrated unless phi_resolved is set, in
/// which case they are divided by 2 pi.
double reduced_density(MotionAxis axis, double k, const SphericalDirection& dir,
                       const AtomParams& p, const MirrorConfig& mc, bool phi_resolved = false);

/// Angle-integrated dP/dk = kernel(Omega + k) / (2 pi) * |y(Omega + k)|^2.
double excitation_spectrum_density(MotionAxis axis, double k,
                                   std::complex<double> trajectory_amplitude,
                                   const AtomParams& p, const MirrorConfig& mc);

} // namespace atommirror
