#include "atommirror/angular_emission.hpp"

#include <cmath>
#include <numbers>

#include "atommirror/core_spectral.hpp"

namespace atommirror {

namespace {
constexpr double pi = std::numbers::pi;
}

void SphericalDirection::validate() const {
  if (!(theta >= 0.0 && theta <= pi))
    throw DomainError("polar angle theta must lie in [0, pi]");
  if (!(phi >= 0.0 && phi < 2.0 * pi))
    throw DomainError("azimuth phi must lie in [0, 2 pi)");
}

double pattern(BoundaryCondition bc, MotionAxis axis, double ka, const SphericalDirection& dir) {
  if (!(ka >= 0.0))
    throw DomainError("ka must be >= 0");
  dir.validate();
  const double ct = std::cos(dir.theta);
  const double st = std::sin(dir.theta);
  const double phase = ka * ct;
  const double s2 = std::sin(phase) * std::sin(phase);
  const double c2 = std::cos(phase) * std::cos(phase);
  const bool dirichlet = bc == BoundaryCondition::Dirichlet;
  if (axis == MotionAxis::Parallel) {
    const double cphi = std::cos(dir.phi);
    return st * st * (dirichlet ? s2 : c2) * cphi * cphi;
  }
  return ct * ct * (dirichlet ? c2 : s2);
}

double density_prefactor(MotionAxis axis, const AtomParams& p) {
  const double g2 = p.coupling * p.coupling;
  const double two_pi = 2.0 * pi;
  if (axis == MotionAxis::Parallel)
    return g2 / (2.0 * two_pi * two_pi * two_pi * p.mass * p.omega);
  return g2 / (2.0 * two_pi * two_pi * p.mass * p.omega);
}

double reduced_density(MotionAxis axis, double k, const SphericalDirection& dir,
                       const AtomParams& p, const MirrorConfig& mc, bool phi_resolved) {
  p.validate();
  mc.validate();
  if (!(k > 0.0))
    throw DomainError("wavenumber k must be > 0");
  double value = density_prefactor(axis, p) * k * k * k * std::sin(dir.theta) *
                 pattern(mc.bc, axis, k * mc.distance, dir);
  if (phi_resolved && axis == MotionAxis::Perpendicular)
    value /= 2.0 * pi;
  return value;
}

double excitation_spectrum_density(MotionAxis axis, double k,
                                   std::complex<double> trajectory_amplitude,
                                   const AtomParams& p, const MirrorConfig& mc) {
  if (!(k > 0.0))
    throw DomainError("wavenumber k must be > 0");
  return kernel(axis, p.omega + k, p, mc) / (2.0 * pi) * std::norm(trajectory_amplitude);
}

} // namespace atommirror
