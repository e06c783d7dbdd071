#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "atommirror/angular_emission.hpp"
#include "atommirror/trajectory.hpp"
#include "atommirror/types.hpp"

namespace atommirror {

enum class LineOrigin { Static, SidebandPlus, SidebandMinus };
std::string_view to_string(LineOrigin origin);

struct EmissionLine {
  double omega = 0.0; // emitted particle energy
  double rate = 0.0;  // probability per unit time
  LineOrigin origin = LineOrigin::Static;
};

struct ContinuumSample {
  double omega = 0.0;
  double rate_density = 0.0; // d(rate)/d(omega)
};

struct EmissionSpectrum {
  std::vector<EmissionLine> lines;        // ascending omega
  std::vector<ContinuumSample> continuum; // sampled trajectories only

  double total_rate() const;
};

/// Decay rate of a static excited atom:
///   Dirichlet: g^2/(2m) (1 - sin(2 Omega a)/(2 Omega a))
///   Neumann  : g^2/(2m) (1 + sin(2 Omega a)/(2 Omega a))
double static_rate(const AtomParams& p, const MirrorConfig& mc);

/// Lines at Omega + omega_cm and, when omega_cm < Omega, Omega - omega_cm, each
/// with rate (epsilon^2/4) * sideband_kernel(axis, omega).
std::vector<EmissionLine> sideband_rates(const MonochromaticMotion& mm, const AtomParams& p,
                                         const MirrorConfig& mc);

/// Static line plus sidebands.
EmissionSpectrum emission_spectrum(const MonochromaticMotion& mm, const AtomParams& p,
                                   const MirrorConfig& mc);

/// Static line plus the motional part of an arbitrary spectrum: a Lines
/// spectrum yields one sideband line per frequency with Omega + nu > 0, a Grid
/// spectrum yields continuum samples of d(rate)/d(omega).
EmissionSpectrum emission_spectrum(const TrajectorySpectrum& ts, const AtomParams& p,
                                   const MirrorConfig& mc);

/// A line together with its rate per unit solid angle in direction dir.
struct AngularLine {
  double omega = 0.0;
  LineOrigin origin = LineOrigin::Static;
  double rate_per_solid_angle = 0.0;
};

/// Per-solid-angle decay rates of every line of emission_spectrum(mm, ...),
/// motion along mm.axis.
///   static  : g^2/(4 pi m) * {sin^2, cos^2}(Omega a cos theta)
///   sideband: g^2 omega^3 (epsilon/2)^2 / (8 pi^2 m Omega) * pattern(omega a, dir)
std::vector<AngularLine> angular_decay_lines(const SphericalDirection& dir,
                                             const MonochromaticMotion& mm, const AtomParams& p,
                                             const MirrorConfig& mc);

/// Rate per unit solid angle carried by the line at emitted energy k; zero if
/// no line sits at k (lines are exact deltas in k).
double angular_decay_density(double k, const SphericalDirection& dir,
                             const MonochromaticMotion& mm, const AtomParams& p,
                             const MirrorConfig& mc);

} // namespace atommirror
