#include "atommirror/spontaneous.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "atommirror/core_spectral.hpp"

namespace atommirror {

namespace {

constexpr double pi = std::numbers::pi;

// sin(z)/z, with its Taylor series where the quotient loses digits.
double sinc(double z) {
  if (std::abs(z) < 1e-3) {
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

// 1 - sin(z)/z without cancellation for small z.
double one_minus_sinc(double z) {
  if (std::abs(z) < 1e-2) {
    const double z2 = z * z;
    return z2 / 6.0 * (1.0 - z2 / 20.0 * (1.0 - z2 / 42.0 * (1.0 - z2 / 72.0)));
  }
  return 1.0 - std::sin(z) / z;
}

MotionAxis axis_of_component(int i) { return i == 2 ? MotionAxis::Perpendicular : MotionAxis::Parallel; }

// Lines closer than this (relative) to the requested k count as "at" k.
constexpr double kLineMatch = 1e-12;

} // namespace

std::string_view to_string(LineOrigin origin) {
  switch (origin) {
  case LineOrigin::Static:
    return "static";
  case LineOrigin::SidebandPlus:
    return "sideband_plus";
  case LineOrigin::SidebandMinus:
    return "sideband_minus";
  }
  return "unknown";
}

double EmissionSpectrum::total_rate() const {
  double sum = 0.0;
  for (const auto& l : lines)
    sum += l.rate;
  return sum;
}

double static_rate(const AtomParams& p, const MirrorConfig& mc) {
  p.validate();
  mc.validate();
  const double half = p.coupling * p.coupling / (2.0 * p.mass);
  const double z = 2.0 * p.omega * mc.distance;
  if (mc.bc == BoundaryCondition::Dirichlet)
    return half * one_minus_sinc(z);
  return half * (1.0 + sinc(z));
}

std::vector<EmissionLine> sideband_rates(const MonochromaticMotion& mm, const AtomParams& p,
                                         const MirrorConfig& mc) {
  mm.validate();
  p.validate();
  std::vector<EmissionLine> out;
  if (mm.epsilon == 0.0)
    return out;
  const double weight = mm.epsilon * mm.epsilon / 4.0;
  // omega_cm >= Omega would put the lower sideband at omega <= 0: dropped.
  if (mm.omega_cm < p.omega) {
    const double w = p.omega - mm.omega_cm;
    out.push_back({w, weight * sideband_kernel(mm.axis, w, p, mc), LineOrigin::SidebandMinus});
  }
  const double w = p.omega + mm.omega_cm;
  out.push_back({w, weight * sideband_kernel(mm.axis, w, p, mc), LineOrigin::SidebandPlus});
  return out;
}

EmissionSpectrum emission_spectrum(const MonochromaticMotion& mm, const AtomParams& p,
                                   const MirrorConfig& mc) {
  EmissionSpectrum s;
  s.lines.push_back({p.omega, static_rate(p, mc), LineOrigin::Static});
  for (const auto& l : sideband_rates(mm, p, mc))
    s.lines.push_back(l);
  std::sort(s.lines.begin(), s.lines.end(),
            [](const EmissionLine& a, const EmissionLine& b) { return a.omega < b.omega; });
  return s;
}

EmissionSpectrum emission_spectrum(const TrajectorySpectrum& ts, const AtomParams& p,
                                   const MirrorConfig& mc) {
  EmissionSpectrum s;
  s.lines.push_back({p.omega, static_rate(p, mc), LineOrigin::Static});
  const bool grid = ts.kind() == TrajectorySpectrum::Kind::Grid;
  const double spacing = ts.grid_spacing();
  for (const auto& line : ts.lines()) {
    const double omega = p.omega + line.nu;
    if (!(omega > 0.0))
      continue;
    double rate = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double w = std::norm(line.amplitude[i]);
      if (w != 0.0)
        rate += w * sideband_kernel(axis_of_component(i), omega, p, mc);
    }
    if (grid) {
      s.continuum.push_back({omega, rate / spacing});
    } else if (rate > 0.0) {
      s.lines.push_back({omega, rate, line.nu > 0.0 ? LineOrigin::SidebandPlus
                                                    : LineOrigin::SidebandMinus});
    }
  }
  std::sort(s.lines.begin(), s.lines.end(),
            [](const EmissionLine& a, const EmissionLine& b) { return a.omega < b.omega; });
  std::sort(s.continuum.begin(), s.continuum.end(),
            [](const ContinuumSample& a, const ContinuumSample& b) { return a.omega < b.omega; });
  return s;
}

std::vector<AngularLine> angular_decay_lines(const SphericalDirection& dir,
                                             const MonochromaticMotion& mm, const AtomParams& p,
                                             const MirrorConfig& mc) {
  mm.validate();
  p.validate();
  mc.validate();
  dir.validate();
  std::vector<AngularLine> out;

  const double g2 = p.coupling * p.coupling;
  const double phase = p.omega * mc.distance * std::cos(dir.theta);
  const double mode = mc.bc == BoundaryCondition::Dirichlet ? std::pow(std::sin(phase), 2)
                                                            : std::pow(std::cos(phase), 2);
  out.push_back({p.omega, LineOrigin::Static, g2 / (4.0 * pi * p.mass) * mode});

  const double amp2 = mm.epsilon * mm.epsilon / 4.0;
  for (const auto& line : sideband_rates(mm, p, mc)) {
    const double w = line.omega;
    const double density = g2 * w * w * w * amp2 / (8.0 * pi * pi * p.mass * p.omega) *
                           pattern(mc.bc, mm.axis, w * mc.distance, dir);
    out.push_back({w, line.origin, density});
  }
  std::sort(out.begin(), out.end(),
            [](const AngularLine& a, const AngularLine& b) { return a.omega < b.omega; });
  return out;
}

double angular_decay_density(double k, const SphericalDirection& dir,
                             const MonochromaticMotion& mm, const AtomParams& p,
                             const MirrorConfig& mc) {
  if (!(k > 0.0))
    throw DomainError("wavenumber k must be > 0");
  double sum = 0.0;
  for (const auto& l : angular_decay_lines(dir, mm, p, mc))
    if (std::abs(l.omega - k) <= kLineMatch * std::max(k, l.omega))
      sum += l.rate_per_solid_angle;
  return sum;
}

} // namespace atommirror
