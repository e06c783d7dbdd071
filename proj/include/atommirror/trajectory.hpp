#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "atommirror/types.hpp"

namespace atommirror {

/// y(t) = epsilon cos(omega_cm t) along one axis, observed for a time T.
struct MonochromaticMotion {
  MotionAxis axis = MotionAxis::Parallel;
  double epsilon = 0.0;
  double omega_cm = 1.0;
  double window_T = 1.0;

  void validate() const;
  /// Non-empty when epsilon * max(omega_cm, Omega) >= 0.1: the second-order
  /// expansion in the displacement is losing accuracy. Never an error.
  std::optional<std::string> perturbative_warning(const AtomParams& p) const;
};

/// Uniformly sampled displacement. The constructor removes the sample mean
/// (the mean position is the mirror distance a) and records it.
class SampledTrajectory {
public:
  SampledTrajectory(MotionAxis axis, std::vector<double> samples, double dt);

  MotionAxis axis() const { return axis_; }
  const std::vector<double>& samples() const { return samples_; }
  double dt() const { return dt_; }
  double removed_mean() const { return removed_mean_; }
  double window() const { return dt_ * static_cast<double>(samples_.size()); }

private:
  MotionAxis axis_;
  std::vector<double> samples_;
  double dt_;
  double removed_mean_ = 0.0;
};

/// Component index into the displacement vector (x^1, x^2, x^3).
inline int component_of(MotionAxis axis) { return axis == MotionAxis::Parallel ? 0 : 2; }

/// One discrete frequency of the displacement spectrum. The continuous
/// transform is y~(nu) = 2 pi sum_j c_j delta(nu - nu_j), so with
/// delta(0) -> T/(2 pi) a line carries |c_j|^2 T of squared weight.
struct SpectralLine {
  double nu = 0.0;
  std::array<std::complex<double>, 3> amplitude{};
};

class TrajectorySpectrum {
public:
  enum class Kind { Lines, Grid };

  TrajectorySpectrum() = default;
  // Lines are stored in ascending frequency. Zero frequencies are rejected.
  TrajectorySpectrum(Kind kind, std::vector<SpectralLine> lines, double window_T,
                     std::optional<double> self_conjugate_nu = std::nullopt);

  Kind kind() const { return kind_; }
  const std::vector<SpectralLine>& lines() const { return lines_; }
  double window() const { return window_; }
  /// Frequency spacing of a Grid spectrum (2 pi / T); 0 for Lines.
  double grid_spacing() const;
  /// Nyquist frequency of an even-length DFT: its own conjugate partner.
  std::optional<double> self_conjugate_nu() const { return self_conjugate_; }

  /// y~(-nu) = conj(y~(nu)) for every line, within rel_tol of the largest
  /// amplitude.
  bool is_hermitian(double rel_tol = 1e-12) const;

  TrajectorySpectrum scaled(double factor) const;

private:
  Kind kind_ = Kind::Lines;
  std::vector<SpectralLine> lines_;
  double window_ = 1.0;
  std::optional<double> self_conjugate_;
};

/// Lines at +/- omega_cm with amplitude epsilon/2 each; empty for epsilon = 0.
TrajectorySpectrum spectrum_of_monochromatic(const MonochromaticMotion& mm);

/// Rectangular-window DFT c_k = (1/N) sum_n y_n exp(+i nu_k t_n) on
/// nu_k = 2 pi k/(N dt), T = N dt. The DC bin is dropped (the mean is zero).
TrajectorySpectrum spectrum_of_sampled(const SampledTrajectory& st);

struct LineContribution {
  double nu = 0.0;
  double weight = 0.0; // sum_i |c_i|^2
  double rate = 0.0;   // contribution to P / T
};

struct DecayProbability {
  double probability = 0.0; // P over the window
  double rate = 0.0;        // P / T
  double window = 0.0;
  std::vector<LineContribution> lines; // ascending nu, every line
};

/// Vacuum-decay probability to second order in the displacement:
///   P = factor * (1/2) Integral dnu/2pi y~^i(-nu) y~^j(nu) m^ij(nu)
///     = factor * (T/2) sum_j sum_i |c_j^i|^2 m^ii(nu_j).
/// factor = 1 is the Im Gamma quadratic form; 2 applies the "twice Im Gamma"
/// convention. Throws ValidationError if the spectrum is not Hermitian.
DecayProbability vacuum_decay_probability(const TrajectorySpectrum& ts, const AtomParams& p,
                                          const MirrorConfig& mc, double im_gamma_factor = 1.0);

/// epsilon^2 kernel(omega_cm) / 4: the rate of the line evaluation above.
double excitation_rate_monochromatic(const MonochromaticMotion& mm, const AtomParams& p,
                                     const MirrorConfig& mc);

/// Samples of epsilon cos(omega_cm t) at t_n = n dt for n = 0..count-1.
SampledTrajectory sample_monochromatic(MotionAxis axis, double epsilon, double omega_cm,
                                       double dt, std::size_t count);

} // namespace atommirror
