#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "atommirror/quadrature.hpp"
#include "atommirror/types.hpp"

namespace atommirror {

/// Kernel from the momentum-space integral it is derived from: the radial
/// delta(|nu| - p - Omega) is resolved at p = |nu| - Omega and the angular
/// integral of
///   par : p_par^2 / (2p) [1 -/+ cos(2 p^3 a)]
///   perp: (p^3)^2 / p   [1 +/- cos(2 p^3 a)]
/// (upper sign Dirichlet) is done by adaptive quadrature. Returns exactly 0
/// for |nu| <= Omega. Throws QuadratureFailure on non-convergence.
double momentum_integral_kernel(MotionAxis axis, double nu, const AtomParams& p,
                                const MirrorConfig& mc, const QuadratureSpec& q = {});

/// Integral of reduced_density over theta (and phi for parallel motion) at
/// fixed k: the per-dk coefficient of |y(Omega + k)|^2.
double angular_total(MotionAxis axis, double k, const AtomParams& p, const MirrorConfig& mc,
                     const QuadratureSpec& q = {});

/// Static-atom decay rate from the angular integral of the static term
/// 4 pi^2 T delta(Omega - k) of the decay probability, divided by T.
double static_decay_quadrature(const AtomParams& p, const MirrorConfig& mc,
                               const QuadratureSpec& q = {});

struct Channel {
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
  MotionAxis axis = MotionAxis::Parallel;

  friend bool operator==(const Channel&, const Channel&) = default;
};

inline constexpr Channel kAllChannels[] = {
    {BoundaryCondition::Dirichlet, MotionAxis::Parallel},
    {BoundaryCondition::Dirichlet, MotionAxis::Perpendicular},
    {BoundaryCondition::Neumann, MotionAxis::Parallel},
    {BoundaryCondition::Neumann, MotionAxis::Perpendicular},
};

// "D-par", "N-perp", ...
std::string channel_name(const Channel& c);
Channel parse_channel(const std::string& text);

struct ConsistencyReport {
  Channel channel;
  double x = 0.0;
  double closed_form = 0.0;        // kernel
  double quadrature = 0.0;         // momentum_integral_kernel
  double angular_quadrature = 0.0; // 2 pi * angular_total
  double momentum_rel_error = 0.0;
  double angular_rel_error = 0.0;
  double rel_error = 0.0; // max of the two above
  bool passed = false;
  // 2 pi angular_total / kernel; 1 when the printed angular densities and the
  // printed Im Gamma kernel agree as written.
  double measured_ratio_to_imgamma = 0.0;
};

struct VerifyOptions {
  double tolerance = 1e-8;      // pass threshold on rel_error
  double zero_threshold = 1e-12; // below this |closed_form| use abs_tolerance
  double abs_tolerance = 1e-14;
  QuadratureSpec quadrature{};
  unsigned workers = 1;
};

/// One report per (channel, x), evaluated at g = m = Omega = 1, k = 1 and
/// a = x so that x = a (|nu| - Omega). Reports are ordered by channel and then
/// by x regardless of the worker count. Throws DomainError for an empty grid
/// or empty channel list, QuadratureFailure on any non-convergence.
std::vector<ConsistencyReport> verify_all(std::span<const double> xs,
                                          std::span<const Channel> channels,
                                          const VerifyOptions& options = {});

bool all_passed(std::span<const ConsistencyReport> reports);

/// n points log-spaced between lo and hi inclusive (lo, hi > 0).
std::vector<double> logspace(double lo, double hi, std::size_t n);

} // namespace atommirror
