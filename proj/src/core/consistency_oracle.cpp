#include "atommirror/consistency_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

#include "atommirror/angular_emission.hpp"
#include "atommirror/core_spectral.hpp"

namespace atommirror {

namespace {

constexpr double pi = std::numbers::pi;

// Sign in front of cos(2 p^3 a): the image term enters with -1 for Dirichlet
// parallel/Neumann perpendicular and +1 for the other two.
double image_sign(BoundaryCondition bc, MotionAxis axis) {
  const bool dirichlet = bc == BoundaryCondition::Dirichlet;
  const bool parallel = axis == MotionAxis::Parallel;
  return (dirichlet == parallel) ? -1.0 : 1.0;
}

double relative_error(double reference, double value) {
  const double diff = std::abs(value - reference);
  if (reference == 0.0)
    return diff == 0.0 ? 0.0 : INFINITY;
  return diff / std::abs(reference);
}

} // namespace

double momentum_integral_kernel(MotionAxis axis, double nu, const AtomParams& p,
                                const MirrorConfig& mc, const QuadratureSpec& q) {
  p.validate();
  mc.validate();
  const double momentum = std::abs(nu) - p.omega;
  if (!(momentum > 0.0))
    return 0.0;

  const double sign = image_sign(mc.bc, axis);
  const double pa = momentum * mc.distance;
  // Integrand over the direction of p, per unit solid angle, without phi
  // dependence for the p_par^2/2 form.
  auto weight = [&](double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double image = 1.0 + sign * std::cos(2.0 * pa * c);
    if (axis == MotionAxis::Parallel)
      return momentum * s * s / 2.0 * image; // p_par^2 / (2p)
    return momentum * c * c * image;         // (p^3)^2 / p
  };

  const std::size_t panels = oscillatory_panels(pa);
  double solid_angle_integral = 0.0;
  if (axis == MotionAxis::Parallel && q.numeric_phi) {
    // (p^1)^2 / p with the azimuth kept explicit.
    auto inner = [&](double theta) {
      const double s = std::sin(theta);
      const double c = std::cos(theta);
      const double image = 1.0 + sign * std::cos(2.0 * pa * c);
      auto over_phi = [&](double phi) {
        const double p1 = momentum * s * std::cos(phi);
        return p1 * p1 / momentum * image;
      };
      return s * integrate(over_phi, 0.0, 2.0 * pi, 8, q).value;
    };
    solid_angle_integral = integrate(inner, 0.0, pi, panels, q).value;
  } else {
    auto with_measure = [&](double theta) { return std::sin(theta) * weight(theta); };
    solid_angle_integral = 2.0 * pi * integrate(with_measure, 0.0, pi, panels, q).value;
  }

  const double g2 = p.coupling * p.coupling;
  const double overall = pi * g2 / (2.0 * p.mass * p.omega);
  const double measure = 1.0 / ((2.0 * pi) * (2.0 * pi) * (2.0 * pi));
  // p^2 dp from d^3p, evaluated on the delta shell.
  return overall * measure * momentum * momentum * solid_angle_integral;
}

double angular_total(MotionAxis axis, double k, const AtomParams& p, const MirrorConfig& mc,
                     const QuadratureSpec& q) {
  if (!(k > 0.0))
    throw DomainError("wavenumber k must be > 0");
  p.validate();
  mc.validate();
  const std::size_t panels = oscillatory_panels(k * mc.distance);
  if (axis == MotionAxis::Perpendicular) {
    auto f = [&](double theta) {
      return reduced_density(axis, k, SphericalDirection{theta, 0.0}, p, mc);
    };
    return integrate(f, 0.0, pi, panels, q).value;
  }
  if (q.numeric_phi) {
    auto inner = [&](double theta) {
      auto over_phi = [&](double phi) {
        return reduced_density(axis, k, SphericalDirection{theta, phi}, p, mc);
      };
      return integrate(over_phi, 0.0, 2.0 * pi, 8, q).value;
    };
    return integrate(inner, 0.0, pi, panels, q).value;
  }
  // cos^2(phi) integrates to pi.
  auto f = [&](double theta) {
    return reduced_density(axis, k, SphericalDirection{theta, 0.0}, p, mc);
  };
  return pi * integrate(f, 0.0, pi, panels, q).value;
}

double static_decay_quadrature(const AtomParams& p, const MirrorConfig& mc,
                               const QuadratureSpec& q) {
  p.validate();
  mc.validate();
  const double k = p.omega;
  const double ka = k * mc.distance;
  const bool dirichlet = mc.bc == BoundaryCondition::Dirichlet;
  // d^3k/(2pi)^3 * g^2/(2 m Omega k) * mode factor * 4 pi^2 delta(Omega - k),
  // radial delta resolved at k = Omega; the T factor is divided out.
  auto per_theta = [&](double theta) {
    const double phase = ka * std::cos(theta);
    const double mode = dirichlet ? std::pow(std::sin(phase), 2) : std::pow(std::cos(phase), 2);
    return std::sin(theta) * mode;
  };
  const double angular = 2.0 * pi * integrate(per_theta, 0.0, pi, oscillatory_panels(ka), q).value;
  const double g2 = p.coupling * p.coupling;
  const double measure = 1.0 / ((2.0 * pi) * (2.0 * pi) * (2.0 * pi));
  return measure * k * k * g2 / (2.0 * p.mass * p.omega * k) * 4.0 * pi * pi * angular;
}

std::string channel_name(const Channel& c) {
  return std::string(to_string(c.bc)) + "-" + std::string(to_string(c.axis));
}

Channel parse_channel(const std::string& text) {
  const auto dash = text.find('-');
  if (dash == std::string::npos)
    throw DomainError("channel must look like D-par or N-perp, got '" + text + "'");
  return {parse_boundary_condition(text.substr(0, dash)), parse_motion_axis(text.substr(dash + 1))};
}

namespace {

ConsistencyReport evaluate_point(const Channel& channel, double x, const VerifyOptions& options) {
  const AtomParams atom{1.0, 1.0, 1.0};
  const MirrorConfig mirror{channel.bc, x};
  const double k = 1.0;
  const double nu = atom.omega + k;

  ConsistencyReport r;
  r.channel = channel;
  r.x = x;
  r.closed_form = kernel(channel.axis, nu, atom, mirror);
  r.quadrature = momentum_integral_kernel(channel.axis, nu, atom, mirror, options.quadrature);
  r.angular_quadrature = 2.0 * pi * angular_total(channel.axis, k, atom, mirror, options.quadrature);
  r.momentum_rel_error = relative_error(r.closed_form, r.quadrature);
  r.angular_rel_error = relative_error(r.closed_form, r.angular_quadrature);
  r.rel_error = std::max(r.momentum_rel_error, r.angular_rel_error);
  r.measured_ratio_to_imgamma = r.closed_form != 0.0 ? r.angular_quadrature / r.closed_form : 0.0;

  if (std::abs(r.closed_form) < options.zero_threshold) {
    const double worst = std::max(std::abs(r.quadrature - r.closed_form),
                                  std::abs(r.angular_quadrature - r.closed_form));
    r.passed = worst <= options.abs_tolerance || r.rel_error <= options.tolerance;
  } else {
    r.passed = r.rel_error <= options.tolerance;
  }
  return r;
}

} // namespace

std::vector<ConsistencyReport> verify_all(std::span<const double> xs,
                                          std::span<const Channel> channels,
                                          const VerifyOptions& options) {
  if (xs.empty())
    throw DomainError("verification grid must be nonempty");
  if (channels.empty())
    throw DomainError("at least one channel is required");
  for (double x : xs)
    if (!(x > 0.0))
      throw DomainError("verification grid values must be > 0");
  options.quadrature.validate();

  std::vector<Channel> ordered(channels.begin(), channels.end());
  std::sort(ordered.begin(), ordered.end(), [](const Channel& a, const Channel& b) {
    return std::pair(a.bc, a.axis) < std::pair(b.bc, b.axis);
  });
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
  std::vector<double> grid(xs.begin(), xs.end());
  std::sort(grid.begin(), grid.end());

  std::vector<std::pair<Channel, double>> tasks;
  for (const auto& c : ordered)
    for (double x : grid)
      tasks.emplace_back(c, x);

  std::vector<ConsistencyReport> reports(tasks.size());
  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      reports[i] = evaluate_point(tasks[i].first, tasks[i].second, options);
    return reports;
  }

  // Strided partition; each slot is written by exactly one worker.
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < tasks.size(); i += workers)
        reports[i] = evaluate_point(tasks[i].first, tasks[i].second, options);
    }));
  }
  for (auto& j : jobs)
    j.get();
  return reports;
}

bool all_passed(std::span<const ConsistencyReport> reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const ConsistencyReport& r) { return r.passed; });
}

std::vector<double> logspace(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > 0.0))
    throw DomainError("logspace bounds must be > 0");
  if (n == 0)
    throw DomainError("logspace needs at least one point");
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double l0 = std::log10(lo);
  const double l1 = std::log10(hi);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = std::pow(10.0, l0 + (l1 - l0) * static_cast<double>(i) / static_cast<double>(n - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

} // namespace atommirror
