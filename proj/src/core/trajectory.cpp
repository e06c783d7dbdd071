#include "atommirror/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include <fftw3.h>

#include "atommirror/core_spectral.hpp"

namespace atommirror {

namespace {

constexpr double pi = std::numbers::pi;

// The FFTW planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

double max_amplitude(const std::vector<SpectralLine>& lines) {
  double out = 0.0;
  for (const auto& l : lines)
    for (const auto& c : l.amplitude)
      out = std::max(out, std::abs(c));
  return out;
}

} // namespace

void MonochromaticMotion::validate() const {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
    throw DomainError("amplitude epsilon must be >= 0");
  if (!(omega_cm > 0.0) || !std::isfinite(omega_cm))
    throw DomainError("oscillation frequency omega_cm must be > 0");
  if (!(window_T > 0.0) || !std::isfinite(window_T))
    throw DomainError("observation window T must be > 0");
}

std::optional<std::string> MonochromaticMotion::perturbative_warning(const AtomParams& p) const {
  const double scale = epsilon * std::max(omega_cm, p.omega);
  if (scale < 0.1)
    return std::nullopt;
  std::ostringstream os;
  os << "epsilon * max(omega_cm, Omega) = " << scale
     << " is not small; second-order results may be inaccurate";
  return os.str();
}

SampledTrajectory::SampledTrajectory(MotionAxis axis, std::vector<double> samples, double dt)
    : axis_(axis), samples_(std::move(samples)), dt_(dt) {
  if (samples_.size() < 2)
    throw DomainError("a sampled trajectory needs at least 2 samples");
  if (!(dt_ > 0.0) || !std::isfinite(dt_))
    throw DomainError("time step dt must be > 0");
  long double sum = 0.0L;
  for (double y : samples_) {
    if (!std::isfinite(y))
      throw DomainError("trajectory samples must be finite");
    sum += y;
  }
  removed_mean_ = static_cast<double>(sum / static_cast<long double>(samples_.size()));
  for (double& y : samples_)
    y -= removed_mean_;
}

TrajectorySpectrum::TrajectorySpectrum(Kind kind, std::vector<SpectralLine> lines, double window_T,
                                       std::optional<double> self_conjugate_nu)
    : kind_(kind), lines_(std::move(lines)), window_(window_T), self_conjugate_(self_conjugate_nu) {
  if (!(window_ > 0.0))
    throw DomainError("spectrum window T must be > 0");
  for (const auto& l : lines_)
    if (l.nu == 0.0 || !std::isfinite(l.nu))
      throw DomainError("spectral line frequencies must be finite and nonzero");
  std::stable_sort(lines_.begin(), lines_.end(),
                   [](const SpectralLine& a, const SpectralLine& b) { return a.nu < b.nu; });
}

double TrajectorySpectrum::grid_spacing() const {
  return kind_ == Kind::Grid ? 2.0 * pi / window_ : 0.0;
}

bool TrajectorySpectrum::is_hermitian(double rel_tol) const {
  const double amp_tol = rel_tol * std::max(max_amplitude(lines_), 1e-300);
  double nu_scale = 0.0;
  for (const auto& l : lines_)
    nu_scale = std::max(nu_scale, std::abs(l.nu));
  const double nu_tol = 1e-9 * nu_scale;

  for (const auto& line : lines_) {
    if (self_conjugate_ && std::abs(line.nu - *self_conjugate_) <= nu_tol) {
      for (const auto& c : line.amplitude)
        if (std::abs(c.imag()) > amp_tol)
          return false;
      continue;
    }
    auto it = std::lower_bound(lines_.begin(), lines_.end(), -line.nu - nu_tol,
                               [](const SpectralLine& l, double v) { return l.nu < v; });
    if (it == lines_.end() || std::abs(it->nu + line.nu) > nu_tol)
      return false;
    for (int i = 0; i < 3; ++i)
      if (std::abs(it->amplitude[i] - std::conj(line.amplitude[i])) > amp_tol)
        return false;
  }
  return true;
}

TrajectorySpectrum TrajectorySpectrum::scaled(double factor) const {
  auto lines = lines_;
  for (auto& l : lines)
    for (auto& c : l.amplitude)
      c *= factor;
  return TrajectorySpectrum(kind_, std::move(lines), window_, self_conjugate_);
}

TrajectorySpectrum spectrum_of_monochromatic(const MonochromaticMotion& mm) {
  mm.validate();
  std::vector<SpectralLine> lines;
  if (mm.epsilon > 0.0) {
    const int comp = component_of(mm.axis);
    for (double sign : {-1.0, 1.0}) {
      SpectralLine l;
      l.nu = sign * mm.omega_cm;
      l.amplitude[comp] = mm.epsilon / 2.0;
      lines.push_back(l);
    }
  }
  return TrajectorySpectrum(TrajectorySpectrum::Kind::Lines, std::move(lines), mm.window_T);
}

TrajectorySpectrum spectrum_of_sampled(const SampledTrajectory& st) {
  const auto& y = st.samples();
  const std::size_t n = y.size();
  const std::size_t bins = n / 2 + 1;
  std::vector<double> in(y.begin(), y.end());
  std::vector<fftw_complex> out(bins);
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(), out.data(), FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }

  const double window = st.window();
  const double spacing = 2.0 * pi / window;
  const int comp = component_of(st.axis());
  const bool even = n % 2 == 0;
  std::vector<SpectralLine> lines;
  lines.reserve(n);
  std::optional<double> nyquist;
  for (std::size_t k = 1; k < bins; ++k) {
    // FFTW uses exp(-i ...); the transform here carries exp(+i nu t).
    const std::complex<double> c =
        std::conj(std::complex<double>(out[k][0], out[k][1])) / static_cast<double>(n);
    const double nu = spacing * static_cast<double>(k);
    SpectralLine pos;
    pos.nu = nu;
    pos.amplitude[comp] = c;
    if (even && k == n / 2) {
      pos.amplitude[comp] = std::complex<double>(c.real(), 0.0);
      nyquist = nu;
      lines.push_back(pos);
      continue;
    }
    SpectralLine neg;
    neg.nu = -nu;
    neg.amplitude[comp] = std::conj(c);
    lines.push_back(pos);
    lines.push_back(neg);
  }
  return TrajectorySpectrum(TrajectorySpectrum::Kind::Grid, std::move(lines), window, nyquist);
}

DecayProbability vacuum_decay_probability(const TrajectorySpectrum& ts, const AtomParams& p,
                                          const MirrorConfig& mc, double im_gamma_factor) {
  p.validate();
  mc.validate();
  if (!(im_gamma_factor > 0.0))
    throw DomainError("im_gamma_factor must be > 0");
  if (!ts.is_hermitian())
    throw ValidationError("trajectory spectrum is not Hermitian: y~(-nu) != conj(y~(nu))");

  DecayProbability out;
  out.window = ts.window();
  out.lines.reserve(ts.lines().size());
  const double T = ts.window();
  double rate = 0.0;
  for (const auto& line : ts.lines()) {
    const auto m = dissipation_matrix(line.nu, p, mc).diagonal();
    double weight = 0.0;
    double contribution = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double w = std::norm(line.amplitude[i]);
      weight += w;
      contribution += w * m[i];
    }
    contribution *= 0.5 * im_gamma_factor;
    rate += contribution;
    out.lines.push_back({line.nu, weight, contribution});
  }
  out.rate = rate;
  out.probability = rate * T;
  return out;
}

double excitation_rate_monochromatic(const MonochromaticMotion& mm, const AtomParams& p,
                                     const MirrorConfig& mc) {
  mm.validate();
  return mm.epsilon * mm.epsilon * kernel(mm.axis, mm.omega_cm, p, mc) / 4.0;
}

SampledTrajectory sample_monochromatic(MotionAxis axis, double epsilon, double omega_cm,
                                       double dt, std::size_t count) {
  std::vector<double> y(count);
  for (std::size_t n = 0; n < count; ++n)
    y[n] = epsilon * std::cos(omega_cm * dt * static_cast<double>(n));
  return SampledTrajectory(axis, std::move(y), dt);
}

} // namespace atommirror
