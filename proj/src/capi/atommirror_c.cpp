#include "atommirror/atommirror.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "atommirror/angular_emission.hpp"
#include "atommirror/consistency_oracle.hpp"
#include "atommirror/core_spectral.hpp"
#include "atommirror/spontaneous.hpp"
#include "atommirror/trajectory.hpp"
#include "atommirror/trajectory_io.hpp"

using namespace atommirror;

struct am_spectrum {
  TrajectorySpectrum spectrum;
  double removed_mean = 0.0;
};

struct am_report {
  std::vector<ConsistencyReport> entries;
};

struct am_emission {
  EmissionSpectrum spectrum;
};

namespace {

thread_local std::string g_last_error;

void set_error(std::string message) { g_last_error = std::move(message); }

struct NullArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
am_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return AM_OK;
  } catch (const NullArgument& e) {
    set_error(e.what());
    return AM_ERR_NULL;
  } catch (const DomainError& e) {
    set_error(e.what());
    return AM_ERR_DOMAIN;
  } catch (const QuadratureFailure& e) {
    set_error(e.what());
    return AM_ERR_QUADRATURE;
  } catch (const ValidationError& e) {
    set_error(e.what());
    return AM_ERR_VALIDATION;
  } catch (const FormatError& e) {
    set_error(e.what());
    return AM_ERR_IO;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return AM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return AM_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return AM_ERR_INTERNAL;
  }
}

template <class T>
const T& deref(const T* p, const char* what) {
  if (!p)
    throw NullArgument(std::string(what) + " must not be NULL");
  return *p;
}

template <class... Ptrs>
bool any_null(Ptrs... ptrs) {
  return ((ptrs == nullptr) || ...);
}

am_status null_error(const char* what) {
  set_error(std::string(what) + " must not be NULL");
  return AM_ERR_NULL;
}

BoundaryCondition to_bc(am_bc bc) {
  switch (bc) {
  case AM_DIRICHLET:
    return BoundaryCondition::Dirichlet;
  case AM_NEUMANN:
    return BoundaryCondition::Neumann;
  }
  throw DomainError("invalid boundary condition value");
}

MotionAxis to_axis(am_axis axis) {
  switch (axis) {
  case AM_PARALLEL:
    return MotionAxis::Parallel;
  case AM_PERPENDICULAR:
    return MotionAxis::Perpendicular;
  }
  throw DomainError("invalid motion axis value");
}

am_axis from_axis(MotionAxis axis) {
  return axis == MotionAxis::Parallel ? AM_PARALLEL : AM_PERPENDICULAR;
}

am_bc from_bc(BoundaryCondition bc) {
  return bc == BoundaryCondition::Dirichlet ? AM_DIRICHLET : AM_NEUMANN;
}

am_origin from_origin(LineOrigin o) {
  switch (o) {
  case LineOrigin::Static:
    return AM_LINE_STATIC;
  case LineOrigin::SidebandPlus:
    return AM_LINE_SIDEBAND_PLUS;
  case LineOrigin::SidebandMinus:
    return AM_LINE_SIDEBAND_MINUS;
  }
  return AM_LINE_STATIC;
}

AtomParams to_atom(const am_atom* a) {
  const auto& v = deref(a, "atom");
  return {v.g, v.m, v.omega};
}

MirrorConfig to_mirror(const am_mirror* m) {
  const auto& v = deref(m, "mirror");
  return {to_bc(v.bc), v.a};
}

QuadratureSpec to_quadrature(const am_quadrature* q) {
  if (!q)
    return {};
  return {q->rel_tol, q->abs_tol, q->max_subdivisions, q->numeric_phi != 0};
}

MonochromaticMotion to_mono(const am_monochromatic* mm) {
  const auto& v = deref(mm, "monochromatic motion");
  return {to_axis(v.axis), v.epsilon, v.omega_cm, v.window_T};
}

} // namespace

extern "C" {

const char* am_last_error(void) { return g_last_error.c_str(); }

const char* am_status_string(am_status status) {
  switch (status) {
  case AM_OK:
    return "ok";
  case AM_ERR_DOMAIN:
    return "domain error";
  case AM_ERR_NULL:
    return "null argument";
  case AM_ERR_QUADRATURE:
    return "quadrature failure";
  case AM_ERR_VALIDATION:
    return "validation error";
  case AM_ERR_IO:
    return "input/output error";
  case AM_ERR_RANGE:
    return "index out of range";
  case AM_ERR_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

const char* am_version(void) { return "1.0.0"; }

am_atom am_atom_default(void) { return {1.0, 1.0, 1.0}; }
am_mirror am_mirror_default(void) { return {AM_DIRICHLET, 1.0}; }
am_quadrature am_quadrature_default(void) {
  const QuadratureSpec q;
  return {q.rel_tol, q.abs_tol, q.max_subdivisions, q.numeric_phi ? 1 : 0};
}

am_status am_shape_function(am_bc bc, am_axis axis, double x, double* out) {
  if (!out)
    return null_error("out");
  return guarded([&] { *out = shape_function(to_bc(bc), to_axis(axis), x); });
}

am_status am_ratio_to_free(am_bc bc, am_axis axis, double x, double* out) {
  if (!out)
    return null_error("out");
  return guarded([&] { *out = ratio_to_free(to_bc(bc), to_axis(axis), x); });
}

am_status am_m0(double nu, const am_atom* atom, double* out) {
  if (any_null(atom, out))
    return null_error("atom/out");
  return guarded([&] { *out = m0(nu, to_atom(atom)); });
}

am_status am_kernel(am_axis axis, double nu, const am_atom* atom, const am_mirror* mirror,
                    double* out) {
  if (any_null(atom, mirror, out))
    return null_error("atom/mirror/out");
  return guarded([&] { *out = kernel(to_axis(axis), nu, to_atom(atom), to_mirror(mirror)); });
}

am_status am_sideband_kernel(am_axis axis, double omega, const am_atom* atom,
                             const am_mirror* mirror, double* out) {
  if (any_null(atom, mirror, out))
    return null_error("atom/mirror/out");
  return guarded(
      [&] { *out = sideband_kernel(to_axis(axis), omega, to_atom(atom), to_mirror(mirror)); });
}

am_status am_dissipation_matrix(double nu, const am_atom* atom, const am_mirror* mirror,
                                double out[3]) {
  if (any_null(atom, mirror, out))
    return null_error("atom/mirror/out");
  return guarded([&] {
    const auto d = dissipation_matrix(nu, to_atom(atom), to_mirror(mirror)).diagonal();
    std::copy(d.begin(), d.end(), out);
  });
}

am_status am_oscillator_propagator(double nu, const am_atom* atom, double eps, double* re,
                                   double* im) {
  if (any_null(atom, re, im))
    return null_error("atom/re/im");
  return guarded([&] {
    const auto v = oscillator_propagator(nu, to_atom(atom), eps);
    *re = v.real();
    *im = v.imag();
  });
}

am_status am_pattern(am_bc bc, am_axis axis, double ka, double theta, double phi, double* out) {
  if (!out)
    return null_error("out");
  return guarded([&] {
    *out = pattern(to_bc(bc), to_axis(axis), ka, SphericalDirection{theta, phi});
  });
}

am_status am_reduced_density(am_axis axis, double k, double theta, double phi,
                             const am_atom* atom, const am_mirror* mirror, int phi_resolved,
                             double* out) {
  if (any_null(atom, mirror, out))
    return null_error("atom/mirror/out");
  return guarded([&] {
    *out = reduced_density(to_axis(axis), k, SphericalDirection{theta, phi}, to_atom(atom),
                           to_mirror(mirror), phi_resolved != 0);
  });
}

am_status am_excitation_spectrum_density(am_axis axis, double k, double amp_re, double amp_im,
                                         const am_atom* atom, const am_mirror* mirror,
                                         double* out) {
  if (any_null(atom, mirror, out))
    return null_error("atom/mirror/out");
  return guarded([&] {
    *out = excitation_spectrum_density(to_axis(axis), k, {amp_re, amp_im}, to_atom(atom),
                                       to_mirror(mirror));
  });
}

am_status am_momentum_integral_kernel(am_axis axis, double nu, const am_atom* atom,
                                      const am_mirror* mirror, const am_quadrature* q,
                                      double* out) {
  if (any_null(atom, mirror, out))
    return null_error("atom/mirror/out");
  return guarded([&] {
    *out = momentum_integral_kernel(to_axis(axis), nu, to_atom(atom), to_mirror(mirror),
                                    to_quadrature(q));
  });
}

am_status am_angular_total(am_axis axis, double k, const am_atom* atom, const am_mirror* mirror,
                           const am_quadrature* q, double* out) {
  if (any_null(atom, mirror, out))
    return null_error("atom/mirror/out");
  return guarded([&] {
    *out = angular_total(to_axis(axis), k, to_atom(atom), to_mirror(mirror), to_quadrature(q));
  });
}

am_status am_static_decay_quadrature(const am_atom* atom, const am_mirror* mirror,
                                     const am_quadrature* q, double* out) {
  if (any_null(atom, mirror, out))
    return null_error("atom/mirror/out");
  return guarded(
      [&] { *out = static_decay_quadrature(to_atom(atom), to_mirror(mirror), to_quadrature(q)); });
}

am_status am_verify_all(const double* xs, size_t n_xs, const am_channel* channels,
                        size_t n_channels, double tolerance, const am_quadrature* q,
                        unsigned workers, am_report** out) {
  if (!out)
    return null_error("out");
  if ((n_xs > 0 && !xs) || (n_channels > 0 && !channels))
    return null_error("xs/channels");
  return guarded([&] {
    std::vector<Channel> ch;
    for (size_t i = 0; i < n_channels; ++i)
      ch.push_back({to_bc(channels[i].bc), to_axis(channels[i].axis)});
    VerifyOptions opt;
    opt.tolerance = tolerance;
    opt.quadrature = to_quadrature(q);
    opt.workers = workers;
    auto reports = verify_all(std::span<const double>(xs, n_xs), ch, opt);
    *out = new am_report{std::move(reports)};
  });
}

size_t am_report_size(const am_report* report) { return report ? report->entries.size() : 0; }

am_status am_report_entry_at(const am_report* report, size_t index, am_report_entry* out) {
  if (any_null(report, out))
    return null_error("report/out");
  if (index >= report->entries.size()) {
    set_error("report index out of range");
    return AM_ERR_RANGE;
  }
  const auto& r = report->entries[index];
  out->channel = {from_bc(r.channel.bc), from_axis(r.channel.axis)};
  out->x = r.x;
  out->closed_form = r.closed_form;
  out->quadrature = r.quadrature;
  out->angular_quadrature = r.angular_quadrature;
  out->momentum_rel_error = r.momentum_rel_error;
  out->angular_rel_error = r.angular_rel_error;
  out->rel_error = r.rel_error;
  out->passed = r.passed ? 1 : 0;
  out->measured_ratio_to_imgamma = r.measured_ratio_to_imgamma;
  return AM_OK;
}

int am_report_all_passed(const am_report* report) {
  return report && all_passed(report->entries) ? 1 : 0;
}

void am_report_free(am_report* report) { delete report; }

am_status am_spectrum_from_monochromatic(const am_monochromatic* mm, am_spectrum** out) {
  if (any_null(mm, out))
    return null_error("mm/out");
  return guarded([&] { *out = new am_spectrum{spectrum_of_monochromatic(to_mono(mm)), 0.0}; });
}

am_status am_spectrum_from_samples(am_axis axis, const double* samples, size_t n, double dt,
                                   am_spectrum** out) {
  if (any_null(samples, out))
    return null_error("samples/out");
  return guarded([&] {
    SampledTrajectory st(to_axis(axis), std::vector<double>(samples, samples + n), dt);
    *out = new am_spectrum{spectrum_of_sampled(st), st.removed_mean()};
  });
}

am_status am_spectrum_load(const char* path, am_axis csv_axis, am_spectrum** out, int* is_mono,
                           am_monochromatic* mono) {
  if (any_null(path, out))
    return null_error("path/out");
  return guarded([&] {
    auto input = load_trajectory(path, to_axis(csv_axis));
    if (auto* mm = std::get_if<MonochromaticMotion>(&input)) {
      *out = new am_spectrum{spectrum_of_monochromatic(*mm), 0.0};
      if (is_mono)
        *is_mono = 1;
      if (mono)
        *mono = {from_axis(mm->axis), mm->epsilon, mm->omega_cm, mm->window_T};
    } else {
      const auto& st = std::get<SampledTrajectory>(input);
      *out = new am_spectrum{spectrum_of_sampled(st), st.removed_mean()};
      if (is_mono)
        *is_mono = 0;
    }
  });
}

size_t am_spectrum_size(const am_spectrum* s) { return s ? s->spectrum.lines().size() : 0; }
double am_spectrum_window(const am_spectrum* s) { return s ? s->spectrum.window() : 0.0; }
int am_spectrum_is_grid(const am_spectrum* s) {
  return s && s->spectrum.kind() == TrajectorySpectrum::Kind::Grid ? 1 : 0;
}
double am_spectrum_removed_mean(const am_spectrum* s) { return s ? s->removed_mean : 0.0; }

am_status am_spectrum_line(const am_spectrum* s, size_t index, double* nu, double amp_re[3],
                           double amp_im[3]) {
  if (any_null(s, nu, amp_re, amp_im))
    return null_error("spectrum/nu/amp_re/amp_im");
  if (index >= s->spectrum.lines().size()) {
    set_error("spectrum index out of range");
    return AM_ERR_RANGE;
  }
  const auto& l = s->spectrum.lines()[index];
  *nu = l.nu;
  for (int i = 0; i < 3; ++i) {
    amp_re[i] = l.amplitude[i].real();
    amp_im[i] = l.amplitude[i].imag();
  }
  return AM_OK;
}

am_status am_spectrum_scaled(const am_spectrum* s, double factor, am_spectrum** out) {
  if (any_null(s, out))
    return null_error("spectrum/out");
  return guarded([&] { *out = new am_spectrum{s->spectrum.scaled(factor), s->removed_mean}; });
}

void am_spectrum_free(am_spectrum* s) { delete s; }

am_status am_vacuum_decay_probability(const am_spectrum* s, const am_atom* atom,
                                      const am_mirror* mirror, double im_gamma_factor,
                                      double* probability, double* rate, double* line_rates) {
  if (any_null(s, atom, mirror, probability, rate))
    return null_error("spectrum/atom/mirror/probability/rate");
  return guarded([&] {
    if (im_gamma_factor != 1.0 && im_gamma_factor != 2.0)
      throw DomainError("im_gamma_factor must be 1 or 2");
    const auto d =
        vacuum_decay_probability(s->spectrum, to_atom(atom), to_mirror(mirror), im_gamma_factor);
    *probability = d.probability;
    *rate = d.rate;
    if (line_rates)
      for (size_t i = 0; i < d.lines.size(); ++i)
        line_rates[i] = d.lines[i].rate;
  });
}

am_status am_excitation_rate_monochromatic(const am_monochromatic* mm, const am_atom* atom,
                                           const am_mirror* mirror, double* out) {
  if (any_null(mm, atom, mirror, out))
    return null_error("mm/atom/mirror/out");
  return guarded([&] {
    *out = excitation_rate_monochromatic(to_mono(mm), to_atom(atom), to_mirror(mirror));
  });
}

int am_perturbative_warning(const am_monochromatic* mm, const am_atom* atom, char* buf,
                            size_t buf_len) {
  if (any_null(mm, atom))
    return 0;
  try {
    const auto w = to_mono(mm).perturbative_warning(to_atom(atom));
    if (!w)
      return 0;
    if (buf && buf_len > 0) {
      const size_t n = std::min(buf_len - 1, w->size());
      std::memcpy(buf, w->data(), n);
      buf[n] = '\0';
    }
    return 1;
  } catch (...) {
    return 0;
  }
}

am_status am_static_rate(const am_atom* atom, const am_mirror* mirror, double* out) {
  if (any_null(atom, mirror, out))
    return null_error("atom/mirror/out");
  return guarded([&] { *out = static_rate(to_atom(atom), to_mirror(mirror)); });
}

am_status am_emission_spectrum(const am_monochromatic* mm, const am_atom* atom,
                               const am_mirror* mirror, am_emission** out) {
  if (any_null(mm, atom, mirror, out))
    return null_error("mm/atom/mirror/out");
  return guarded([&] {
    *out = new am_emission{emission_spectrum(to_mono(mm), to_atom(atom), to_mirror(mirror))};
  });
}

am_status am_emission_from_spectrum(const am_spectrum* s, const am_atom* atom,
                                    const am_mirror* mirror, am_emission** out) {
  if (any_null(s, atom, mirror, out))
    return null_error("spectrum/atom/mirror/out");
  return guarded([&] {
    *out = new am_emission{emission_spectrum(s->spectrum, to_atom(atom), to_mirror(mirror))};
  });
}

size_t am_emission_line_count(const am_emission* e) { return e ? e->spectrum.lines.size() : 0; }

am_status am_emission_line(const am_emission* e, size_t index, double* omega, double* rate,
                           am_origin* origin) {
  if (any_null(e, omega, rate, origin))
    return null_error("emission/omega/rate/origin");
  if (index >= e->spectrum.lines.size()) {
    set_error("emission line index out of range");
    return AM_ERR_RANGE;
  }
  const auto& l = e->spectrum.lines[index];
  *omega = l.omega;
  *rate = l.rate;
  *origin = from_origin(l.origin);
  return AM_OK;
}

size_t am_emission_continuum_count(const am_emission* e) {
  return e ? e->spectrum.continuum.size() : 0;
}

am_status am_emission_continuum(const am_emission* e, size_t index, double* omega,
                                double* rate_density) {
  if (any_null(e, omega, rate_density))
    return null_error("emission/omega/rate_density");
  if (index >= e->spectrum.continuum.size()) {
    set_error("continuum index out of range");
    return AM_ERR_RANGE;
  }
  *omega = e->spectrum.continuum[index].omega;
  *rate_density = e->spectrum.continuum[index].rate_density;
  return AM_OK;
}

double am_emission_total_rate(const am_emission* e) { return e ? e->spectrum.total_rate() : 0.0; }

void am_emission_free(am_emission* e) { delete e; }

const char* am_origin_name(am_origin origin) {
  switch (origin) {
  case AM_LINE_STATIC:
    return "static";
  case AM_LINE_SIDEBAND_PLUS:
    return "sideband_plus";
  case AM_LINE_SIDEBAND_MINUS:
    return "sideband_minus";
  }
  return "unknown";
}

am_status am_angular_decay_density(double k, double theta, double phi, const am_monochromatic* mm,
                                   const am_atom* atom, const am_mirror* mirror, double* out) {
  if (any_null(mm, atom, mirror, out))
    return null_error("mm/atom/mirror/out");
  return guarded([&] {
    *out = angular_decay_density(k, SphericalDirection{theta, phi}, to_mono(mm), to_atom(atom),
                                 to_mirror(mirror));
  });
}

} // extern "C"
