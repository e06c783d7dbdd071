/*
 * atommirror C API.
 *
 * Every function returns an am_status. On failure a message describing the
 * last error on the calling thread is available from am_last_error(). Objects
 * behind opaque handles are created by am_*_create / am_*_load functions and
 * must be released with the matching am_*_free function. Outputs are written
 * only on success.
 *
 * Natural units (hbar = c = 1).
 */
#ifndef ATOMMIRROR_H
#define ATOMMIRROR_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(ATOMMIRROR_BUILDING)
#    define AM_API __declspec(dllexport)
#  else
#    define AM_API __declspec(dllimport)
#  endif
#else
#  define AM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum am_status {
  AM_OK = 0,
  AM_ERR_DOMAIN = 1,      /* argument outside the domain of the operation */
  AM_ERR_NULL = 2,        /* required pointer argument was NULL */
  AM_ERR_QUADRATURE = 3,  /* numerical integration did not converge */
  AM_ERR_VALIDATION = 4,  /* structural check failed (e.g. Hermitian symmetry) */
  AM_ERR_IO = 5,          /* file could not be read or parsed */
  AM_ERR_RANGE = 6,       /* index out of range */
  AM_ERR_INTERNAL = 99
} am_status;

typedef enum am_bc { AM_DIRICHLET = 0, AM_NEUMANN = 1 } am_bc;
typedef enum am_axis { AM_PARALLEL = 0, AM_PERPENDICULAR = 1 } am_axis;
typedef enum am_origin {
  AM_LINE_STATIC = 0,
  AM_LINE_SIDEBAND_PLUS = 1,
  AM_LINE_SIDEBAND_MINUS = 2
} am_origin;

typedef struct am_atom {
  double g;     /* coupling */
  double m;     /* mass */
  double omega; /* internal frequency */
} am_atom;

typedef struct am_mirror {
  am_bc bc;
  double a; /* atom-mirror distance */
} am_mirror;

typedef struct am_quadrature {
  double rel_tol;
  double abs_tol;
  size_t max_subdivisions;
  int numeric_phi; /* nonzero: integrate the azimuth numerically */
} am_quadrature;

typedef struct am_monochromatic {
  am_axis axis;
  double epsilon;
  double omega_cm;
  double window_T;
} am_monochromatic;

typedef struct am_channel {
  am_bc bc;
  am_axis axis;
} am_channel;

typedef struct am_report_entry {
  am_channel channel;
  double x;
  double closed_form;
  double quadrature;
  double angular_quadrature;
  double momentum_rel_error;
  double angular_rel_error;
  double rel_error;
  int passed;
  double measured_ratio_to_imgamma;
} am_report_entry;

typedef struct am_spectrum am_spectrum; /* trajectory spectrum */
typedef struct am_report am_report;     /* verification reports */
typedef struct am_emission am_emission; /* spontaneous emission spectrum */

AM_API const char* am_last_error(void);
AM_API const char* am_status_string(am_status status);
AM_API const char* am_version(void);

/* Defaults: g = m = omega = 1; Dirichlet, a = 1; rel 1e-10, abs 1e-14, 2^15. */
AM_API am_atom am_atom_default(void);
AM_API am_mirror am_mirror_default(void);
AM_API am_quadrature am_quadrature_default(void);

/* ---- dissipation kernels ---------------------------------------------- */
AM_API am_status am_shape_function(am_bc bc, am_axis axis, double x, double* out);
AM_API am_status am_ratio_to_free(am_bc bc, am_axis axis, double x, double* out);
AM_API am_status am_m0(double nu, const am_atom* atom, double* out);
AM_API am_status am_kernel(am_axis axis, double nu, const am_atom* atom, const am_mirror* mirror,
                           double* out);
AM_API am_status am_sideband_kernel(am_axis axis, double omega, const am_atom* atom,
                                    const am_mirror* mirror, double* out);
/* out[3] = diag(m_par, m_par, m_perp) */
AM_API am_status am_dissipation_matrix(double nu, const am_atom* atom, const am_mirror* mirror,
                                       double out[3]);
AM_API am_status am_oscillator_propagator(double nu, const am_atom* atom, double eps, double* re,
                                          double* im);

/* ---- angular emission --------------------------------------------------- */
AM_API am_status am_pattern(am_bc bc, am_axis axis, double ka, double theta, double phi,
                            double* out);
AM_API am_status am_reduced_density(am_axis axis, double k, double theta, double phi,
                                    const am_atom* atom, const am_mirror* mirror,
                                    int phi_resolved, double* out);
AM_API am_status am_excitation_spectrum_density(am_axis axis, double k, double amp_re,
                                                double amp_im, const am_atom* atom,
                                                const am_mirror* mirror, double* out);

/* ---- quadrature oracles ------------------------------------------------- */
AM_API am_status am_momentum_integral_kernel(am_axis axis, double nu, const am_atom* atom,
                                             const am_mirror* mirror, const am_quadrature* q,
                                             double* out);
AM_API am_status am_angular_total(am_axis axis, double k, const am_atom* atom,
                                  const am_mirror* mirror, const am_quadrature* q, double* out);
AM_API am_status am_static_decay_quadrature(const am_atom* atom, const am_mirror* mirror,
                                            const am_quadrature* q, double* out);

/* Reports for every (channel, x), ordered by channel then x. `workers` <= 1
 * runs on the calling thread. */
AM_API am_status am_verify_all(const double* xs, size_t n_xs, const am_channel* channels,
                               size_t n_channels, double tolerance, const am_quadrature* q,
                               unsigned workers, am_report** out);
AM_API size_t am_report_size(const am_report* report);
AM_API am_status am_report_entry_at(const am_report* report, size_t index, am_report_entry* out);
AM_API int am_report_all_passed(const am_report* report);
AM_API void am_report_free(am_report* report);

/* ---- trajectories ------------------------------------------------------- */
AM_API am_status am_spectrum_from_monochromatic(const am_monochromatic* mm, am_spectrum** out);
AM_API am_status am_spectrum_from_samples(am_axis axis, const double* samples, size_t n,
                                          double dt, am_spectrum** out);
/* .json: monochromatic {axis, epsilon, omega_cm, T}; otherwise CSV `t,y`
 * along csv_axis. *is_mono (optional) reports which, and *mono (optional) is
 * filled for JSON input. */
AM_API am_status am_spectrum_load(const char* path, am_axis csv_axis, am_spectrum** out,
                                  int* is_mono, am_monochromatic* mono);
AM_API size_t am_spectrum_size(const am_spectrum* s);
AM_API double am_spectrum_window(const am_spectrum* s);
AM_API int am_spectrum_is_grid(const am_spectrum* s);
/* Mean removed from sampled input (0 for line spectra). */
AM_API double am_spectrum_removed_mean(const am_spectrum* s);
/* amp_re/amp_im hold 3 components each (x^1, x^2, x^3). */
AM_API am_status am_spectrum_line(const am_spectrum* s, size_t index, double* nu,
                                  double amp_re[3], double amp_im[3]);
AM_API am_status am_spectrum_scaled(const am_spectrum* s, double factor, am_spectrum** out);
AM_API void am_spectrum_free(am_spectrum* s);

/* P and P/T; per-line rate contributions when line_rates is non-NULL (length
 * am_spectrum_size). im_gamma_factor is 1 or 2. */
AM_API am_status am_vacuum_decay_probability(const am_spectrum* s, const am_atom* atom,
                                             const am_mirror* mirror, double im_gamma_factor,
                                             double* probability, double* rate,
                                             double* line_rates);
AM_API am_status am_excitation_rate_monochromatic(const am_monochromatic* mm, const am_atom* atom,
                                                  const am_mirror* mirror, double* out);
/* Writes a message into buf (may be NULL) and returns 1 if the amplitude is
 * not small enough for the second-order expansion, 0 otherwise. */
AM_API int am_perturbative_warning(const am_monochromatic* mm, const am_atom* atom, char* buf,
                                   size_t buf_len);

/* ---- spontaneous emission ----------------------------------------------- */
AM_API am_status am_static_rate(const am_atom* atom, const am_mirror* mirror, double* out);
AM_API am_status am_emission_spectrum(const am_monochromatic* mm, const am_atom* atom,
                                      const am_mirror* mirror, am_emission** out);
AM_API am_status am_emission_from_spectrum(const am_spectrum* s, const am_atom* atom,
                                           const am_mirror* mirror, am_emission** out);
AM_API size_t am_emission_line_count(const am_emission* e);
AM_API am_status am_emission_line(const am_emission* e, size_t index, double* omega, double* rate,
                                  am_origin* origin);
AM_API size_t am_emission_continuum_count(const am_emission* e);
AM_API am_status am_emission_continuum(const am_emission* e, size_t index, double* omega,
                                       double* rate_density);
AM_API double am_emission_total_rate(const am_emission* e);
AM_API void am_emission_free(am_emission* e);
AM_API const char* am_origin_name(am_origin origin);

AM_API am_status am_angular_decay_density(double k, double theta, double phi,
                                          const am_monochromatic* mm, const am_atom* atom,
                                          const am_mirror* mirror, double* out);

#ifdef __cplusplus
}
#endif

#endif /* ATOMMIRROR_H */
