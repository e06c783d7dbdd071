#include "atommirror/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <string>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include "atommirror/types.hpp"

namespace atommirror {

namespace {

void disable_gsl_abort() {
  static std::once_flag flag;
  std::call_once(flag, [] { gsl_set_error_handler_off(); });
}

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};

double trampoline(double x, void* params) {
  return (*static_cast<const std::function<double(double)>*>(params))(x);
}

} // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw DomainError("quadrature tolerances must be > 0");
  if (max_subdivisions < 1)
    throw DomainError("max_subdivisions must be >= 1");
}

std::size_t oscillatory_panels(double ka) {
  const double periods = std::ceil(std::max(ka, 0.0));
  return std::max<std::size_t>(8, 8 * static_cast<std::size_t>(periods));
}

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           std::size_t panels, const QuadratureSpec& spec) {
  spec.validate();
  disable_gsl_abort();
  panels = std::max<std::size_t>(panels, 1);
  const std::size_t limit = std::max<std::size_t>(1, spec.max_subdivisions / panels);
  std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> ws(
      gsl_integration_workspace_alloc(limit));
  if (!ws)
    throw QuadratureFailure("could not allocate quadrature workspace");

  gsl_function fn;
  fn.function = &trampoline;
  fn.params = const_cast<std::function<double(double)>*>(&f);

  QuadratureResult total;
  total.panels = panels;
  const double width = (hi - lo) / static_cast<double>(panels);
  const double panel_abs = spec.abs_tol / static_cast<double>(panels);
  for (std::size_t i = 0; i < panels; ++i) {
    const double a = lo + width * static_cast<double>(i);
    const double b = (i + 1 == panels) ? hi : lo + width * static_cast<double>(i + 1);
    double value = 0.0;
    double err = 0.0;
    const int status = gsl_integration_qag(&fn, a, b, panel_abs, spec.rel_tol, limit,
                                           GSL_INTEG_GAUSS21, ws.get(), &value, &err);
    if (status != GSL_SUCCESS) {
      throw QuadratureFailure("quadrature on [" + std::to_string(a) + ", " + std::to_string(b) +
                              "] failed: " + gsl_strerror(status));
    }
    total.value += value;
    total.abs_error += err;
  }
  return total;
}

} // namespace atommirror
