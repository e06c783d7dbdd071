#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>

namespace atommirror {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  std::size_t max_subdivisions = std::size_t{1} << 15;
  // Integrate the azimuth numerically for parallel channels instead of using
  // the exact cos^2 integral.
  bool numeric_phi = false;

  void validate() const;
};

class QuadratureFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t panels = 0;
};

/// Adaptive 21-point Gauss-Kronrod integration of f over [lo, hi], seeded with
/// `panels` equal subintervals. The subdivision budget of the spec is shared
/// between the panels. Throws QuadratureFailure if any panel does not meet
/// the requested tolerance.
QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           std::size_t panels, const QuadratureSpec& spec);

/// Panel count for an integrand oscillating like cos(2 ka cos theta) on
/// [0, pi]: max(8, 8 ceil(ka)).
std::size_t oscillatory_panels(double ka);

} // namespace atommirror
