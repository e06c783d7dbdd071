#include "atommirror/types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace atommirror {

namespace {

std::string lowered(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

} // namespace

void AtomParams::validate() const {
  if (!std::isfinite(coupling))
    throw DomainError("coupling g must be finite");
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw DomainError("mass m must be positive");
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw DomainError("internal frequency Omega must be positive");
}

void MirrorConfig::validate() const {
  if (!(distance > 0.0) || !std::isfinite(distance))
    throw DomainError("mirror distance a must be positive");
}

std::string_view to_string(BoundaryCondition bc) {
  return bc == BoundaryCondition::Dirichlet ? "D" : "N";
}

std::string_view to_string(MotionAxis axis) {
  return axis == MotionAxis::Parallel ? "par" : "perp";
}

BoundaryCondition parse_boundary_condition(std::string_view text) {
  const auto s = lowered(text);
  if (s == "d" || s == "dirichlet")
    return BoundaryCondition::Dirichlet;
  if (s == "n" || s == "neumann")
    return BoundaryCondition::Neumann;
  throw DomainError("unknown boundary condition '" + std::string(text) + "'");
}

MotionAxis parse_motion_axis(std::string_view text) {
  const auto s = lowered(text);
  if (s == "par" || s == "parallel")
    return MotionAxis::Parallel;
  if (s == "perp" || s == "perpendicular")
    return MotionAxis::Perpendicular;
  throw DomainError("unknown motion axis '" + std::string(text) + "'");
}

} // namespace atommirror
