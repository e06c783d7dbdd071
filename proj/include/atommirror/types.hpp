#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace atommirror {

// Natural units (hbar = c = 1) throughout. Frequencies, wavenumbers and inverse
// lengths share one unit; g, m, Omega and a are plain numbers.

enum class BoundaryCondition { Dirichlet, Neumann };

// Parallel: motion in the mirror plane, along x^1. Perpendicular: along x^3.
enum class MotionAxis { Parallel, Perpendicular };

/// Raised when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when a data structure fails a structural check (e.g. Hermitian
/// symmetry of a trajectory spectrum).
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Harmonically bound internal degree of freedom of the atom.
struct AtomParams {
  double coupling = 1.0; // g
  double mass = 1.0;     // m
  double omega = 1.0;    // internal transition frequency

  void validate() const;
};

/// Perfect planar mirror at x^3 = 0; the atom's mean position is (0, 0, a).
struct MirrorConfig {
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
  double distance = 1.0; // a

  void validate() const;
};

std::string_view to_string(BoundaryCondition bc);
std::string_view to_string(MotionAxis axis);

// Accepts "D", "dirichlet", "N", "neumann" (case-insensitive).
BoundaryCondition parse_boundary_condition(std::string_view text);
// Accepts "par", "parallel", "perp", "perpendicular" (case-insensitive).
MotionAxis parse_motion_axis(std::string_view text);

} // namespace atommirror
