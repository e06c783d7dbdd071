#pragma once

#include <filesystem>
#include <istream>
#include <variant>

#include "atommirror/trajectory.hpp"

namespace atommirror {

class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using TrajectoryInput = std::variant<MonochromaticMotion, SampledTrajectory>;

/// CSV with header `t,y` on a uniform time grid ('#' lines are skipped).
/// Throws FormatError on malformed input or a non-uniform grid.
SampledTrajectory read_trajectory_csv(std::istream& in, MotionAxis axis);

/// JSON object {"axis": "par"|"perp", "epsilon": e, "omega_cm": w, "T": t}.
MonochromaticMotion read_monochromatic_json(std::istream& in);

/// Dispatches on the extension: .json is monochromatic, anything else CSV.
TrajectoryInput load_trajectory(const std::filesystem::path& path, MotionAxis csv_axis);

} // namespace atommirror
