#include "atommirror/trajectory_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace atommirror {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& field, std::size_t line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || trim(field.substr(used)).size() != 0)
    throw FormatError("line " + std::to_string(line_no) + ": '" + field + "' is not a number");
  return v;
}

} // namespace

SampledTrajectory read_trajectory_csv(std::istream& in, MotionAxis axis) {
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::vector<double> t;
  std::vector<double> y;
  while (std::getline(in, line)) {
    ++line_no;
    const auto s = trim(line);
    if (s.empty() || s.front() == '#')
      continue;
    const auto comma = s.find(',');
    if (comma == std::string::npos)
      throw FormatError("line " + std::to_string(line_no) + ": expected two columns");
    const auto a = trim(s.substr(0, comma));
    const auto b = trim(s.substr(comma + 1));
    if (!header_seen) {
      if (a != "t" || b != "y")
        throw FormatError("trajectory CSV must start with the header 't,y'");
      header_seen = true;
      continue;
    }
    t.push_back(parse_number(a, line_no));
    y.push_back(parse_number(b, line_no));
  }
  if (!header_seen)
    throw FormatError("trajectory CSV is empty");
  if (t.size() < 2)
    throw FormatError("trajectory CSV needs at least 2 samples");

  const double dt = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  if (!(dt > 0.0))
    throw FormatError("trajectory times must increase");
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double step = t[i] - t[i - 1];
    if (std::abs(step - dt) > 1e-6 * dt)
      throw FormatError("non-uniform time step at line with t = " + std::to_string(t[i]) +
                        "; only uniform sampling is supported");
  }
  return SampledTrajectory(axis, std::move(y), dt);
}

MonochromaticMotion read_monochromatic_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object())
    throw FormatError("monochromatic trajectory JSON must be an object");
  MonochromaticMotion mm;
  try {
    mm.axis = parse_motion_axis(j.at("axis").get<std::string>());
    mm.epsilon = j.at("epsilon").get<double>();
    mm.omega_cm = j.at("omega_cm").get<double>();
    mm.window_T = j.at("T").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("monochromatic trajectory JSON: ") + e.what());
  }
  mm.validate();
  return mm;
}

TrajectoryInput load_trajectory(const std::filesystem::path& path, MotionAxis csv_axis) {
  std::ifstream in(path);
  if (!in)
    throw FormatError("cannot open trajectory file " + path.string());
  if (path.extension() == ".json")
    return read_monochromatic_json(in);
  return read_trajectory_csv(in, csv_axis);
}

} // namespace atommirror
