// atommirror command-line front end. Talks to the library only through the C
// API in atommirror/atommirror.h.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "atommirror/atommirror.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(am_status status) {
  if (status != AM_OK)
    throw ApiError(std::string(am_status_string(status)) + ": " + am_last_error());
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

am_bc parse_bc(const std::string& s) {
  if (s == "D" || s == "d" || s == "dirichlet" || s == "Dirichlet")
    return AM_DIRICHLET;
  if (s == "N" || s == "n" || s == "neumann" || s == "Neumann")
    return AM_NEUMANN;
  throw UsageError("unknown boundary condition '" + s + "' (use D or N)");
}

am_axis parse_axis(const std::string& s) {
  if (s == "par" || s == "parallel")
    return AM_PARALLEL;
  if (s == "perp" || s == "perpendicular")
    return AM_PERPENDICULAR;
  throw UsageError("unknown axis '" + s + "' (use par or perp)");
}

const char* bc_name(am_bc bc) { return bc == AM_DIRICHLET ? "D" : "N"; }
const char* axis_name(am_axis a) { return a == AM_PARALLEL ? "par" : "perp"; }

struct Common {
  double g = 1.0;
  double m = 1.0;
  double omega = 1.0;
  double a = 1.0;
  std::string out;
  std::string format = "csv";
  std::string bc = "D";

  void add_atom(CLI::App* app) {
    app->add_option("--g", g, "coupling g")->capture_default_str();
    app->add_option("--m", m, "oscillator mass m")->capture_default_str();
    app->add_option("--omega", omega, "internal frequency Omega")->capture_default_str();
  }
  void add_mirror(CLI::App* app) {
    app->add_option("--bc", bc, "boundary condition: D or N")->capture_default_str();
    app->add_option("--a", a, "atom-mirror distance a")->capture_default_str();
  }
  void add_output(CLI::App* app) {
    app->add_option("--out", out, "output file (default: stdout)");
    app->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  }
  am_atom atom() const { return {g, m, omega}; }
  am_mirror mirror() const { return {parse_bc(bc), a}; }
};

// Writes `text` to the requested destination.
void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f)
    throw UsageError("cannot write output file " + c.out);
  f << text;
  if (!f)
    throw UsageError("failed writing output file " + c.out);
}

// `# key=value` provenance lines followed by the column header.
std::string csv_preamble(const std::string& command,
                         const std::vector<std::pair<std::string, std::string>>& params,
                         const std::string& columns) {
  std::ostringstream os;
  os << "# atommirror " << command << " (natural units hbar=c=1; phi=0 along parallel motion)\n";
  for (const auto& [k, v] : params)
    os << "# " << k << "=" << v << "\n";
  os << columns << "\n";
  return os.str();
}

ordered_json params_json(const std::vector<std::pair<std::string, std::string>>& params) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : params)
    j[k] = v;
  return j;
}

std::vector<std::pair<std::string, std::string>> atom_params(const Common& c) {
  return {{"g", fmt(c.g)}, {"m", fmt(c.m)}, {"omega", fmt(c.omega)}};
}

// ---- ratio -----------------------------------------------------------------

struct RatioArgs {
  Common common;
  std::string axis = "par";
  double x_min = 0.01;
  double x_max = 20.0;
  int points = 200;
  bool linear = false;
  bool log = false;
};

int run_ratio(const RatioArgs& r) {
  const am_bc bc = parse_bc(r.common.bc);
  const am_axis axis = parse_axis(r.axis);
  if (r.points < 1)
    throw UsageError("--points must be >= 1");
  if (r.linear && r.log)
    throw UsageError("--log and --linear are mutually exclusive");
  if (!(r.x_max >= r.x_min))
    throw UsageError("--x-max must be >= --x-min");
  if (!r.linear && !(r.x_min > 0.0))
    throw UsageError("--x-min must be > 0 for log spacing");
  if (r.linear && !(r.x_min >= 0.0))
    throw UsageError("--x-min must be >= 0");

  std::vector<double> xs(static_cast<std::size_t>(r.points));
  for (int i = 0; i < r.points; ++i) {
    const double t = r.points == 1 ? 0.0 : static_cast<double>(i) / (r.points - 1);
    xs[i] = r.linear ? r.x_min + (r.x_max - r.x_min) * t
                     : std::pow(10.0, std::log10(r.x_min) +
                                          (std::log10(r.x_max) - std::log10(r.x_min)) * t);
  }
  if (r.points > 1) {
    xs.front() = r.x_min;
    xs.back() = r.x_max;
  }

  const std::vector<std::pair<std::string, std::string>> params = {
      {"bc", bc_name(bc)},
      {"axis", axis_name(axis)},
      {"x_min", fmt(r.x_min)},
      {"x_max", fmt(r.x_max)},
      {"points", std::to_string(r.points)},
      {"spacing", r.linear ? "linear" : "log"}};

  std::vector<double> ratios;
  for (double x : xs) {
    double v = 0.0;
    check(am_ratio_to_free(bc, axis, x, &v));
    ratios.push_back(v);
  }

  if (r.common.format == "json") {
    ordered_json j;
    j["command"] = "ratio";
    j["parameters"] = params_json(params);
    j["rows"] = ordered_json::array();
    for (std::size_t i = 0; i < xs.size(); ++i)
      j["rows"].push_back({{"x", xs[i]}, {"ratio", ratios[i]}});
    emit(r.common, j.dump(2) + "\n");
    return kExitOk;
  }
  std::string text = csv_preamble("ratio", params, "x,ratio");
  for (std::size_t i = 0; i < xs.size(); ++i)
    text += fmt(xs[i]) + "," + fmt(ratios[i]) + "\n";
  emit(r.common, text);
  return kExitOk;
}

// ---- angular ---------------------------------------------------------------

struct AngularArgs {
  Common common;
  std::string axis = "par";
  double ka = 0.001;
  int theta_points = 91;
  int phi_points = 73;
  std::string quantity = "pattern";
  double k = 1.0;
  bool phi_resolved = false;
};

int run_angular(const AngularArgs& r) {
  const am_bc bc = parse_bc(r.common.bc);
  const am_axis axis = parse_axis(r.axis);
  if (r.theta_points < 1 || r.phi_points < 1)
    throw UsageError("--theta-points and --phi-points must be >= 1");
  const bool density = r.quantity == "density";
  if (!density && !(r.ka >= 0.0))
    throw UsageError("--ka must be >= 0");
  const int phi_points = axis == AM_PERPENDICULAR ? 1 : r.phi_points;
  const am_atom atom = r.common.atom();
  const am_mirror mirror = r.common.mirror();
  const double ka = density ? r.k * r.common.a : r.ka;

  std::vector<std::pair<std::string, std::string>> params = {
      {"bc", bc_name(bc)},         {"axis", axis_name(axis)},
      {"quantity", r.quantity},    {"ka", fmt(ka)},
      {"theta_points", std::to_string(r.theta_points)},
      {"phi_points", std::to_string(phi_points)}};
  if (density) {
    params.emplace_back("k", fmt(r.k));
    params.emplace_back("a", fmt(r.common.a));
    params.emplace_back("phi_resolved", r.phi_resolved ? "true" : "false");
    for (auto& p : atom_params(r.common))
      params.push_back(p);
  }

  const double pi = std::numbers::pi;
  struct Row {
    double theta, phi, value;
  };
  std::vector<Row> rows;
  for (int i = 0; i < r.theta_points; ++i) {
    const double theta = r.theta_points == 1 ? 0.0 : pi * i / (r.theta_points - 1);
    for (int j = 0; j < phi_points; ++j) {
      const double phi = 2.0 * pi * j / phi_points;
      double v = 0.0;
      if (density)
        check(am_reduced_density(axis, r.k, theta, phi, &atom, &mirror, r.phi_resolved ? 1 : 0,
                                 &v));
      else
        check(am_pattern(bc, axis, ka, theta, phi, &v));
      rows.push_back({theta, phi, v});
    }
  }

  const char* column = density ? "density" : "p";
  if (r.common.format == "json") {
    ordered_json j;
    j["command"] = "angular";
    j["parameters"] = params_json(params);
    j["rows"] = ordered_json::array();
    for (const auto& row : rows)
      j["rows"].push_back({{"theta", row.theta}, {"phi", row.phi}, {column, row.value}});
    emit(r.common, j.dump(2) + "\n");
    return kExitOk;
  }
  std::string text = csv_preamble("angular", params, std::string("theta,phi,") + column);
  for (const auto& row : rows)
    text += fmt(row.theta) + "," + fmt(row.phi) + "," + fmt(row.value) + "\n";
  emit(r.common, text);
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  double tol = 1e-8;
  std::string x_grid = "0.01:20:40";
  std::string channels = "all";
  std::string report;
  double quad_rel_tol = 1e-10;
  double quad_abs_tol = 1e-14;
  std::size_t max_subdivisions = std::size_t{1} << 15;
  bool numeric_phi = false;
  unsigned threads = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty())
      out.push_back(cur);
  return out;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("'" + s + "' is not a number");
  }
  if (used != s.size())
    throw UsageError("'" + s + "' is not a number");
  return v;
}

// "lo:hi:n" log-spaced, or a comma-separated list.
std::vector<double> parse_grid(const std::string& spec) {
  if (spec.find(':') != std::string::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3)
      throw UsageError("--x-grid must be lo:hi:n or a comma-separated list");
    const double lo = to_double(parts[0]);
    const double hi = to_double(parts[1]);
    const double nd = to_double(parts[2]);
    if (!(lo > 0.0) || !(hi >= lo) || nd < 1 || nd != std::floor(nd))
      throw UsageError("--x-grid lo:hi:n needs 0 < lo <= hi and integer n >= 1");
    const auto n = static_cast<std::size_t>(nd);
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
      xs[i] = std::pow(10.0, std::log10(lo) + (std::log10(hi) - std::log10(lo)) * t);
    }
    xs.front() = lo;
    if (n > 1)
      xs.back() = hi;
    return xs;
  }
  std::vector<double> xs;
  for (const auto& p : split(spec, ','))
    xs.push_back(to_double(p));
  if (xs.empty())
    throw UsageError("--x-grid is empty");
  return xs;
}

std::vector<am_channel> parse_channels(const std::string& spec) {
  if (spec == "all")
    return {{AM_DIRICHLET, AM_PARALLEL},
            {AM_DIRICHLET, AM_PERPENDICULAR},
            {AM_NEUMANN, AM_PARALLEL},
            {AM_NEUMANN, AM_PERPENDICULAR}};
  std::vector<am_channel> out;
  for (const auto& item : split(spec, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos)
      throw UsageError("channel '" + item + "' must look like D-par");
    out.push_back({parse_bc(item.substr(0, dash)), parse_axis(item.substr(dash + 1))});
  }
  if (out.empty())
    throw UsageError("--channels is empty");
  return out;
}

unsigned thread_count(unsigned requested) {
  if (requested > 0)
    return requested;
  if (const char* env = std::getenv("ATOMMIRROR_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0)
      return static_cast<unsigned>(n);
  }
  return 1;
}

int run_verify(const VerifyArgs& r) {
  if (!(r.tol > 0.0))
    throw UsageError("--tol must be > 0");
  const auto xs = parse_grid(r.x_grid);
  const auto channels = parse_channels(r.channels);
  const am_quadrature q{r.quad_rel_tol, r.quad_abs_tol, r.max_subdivisions, r.numeric_phi ? 1 : 0};

  am_report* report = nullptr;
  const am_status status = am_verify_all(xs.data(), xs.size(), channels.data(), channels.size(),
                                         r.tol, &q, thread_count(r.threads), &report);
  if (status != AM_OK) {
    std::cerr << "verify: " << am_status_string(status) << ": " << am_last_error() << "\n";
    return kExitUsage;
  }

  ordered_json arr = ordered_json::array();
  std::size_t failures = 0;
  double worst = 0.0;
  double ratio_min = INFINITY;
  double ratio_max = -INFINITY;
  for (std::size_t i = 0; i < am_report_size(report); ++i) {
    am_report_entry e;
    check(am_report_entry_at(report, i, &e));
    if (!e.passed)
      ++failures;
    worst = std::max(worst, e.rel_error);
    if (e.closed_form != 0.0) {
      ratio_min = std::min(ratio_min, e.measured_ratio_to_imgamma);
      ratio_max = std::max(ratio_max, e.measured_ratio_to_imgamma);
    }
    arr.push_back({{"bc", bc_name(e.channel.bc)},
                   {"axis", axis_name(e.channel.axis)},
                   {"x", e.x},
                   {"closed_form", e.closed_form},
                   {"quadrature", e.quadrature},
                   {"rel_error", e.rel_error},
                   {"passed", e.passed != 0},
                   {"angular_quadrature", e.angular_quadrature},
                   {"momentum_rel_error", e.momentum_rel_error},
                   {"angular_rel_error", e.angular_rel_error},
                   {"measured_ratio_to_imgamma", e.measured_ratio_to_imgamma}});
  }
  const std::size_t total = am_report_size(report);
  am_report_free(report);

  if (!r.report.empty()) {
    std::ofstream f(r.report);
    if (!f)
      throw UsageError("cannot write report file " + r.report);
    f << arr.dump(2) << "\n";
  }

  std::cout << "verify: " << (total - failures) << "/" << total << " passed at tol "
            << fmt(r.tol) << ", worst rel_error " << fmt(worst) << "\n";
  std::cout << "verify: measured_ratio_to_imgamma in [" << fmt(ratio_min) << ", "
            << fmt(ratio_max) << "]\n";
  std::cout << "verify: note: the printed angular densities integrate to 1 x the printed Im Gamma "
               "kernel (ratio 1); the prose convention 'P = 2 Im Gamma' corresponds to "
               "--im-gamma-factor 2 in `decay`\n";
  return failures == 0 ? kExitOk : kExitMismatch;
}

// ---- decay -----------------------------------------------------------------

struct DecayArgs {
  Common common;
  std::string traj;
  bool mono = false;
  std::string axis = "par";
  double epsilon = 0.01;
  double omega_cm = 2.0;
  double window_T = 1.0;
  double im_gamma_factor = 1.0;
  int convergence = 0;
  int samples_per_period = 32;
  int periods = 50;
};

void warn_if_large(const am_monochromatic& mm, const am_atom& atom) {
  char buf[256];
  if (am_perturbative_warning(&mm, &atom, buf, sizeof buf))
    std::cerr << "warning: " << buf << "\n";
}

int run_decay_convergence(const DecayArgs& r, const am_monochromatic& mm) {
  const am_atom atom = r.common.atom();
  const am_mirror mirror = r.common.mirror();
  if (r.samples_per_period < 4 || r.periods < 1)
    throw UsageError("--samples-per-period must be >= 4 and --periods >= 1");
  double line_rate = 0.0;
  check(am_excitation_rate_monochromatic(&mm, &atom, &mirror, &line_rate));
  const double pi = std::numbers::pi;
  const double period = 2.0 * pi / mm.omega_cm;
  const double dt = period / r.samples_per_period;

  struct Row {
    long periods;
    double window, sampled, rel;
  };
  std::vector<Row> rows;
  for (int i = 0; i < r.convergence; ++i) {
    const long periods = static_cast<long>(r.periods) << i;
    // Closed interval [0, periods * period], as a t,y file would list it.
    const std::size_t count = static_cast<std::size_t>(periods * r.samples_per_period) + 1;
    std::vector<double> y(count);
    for (std::size_t n = 0; n < count; ++n)
      y[n] = mm.epsilon * std::cos(mm.omega_cm * dt * static_cast<double>(n));
    am_spectrum* s = nullptr;
    check(am_spectrum_from_samples(mm.axis, y.data(), y.size(), dt, &s));
    double prob = 0.0;
    double rate = 0.0;
    const am_status st =
        am_vacuum_decay_probability(s, &atom, &mirror, r.im_gamma_factor, &prob, &rate, nullptr);
    const double window = am_spectrum_window(s);
    am_spectrum_free(s);
    check(st);
    const double reference = line_rate * r.im_gamma_factor;
    const double rel = reference != 0.0 ? std::abs(rate - reference) / reference
                                        : std::abs(rate - reference);
    rows.push_back({periods, window, rate, rel});
  }

  const std::vector<std::pair<std::string, std::string>> params = {
      {"bc", bc_name(mirror.bc)},
      {"a", fmt(mirror.a)},
      {"axis", axis_name(mm.axis)},
      {"epsilon", fmt(mm.epsilon)},
      {"omega_cm", fmt(mm.omega_cm)},
      {"samples_per_period", std::to_string(r.samples_per_period)},
      {"im_gamma_factor", fmt(r.im_gamma_factor)},
      {"rate_line", fmt(line_rate * r.im_gamma_factor)}};
  auto all = params;
  for (auto& p : atom_params(r.common))
    all.push_back(p);
  if (r.common.format == "json") {
    ordered_json j;
    j["command"] = "decay";
    j["parameters"] = params_json(all);
    j["convergence"] = ordered_json::array();
    for (const auto& row : rows)
      j["convergence"].push_back({{"periods", row.periods},
                                  {"T", row.window},
                                  {"rate_sampled", row.sampled},
                                  {"rate_line", line_rate * r.im_gamma_factor},
                                  {"rel_error", row.rel}});
    emit(r.common, j.dump(2) + "\n");
    return kExitOk;
  }
  std::string text = csv_preamble("decay --convergence", all, "periods,T,rate_sampled,rate_line,rel_error");
  for (const auto& row : rows)
    text += std::to_string(row.periods) + "," + fmt(row.window) + "," + fmt(row.sampled) + "," +
            fmt(line_rate * r.im_gamma_factor) + "," + fmt(row.rel) + "\n";
  emit(r.common, text);
  return kExitOk;
}

int run_decay(const DecayArgs& r) {
  if (r.im_gamma_factor != 1.0 && r.im_gamma_factor != 2.0)
    throw UsageError("--im-gamma-factor must be 1 or 2");
  if (r.traj.empty() == !r.mono)
    throw UsageError("give exactly one of --traj FILE or --mono");
  const am_atom atom = r.common.atom();
  const am_mirror mirror = r.common.mirror();

  am_monochromatic mm{parse_axis(r.axis), r.epsilon, r.omega_cm, r.window_T};
  am_spectrum* s = nullptr;
  int is_mono = 0;
  if (r.mono) {
    if (r.convergence > 0)
      return run_decay_convergence(r, mm);
    check(am_spectrum_from_monochromatic(&mm, &s));
    is_mono = 1;
  } else {
    if (r.convergence > 0)
      throw UsageError("--convergence requires --mono");
    check(am_spectrum_load(r.traj.c_str(), mm.axis, &s, &is_mono, &mm));
  }
  if (is_mono)
    warn_if_large(mm, atom);
  if (!is_mono && am_spectrum_removed_mean(s) != 0.0)
    std::cerr << "note: removed mean displacement " << fmt(am_spectrum_removed_mean(s))
              << "; --a is taken as the mean distance\n";

  const std::size_t n = am_spectrum_size(s);
  std::vector<double> line_rates(n);
  double prob = 0.0;
  double rate = 0.0;
  am_status st = am_vacuum_decay_probability(s, &atom, &mirror, r.im_gamma_factor, &prob, &rate,
                                             line_rates.data());
  if (st != AM_OK) {
    am_spectrum_free(s);
    check(st);
  }
  struct Row {
    double nu, weight, rate;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < n; ++i) {
    double nu = 0.0;
    double re[3];
    double im[3];
    check(am_spectrum_line(s, i, &nu, re, im));
    double w = 0.0;
    for (int c = 0; c < 3; ++c)
      w += re[c] * re[c] + im[c] * im[c];
    rows.push_back({nu, w, line_rates[i]});
  }
  const double window = am_spectrum_window(s);
  am_spectrum_free(s);

  std::vector<std::pair<std::string, std::string>> params = {
      {"bc", bc_name(mirror.bc)},
      {"a", fmt(mirror.a)},
      {"source", r.mono ? "mono" : r.traj},
      {"im_gamma_factor", fmt(r.im_gamma_factor)}};
  if (is_mono) {
    params.emplace_back("axis", axis_name(mm.axis));
    params.emplace_back("epsilon", fmt(mm.epsilon));
    params.emplace_back("omega_cm", fmt(mm.omega_cm));
  } else {
    params.emplace_back("axis", axis_name(mm.axis));
  }
  for (auto& p : atom_params(r.common))
    params.push_back(p);
  params.emplace_back("T", fmt(window));
  params.emplace_back("probability", fmt(prob));
  params.emplace_back("rate", fmt(rate));

  if (r.common.format == "json") {
    ordered_json j;
    j["command"] = "decay";
    j["parameters"] = params_json(params);
    j["probability"] = prob;
    j["rate"] = rate;
    j["T"] = window;
    j["lines"] = ordered_json::array();
    for (const auto& row : rows)
      j["lines"].push_back({{"nu", row.nu}, {"weight", row.weight}, {"rate", row.rate}});
    emit(r.common, j.dump(2) + "\n");
    return kExitOk;
  }
  std::string text = csv_preamble("decay", params, "nu,weight,rate");
  for (const auto& row : rows)
    text += fmt(row.nu) + "," + fmt(row.weight) + "," + fmt(row.rate) + "\n";
  emit(r.common, text);
  return kExitOk;
}

// ---- spectrum --------------------------------------------------------------

struct SpectrumArgs {
  Common common;
  std::string axis = "par";
  double epsilon = 0.01;
  double omega_cm = 0.5;
  double window_T = 1.0;
  std::string traj;
};

int run_spectrum(const SpectrumArgs& r) {
  const am_atom atom = r.common.atom();
  const am_mirror mirror = r.common.mirror();
  const am_axis axis = parse_axis(r.axis);
  am_emission* e = nullptr;
  std::vector<std::pair<std::string, std::string>> params = {
      {"bc", bc_name(mirror.bc)}, {"a", fmt(mirror.a)}, {"axis", axis_name(axis)}};
  if (r.traj.empty()) {
    const am_monochromatic mm{axis, r.epsilon, r.omega_cm, r.window_T};
    warn_if_large(mm, atom);
    check(am_emission_spectrum(&mm, &atom, &mirror, &e));
    params.emplace_back("epsilon", fmt(r.epsilon));
    params.emplace_back("omega_cm", fmt(r.omega_cm));
  } else {
    am_spectrum* s = nullptr;
    check(am_spectrum_load(r.traj.c_str(), axis, &s, nullptr, nullptr));
    const am_status st = am_emission_from_spectrum(s, &atom, &mirror, &e);
    am_spectrum_free(s);
    check(st);
    params.emplace_back("source", r.traj);
  }
  for (auto& p : atom_params(r.common))
    params.push_back(p);

  struct Line {
    double omega, rate;
    std::string origin;
  };
  std::vector<Line> lines;
  for (std::size_t i = 0; i < am_emission_line_count(e); ++i) {
    double w = 0.0;
    double rate = 0.0;
    am_origin o = AM_LINE_STATIC;
    check(am_emission_line(e, i, &w, &rate, &o));
    lines.push_back({w, rate, am_origin_name(o)});
  }
  std::vector<std::pair<double, double>> continuum;
  for (std::size_t i = 0; i < am_emission_continuum_count(e); ++i) {
    double w = 0.0;
    double d = 0.0;
    check(am_emission_continuum(e, i, &w, &d));
    continuum.emplace_back(w, d);
  }
  const double total = am_emission_total_rate(e);
  am_emission_free(e);
  params.emplace_back("total_line_rate", fmt(total));

  if (r.common.format == "json") {
    ordered_json j;
    j["command"] = "spectrum";
    j["parameters"] = params_json(params);
    j["lines"] = ordered_json::array();
    for (const auto& l : lines)
      j["lines"].push_back({{"omega", l.omega}, {"rate", l.rate}, {"origin", l.origin}});
    j["continuum"] = ordered_json::array();
    for (const auto& [w, d] : continuum)
      j["continuum"].push_back({{"omega", w}, {"rate_density", d}});
    j["total_rate"] = total;
    emit(r.common, j.dump(2) + "\n");
    return kExitOk;
  }
  std::string text = csv_preamble("spectrum", params, "omega,rate,origin");
  for (const auto& l : lines)
    text += fmt(l.omega) + "," + fmt(l.rate) + "," + l.origin + "\n";
  // Continuum samples carry a rate density, flagged by their origin column.
  for (const auto& [w, d] : continuum)
    text += fmt(w) + "," + fmt(d) + ",continuum_density\n";
  emit(r.common, text);
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motion-induced excitation and emission of an atom near a perfect mirror"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(am_version()));

  RatioArgs ratio;
  auto* c_ratio = app.add_subcommand("ratio", "m(nu)/m0(nu) versus x = a(|nu| - Omega)");
  c_ratio->add_option("--bc", ratio.common.bc, "D or N")->capture_default_str();
  c_ratio->add_option("--axis", ratio.axis, "par or perp")->capture_default_str();
  c_ratio->add_option("--x-min", ratio.x_min)->capture_default_str();
  c_ratio->add_option("--x-max", ratio.x_max)->capture_default_str();
  c_ratio->add_option("--points", ratio.points)->capture_default_str();
  c_ratio->add_flag("--log", ratio.log, "log spacing (default)");
  c_ratio->add_flag("--linear", ratio.linear, "linear spacing");
  ratio.common.add_output(c_ratio);

  AngularArgs angular;
  auto* c_ang = app.add_subcommand("angular", "angular emission pattern on a (theta, phi) grid");
  angular.common.add_mirror(c_ang);
  angular.common.add_atom(c_ang);
  c_ang->add_option("--axis", angular.axis, "par or perp")->capture_default_str();
  c_ang->add_option("--ka", angular.ka, "dimensionless k a")->capture_default_str();
  c_ang->add_option("--theta-points", angular.theta_points)->capture_default_str();
  c_ang->add_option("--phi-points", angular.phi_points)->capture_default_str();
  c_ang->add_option("--quantity", angular.quantity, "pattern or density")
      ->check(CLI::IsMember({"pattern", "density"}))
      ->capture_default_str();
  c_ang->add_option("--k", angular.k, "wavenumber for --quantity density")->capture_default_str();
  c_ang->add_flag("--phi-resolved", angular.phi_resolved,
                  "divide perpendicular densities by 2 pi (per unit phi)");
  angular.common.add_output(c_ang);

  VerifyArgs verify;
  auto* c_ver = app.add_subcommand("verify", "closed forms against quadrature oracles");
  c_ver->add_option("--tol", verify.tol, "pass threshold on relative error")->capture_default_str();
  c_ver->add_option("--x-grid", verify.x_grid, "lo:hi:n (log) or comma list")->capture_default_str();
  c_ver->add_option("--channels", verify.channels, "all or e.g. D-par,N-perp")->capture_default_str();
  c_ver->add_option("--report", verify.report, "JSON report file");
  c_ver->add_option("--quad-rel-tol", verify.quad_rel_tol)->capture_default_str();
  c_ver->add_option("--quad-abs-tol", verify.quad_abs_tol)->capture_default_str();
  c_ver->add_option("--max-subdivisions", verify.max_subdivisions)->capture_default_str();
  c_ver->add_flag("--numeric-phi", verify.numeric_phi, "integrate the azimuth numerically");
  c_ver->add_option("--threads", verify.threads, "worker threads (default: $ATOMMIRROR_THREADS or 1)");

  DecayArgs decay;
  auto* c_dec = app.add_subcommand("decay", "vacuum-decay (excitation) probability of a trajectory");
  decay.common.add_mirror(c_dec);
  decay.common.add_atom(c_dec);
  c_dec->add_option("--traj", decay.traj, "trajectory file: CSV t,y or JSON monochromatic");
  c_dec->add_flag("--mono", decay.mono, "monochromatic motion from flags");
  c_dec->add_option("--axis", decay.axis, "par or perp")->capture_default_str();
  c_dec->add_option("--epsilon", decay.epsilon)->capture_default_str();
  c_dec->add_option("--omega-cm", decay.omega_cm)->capture_default_str();
  c_dec->add_option("--T", decay.window_T, "observation window")->capture_default_str();
  c_dec->add_option("--im-gamma-factor", decay.im_gamma_factor, "1 or 2")->capture_default_str();
  c_dec->add_option("--convergence", decay.convergence,
                    "sampled-vs-line table over this many doublings of T (with --mono)");
  c_dec->add_option("--periods", decay.periods, "periods in the first convergence window")
      ->capture_default_str();
  c_dec->add_option("--samples-per-period", decay.samples_per_period)->capture_default_str();
  decay.common.add_output(c_dec);

  SpectrumArgs spectrum;
  auto* c_spec = app.add_subcommand("spectrum", "spontaneous-emission lines of an excited atom");
  spectrum.common.add_mirror(c_spec);
  spectrum.common.add_atom(c_spec);
  c_spec->add_option("--axis", spectrum.axis, "par or perp")->capture_default_str();
  c_spec->add_option("--epsilon", spectrum.epsilon)->capture_default_str();
  c_spec->add_option("--omega-cm", spectrum.omega_cm)->capture_default_str();
  c_spec->add_option("--T", spectrum.window_T, "observation window")->capture_default_str();
  c_spec->add_option("--traj", spectrum.traj, "sampled trajectory CSV (continuum output)");
  spectrum.common.add_output(c_spec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_ratio->parsed())
      return run_ratio(ratio);
    if (c_ang->parsed())
      return run_angular(angular);
    if (c_ver->parsed())
      return run_verify(verify);
    if (c_dec->parsed())
      return run_decay(decay);
    if (c_spec->parsed())
      return run_spectrum(spectrum);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
