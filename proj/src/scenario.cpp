#include "radar_uq/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <string>

#include <json.hpp>

namespace radar_uq {

namespace {

using nlohmann::json;

constexpr double kDegToRad = std::numbers::pi / 180.0;

[[noreturn]] void fail(const std::string& field, const std::string& reason) {
  throw ScenarioError("scenario field '" + field + "': " + reason);
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         const std::set<std::string>& allowed) {
  for (const auto& item : obj.items())
    if (!allowed.count(item.key())) fail(where + "." + item.key(), "unknown field");
}

double get_number(const json& obj, const std::string& where, const std::string& key,
                  double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) fail(where + "." + key, "must be a number");
  return v.get<double>();
}

Vec3 get_vec3(const json& obj, const std::string& where, const std::string& key, Vec3 fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
      !v[2].is_number())
    fail(where + "." + key, "must be an array of 3 numbers");
  return Vec3(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
}

Eigen::MatrixXd get_matrix(const json& v, const std::string& where, int rows, int cols) {
  if (!v.is_array() || static_cast<int>(v.size()) != rows)
    fail(where, "must be a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  Eigen::MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = v[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(where, "must be a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    for (int c = 0; c < cols; ++c) {
      if (!row[c].is_number()) fail(where, "matrix entries must be numbers");
      m(r, c) = row[c].get<double>();
    }
  }
  return m;
}

void require_psd(const Eigen::MatrixXd& m, const std::string& where) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) fail(where, "must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
  if (eig.eigenvalues().minCoeff() < -1e-9 * scale)
    fail(where, "must be positive semidefinite");
}

void parse_radar(const json& obj, Scenario& sc) {
  reject_unknown_keys(obj, "radar",
                      {"position_m", "radar_constant", "surveillance_params", "false_alarm_prob"});
  sc.radar.position = get_vec3(obj, "radar", "position_m", Vec3::Zero());

  const bool has_constant = obj.contains("radar_constant");
  const bool has_params = obj.contains("surveillance_params");
  if (has_constant && has_params)
    fail("radar", "specify either 'radar_constant' or 'surveillance_params', not both");
  if (has_constant) {
    sc.radar.radar_constant = get_number(obj, "radar", "radar_constant", 0.0);
    if (!(sc.radar.radar_constant > 0.0)) fail("radar.radar_constant", "must be positive");
  } else if (has_params) {
    const json& p = obj.at("surveillance_params");
    if (!p.is_object()) fail("radar.surveillance_params", "must be an object");
    reject_unknown_keys(p, "radar.surveillance_params",
                        {"avg_power_w", "aperture_m2", "temperature_k", "loss", "noise_factor",
                         "scan_time_s", "search_volume_sr"});
    RadarParams params;
    auto need = [&](const char* key) {
      if (!p.contains(key)) fail(std::string("radar.surveillance_params.") + key, "is required");
      return get_number(p, "radar.surveillance_params", key, 0.0);
    };
    params.avg_power_w = need("avg_power_w");
    params.aperture_m2 = need("aperture_m2");
    params.temperature_k = need("temperature_k");
    params.loss = need("loss");
    params.noise_factor = need("noise_factor");
    params.scan_time_s = need("scan_time_s");
    params.search_volume_sr = need("search_volume_sr");
    try {
      sc.radar.radar_constant = radar_constant_surveillance(params);
    } catch (const std::domain_error& e) {
      fail("radar.surveillance_params", e.what());
    }
  }

  sc.false_alarm_prob = get_number(obj, "radar", "false_alarm_prob", sc.false_alarm_prob);
  if (!(sc.false_alarm_prob > 0.0 && sc.false_alarm_prob < 1.0))
    fail("radar.false_alarm_prob", "must lie in (0, 1)");
}

void parse_rcs(const json& obj, Scenario& sc) {
  if (!obj.is_object()) fail("rcs", "must be an object");
  if (!obj.contains("type")) fail("rcs.type", "is required");
  const std::string type = obj.at("type").is_string() ? obj.at("type").get<std::string>() : "";
  if (type == "ellipsoid") {
    reject_unknown_keys(obj, "rcs", {"type", "a", "b", "c"});
    const double a = get_number(obj, "rcs", "a", 0.15);
    const double b = get_number(obj, "rcs", "b", 0.13);
    const double c = get_number(obj, "rcs", "c", 0.21);
    if (!(a > 0.0 && b > 0.0 && c > 0.0)) fail("rcs", "ellipsoid axes must be positive");
    sc.rcs = std::make_shared<EllipsoidRcs>(a, b, c);
  } else if (type == "constant") {
    reject_unknown_keys(obj, "rcs", {"type", "sigma0"});
    if (!obj.contains("sigma0")) fail("rcs.sigma0", "is required for constant type");
    const double sigma0 = get_number(obj, "rcs", "sigma0", 0.0);
    if (!(sigma0 > 0.0)) fail("rcs.sigma0", "must be positive");
    sc.rcs = std::make_shared<ConstantRcs>(sigma0);
  } else {
    fail("rcs.type", "must be 'ellipsoid' or 'constant'");
  }
}

void parse_sweep(const json& obj, Scenario& sc) {
  reject_unknown_keys(obj, "sweep",
                      {"theta_start_deg", "theta_end_deg", "theta_step_deg", "radius_m", "down_m",
                       "yaw_deg"});
  SweepSpec& s = sc.sweep;
  s.theta_start_deg = get_number(obj, "sweep", "theta_start_deg", s.theta_start_deg);
  s.theta_end_deg = get_number(obj, "sweep", "theta_end_deg", s.theta_end_deg);
  s.theta_step_deg = get_number(obj, "sweep", "theta_step_deg", s.theta_step_deg);
  s.radius_m = get_number(obj, "sweep", "radius_m", s.radius_m);
  s.nominal_down_m = get_number(obj, "sweep", "down_m", s.nominal_down_m);
  s.nominal_yaw_rad = get_number(obj, "sweep", "yaw_deg", s.nominal_yaw_rad / kDegToRad) * kDegToRad;

  if (!(s.theta_step_deg > 0.0)) fail("sweep.theta_step_deg", "must be positive");
  if (!(s.theta_start_deg <= s.theta_end_deg))
    fail("sweep.theta_start_deg", "must not exceed theta_end_deg");
  if (!(s.radius_m > 0.0)) fail("sweep.radius_m", "must be positive");
}

void parse_uncertainty(const json& v, Scenario& sc) {
  if (v.is_string()) {
    const std::string level = v.get<std::string>();
    if (level == "low")
      sc.uncertainty = preset_uncertainty(UncertaintyLevel::Low);
    else if (level == "medium")
      sc.uncertainty = preset_uncertainty(UncertaintyLevel::Medium);
    else if (level == "high")
      sc.uncertainty = preset_uncertainty(UncertaintyLevel::High);
    else
      fail("uncertainty", "preset must be 'low', 'medium', or 'high'");
    return;
  }
  if (!v.is_object()) fail("uncertainty", "must be a preset name or an object");

  const bool has_matrices = v.contains("aircraft_cov") || v.contains("radar_cov");
  const bool has_sigmas = v.contains("aircraft_position_std_m") ||
                          v.contains("aircraft_angle_std_deg") ||
                          v.contains("radar_position_std_m") || v.contains("radar_constant_std");
  if (has_matrices && has_sigmas)
    fail("uncertainty", "specify standard deviations or explicit matrices, not both");

  if (has_matrices) {
    reject_unknown_keys(v, "uncertainty", {"aircraft_cov", "radar_cov"});
    if (!v.contains("aircraft_cov")) fail("uncertainty.aircraft_cov", "is required");
    if (!v.contains("radar_cov")) fail("uncertainty.radar_cov", "is required");
    // Explicit matrices are in base units: m^2, rad^2, and squared
    // radar-constant units on the diagonal.
    const Eigen::MatrixXd caa = get_matrix(v.at("aircraft_cov"), "uncertainty.aircraft_cov", 6, 6);
    const Eigen::MatrixXd crr = get_matrix(v.at("radar_cov"), "uncertainty.radar_cov", 4, 4);
    require_psd(caa, "uncertainty.aircraft_cov");
    require_psd(crr, "uncertainty.radar_cov");
    sc.uncertainty.aircraft_cov = caa;
    sc.uncertainty.radar_cov = crr;
    return;
  }

  reject_unknown_keys(v, "uncertainty",
                      {"aircraft_position_std_m", "aircraft_angle_std_deg", "radar_position_std_m",
                       "radar_constant_std"});
  const double pos = get_number(v, "uncertainty", "aircraft_position_std_m", 10.0);
  const double ang_deg = get_number(v, "uncertainty", "aircraft_angle_std_deg", 1.0);
  const double rpos = get_number(v, "uncertainty", "radar_position_std_m", 100.0);
  const double rconst = get_number(v, "uncertainty", "radar_constant_std", 5.0);
  if (pos < 0.0) fail("uncertainty.aircraft_position_std_m", "must be nonnegative");
  if (ang_deg < 0.0) fail("uncertainty.aircraft_angle_std_deg", "must be nonnegative");
  if (rpos < 0.0) fail("uncertainty.radar_position_std_m", "must be nonnegative");
  if (rconst < 0.0) fail("uncertainty.radar_constant_std", "must be nonnegative");
  sc.uncertainty = UncertaintyModel::from_sigmas(pos, ang_deg * kDegToRad, rpos, rconst);
}

void parse_monte_carlo(const json& obj, Scenario& sc) {
  reject_unknown_keys(obj, "monte_carlo", {"runs", "seed"});
  if (obj.contains("runs")) {
    if (!obj.at("runs").is_number_integer()) fail("monte_carlo.runs", "must be an integer");
    const auto runs = obj.at("runs").get<long long>();
    if (runs < 1) fail("monte_carlo.runs", "must be at least 1");
    sc.mc.runs = static_cast<int>(runs);
  }
  if (obj.contains("seed")) {
    if (!obj.at("seed").is_number_integer()) fail("monte_carlo.seed", "must be an integer");
    sc.mc.seed = obj.at("seed").get<std::uint64_t>();
  }
}

void parse_output(const json& obj, Scenario& sc) {
  reject_unknown_keys(obj, "output", {"csv", "summary"});
  if (obj.contains("csv")) {
    if (!obj.at("csv").is_string()) fail("output.csv", "must be a string");
    sc.output.csv = obj.at("csv").get<std::string>();
  }
  if (obj.contains("summary")) {
    if (!obj.at("summary").is_string()) fail("output.summary", "must be a string");
    sc.output.summary = obj.at("summary").get<std::string>();
  }
}

Scenario parse_document(const json& doc) {
  if (!doc.is_object()) throw ScenarioError("scenario document must be a JSON object");
  reject_unknown_keys(doc, "scenario",
                      {"radar", "rcs", "sweep", "uncertainty", "monte_carlo", "output"});

  Scenario sc;
  if (doc.contains("radar")) {
    if (!doc.at("radar").is_object()) fail("radar", "must be an object");
    parse_radar(doc.at("radar"), sc);
  }
  if (doc.contains("rcs")) parse_rcs(doc.at("rcs"), sc);
  if (doc.contains("sweep")) {
    if (!doc.at("sweep").is_object()) fail("sweep", "must be an object");
    parse_sweep(doc.at("sweep"), sc);
  }
  if (doc.contains("uncertainty")) parse_uncertainty(doc.at("uncertainty"), sc);
  if (doc.contains("monte_carlo")) {
    if (!doc.at("monte_carlo").is_object()) fail("monte_carlo", "must be an object");
    parse_monte_carlo(doc.at("monte_carlo"), sc);
  }
  if (doc.contains("output")) {
    if (!doc.at("output").is_object()) fail("output", "must be an object");
    parse_output(doc.at("output"), sc);
  }
  return sc;
}

}  // namespace

UncertaintyModel preset_uncertainty(UncertaintyLevel level) {
  const double ang = 1.0 * kDegToRad;
  switch (level) {
    case UncertaintyLevel::Low:
      return UncertaintyModel::from_sigmas(10.0, ang, 10.0, 1.0);
    case UncertaintyLevel::Medium:
      return UncertaintyModel::from_sigmas(10.0, ang, 100.0, 5.0);
    case UncertaintyLevel::High:
      return UncertaintyModel::from_sigmas(10.0, ang, 1000.0, 10.0);
  }
  throw std::logic_error("preset_uncertainty: unreachable");
}

Scenario load_scenario(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ScenarioError("cannot open scenario file: " + path);
  json doc;
  try {
    doc = json::parse(file);
  } catch (const json::parse_error& e) {
    throw ScenarioError("invalid JSON in " + path + ": " + e.what());
  }
  return parse_document(doc);
}

Scenario parse_scenario(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("invalid JSON: ") + e.what());
  }
  return parse_document(doc);
}

}  // namespace radar_uq
