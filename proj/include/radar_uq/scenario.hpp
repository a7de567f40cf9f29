#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "radar_uq/montecarlo.hpp"
#include "radar_uq/rcs.hpp"

namespace radar_uq {

/// Raised for malformed or contradictory scenario files; the message names
/// the offending field.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class UncertaintyLevel { Low, Medium, High };

/// Diagonal covariance presets. The aircraft block is the same at every
/// level (10 m position, 1 deg angles); the radar block scales with the
/// level (10/100/1000 m position, 1/5/10 constant).
UncertaintyModel preset_uncertainty(UncertaintyLevel level);

struct OutputPaths {
  std::string csv;
  std::string summary;
};

/// A full experiment description. The default-constructed scenario is the
/// reference surveillance-radar case used throughout the test suite:
/// radar at the NED origin with constant 167, false-alarm probability
/// 1.7e-4, 0.15/0.13/0.21 m ellipsoid target, 0..180 deg sweep in 0.5 deg
/// steps at 500 km radius and 3 km altitude, Medium uncertainty, 500 runs.
struct Scenario {
  RadarState radar{Vec3::Zero(), 167.0};
  double false_alarm_prob = 1.7e-4;
  std::shared_ptr<const RcsModel> rcs = std::make_shared<EllipsoidRcs>(0.15, 0.13, 0.21);
  SweepSpec sweep{};
  UncertaintyModel uncertainty = preset_uncertainty(UncertaintyLevel::Medium);
  McConfig mc{};
  OutputPaths output{};
};

/// Loads and validates a scenario JSON file. Missing fields take the
/// reference-scenario defaults; unknown or contradictory fields raise
/// ScenarioError.
Scenario load_scenario(const std::string& path);

/// Same parsing and validation applied to an in-memory JSON document.
Scenario parse_scenario(const std::string& json_text);

}  // namespace radar_uq
