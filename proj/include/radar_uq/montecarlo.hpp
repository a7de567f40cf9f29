#pragma once

#include <cstdint>
#include <numbers>
#include <vector>

#include "radar_uq/linearization.hpp"
#include "radar_uq/random.hpp"

namespace radar_uq {

struct Scenario;

/// Serial is the reference implementation; Parallel distributes independent
/// work items (Monte Carlo runs, sweep angles) across OpenMP threads and
/// produces bit-identical results.
enum class ExecutionPolicy { Serial, Parallel };

/// Geometry sweep: the aircraft circles the radar at a fixed radius and
/// altitude with zero roll/pitch and fixed yaw. theta is measured in the
/// horizontal plane; aircraft north = radius * sin(theta), east =
/// radius * cos(theta) relative to the radar.
struct SweepSpec {
  double theta_start_deg = 0.0;
  double theta_end_deg = 180.0;
  double theta_step_deg = 0.5;
  double radius_m = 500e3;
  double nominal_down_m = -3000.0;
  double nominal_yaw_rad = std::numbers::pi / 2.0;

  /// Number of grid points, both endpoints included.
  int count() const;
  double theta_deg(int k) const { return theta_start_deg + k * theta_step_deg; }
};

struct McConfig {
  int runs = 500;
  std::uint64_t seed = 1;
};

struct NominalPair {
  AircraftState aircraft;
  RadarState radar;
};

/// Nominal sweep states. The radar holds its position and constant at every
/// grid point; the aircraft down component is absolute.
std::vector<NominalPair> nominal_states(const SweepSpec& spec, const RadarState& radar);

/// Convenience overload with the radar at the NED origin.
std::vector<NominalPair> nominal_states(const SweepSpec& spec, double radar_constant);

/// One perturbed draw of both states: aircraft noise is drawn first (6
/// standard normals through the aircraft covariance factor), then radar
/// noise (4 normals).
NominalPair sample_perturbed(const NominalPair& nominal, const UncertaintyModel& uncertainty,
                             RngStream& rng);

/// Per-angle nominal evaluation plus linearization; shared by the sweep
/// commands and the Monte Carlo harness.
struct SweepPoint {
  double theta_deg = 0.0;
  DetectionPoint detection;
  PdSensitivity sensitivity;
};
std::vector<SweepPoint> evaluate_nominal_sweep(const Scenario& scenario,
                                               ExecutionPolicy policy = ExecutionPolicy::Parallel);

struct McEnsemble {
  std::vector<double> theta_deg;    // [angles]
  std::vector<double> pd_nominal;   // [angles]
  std::vector<double> sigma_pd;     // [angles], linearized at the nominal
  std::vector<double> pd_samples;   // [runs * angles], run-major
  std::vector<double> sample_mean;  // [angles], over runs
  std::vector<double> sample_std;   // [angles], over runs
  double coverage = 0.0;            // fraction of samples inside +-3 sigma
  int runs = 0;
  int angles = 0;

  double pd_sample(int run, int k) const { return pd_samples[static_cast<std::size_t>(run) * angles + k]; }
  double pd_error(int run, int k) const { return pd_nominal[k] - pd_sample(run, k); }
};

/// Monte Carlo ensemble over the scenario sweep. Radar noise is drawn once
/// per run and held through the sweep; aircraft noise is drawn fresh at
/// every grid point. Each run uses its own RNG stream derived from
/// (seed, run index), so serial and parallel execution produce identical
/// ensembles.
McEnsemble run_monte_carlo(const Scenario& scenario,
                           ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// 3-sigma pd curves from the linearized model only, one per uncertainty
/// level, evaluated at the nominal states.
std::vector<std::vector<double>> sensitivity_sweep(const Scenario& scenario,
                                                   const std::vector<UncertaintyModel>& levels,
                                                   ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace radar_uq
