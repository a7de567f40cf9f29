#include "radar_uq/montecarlo.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>

#include "radar_uq/scenario.hpp"

namespace radar_uq {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

AircraftState apply_aircraft_noise(const AircraftState& nominal, const Eigen::VectorXd& w) {
  AircraftState out = nominal;
  out.position += Vec3(w(0), w(1), w(2));
  out.attitude.roll += w(3);
  out.attitude.pitch += w(4);
  out.attitude.yaw += w(5);
  return out;
}

RadarState apply_radar_noise(const RadarState& nominal, const Eigen::VectorXd& w) {
  RadarState out = nominal;
  out.position += Vec3(w(0), w(1), w(2));
  out.radar_constant += w(3);
  return out;
}

// Runs a loop body over [0, n) serially or under OpenMP. Exceptions thrown
// by parallel iterations are captured and rethrown after the join; OpenMP
// must not see them escape a thread.
template <typename Body>
void for_each_index(int n, ExecutionPolicy policy, const Body& body) {
  if (policy == ExecutionPolicy::Serial) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(radar_uq_mc_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

int SweepSpec::count() const {
  if (!(theta_step_deg > 0.0)) throw std::domain_error("sweep: theta step must be positive");
  if (!(theta_start_deg <= theta_end_deg))
    throw std::domain_error("sweep: theta start must not exceed theta end");
  return static_cast<int>(std::floor((theta_end_deg - theta_start_deg) / theta_step_deg + 1e-9)) +
         1;
}

std::vector<NominalPair> nominal_states(const SweepSpec& spec, const RadarState& radar) {
  const int n = spec.count();
  std::vector<NominalPair> states(n);
  for (int k = 0; k < n; ++k) {
    const double theta = spec.theta_deg(k) * kDegToRad;
    AircraftState aircraft;
    aircraft.position = Vec3(radar.position.x() + spec.radius_m * std::sin(theta),
                             radar.position.y() + spec.radius_m * std::cos(theta),
                             spec.nominal_down_m);
    aircraft.attitude = EulerAngles{0.0, 0.0, spec.nominal_yaw_rad};
    states[k] = {aircraft, radar};
  }
  return states;
}

std::vector<NominalPair> nominal_states(const SweepSpec& spec, double radar_constant) {
  return nominal_states(spec, RadarState{Vec3::Zero(), radar_constant});
}

NominalPair sample_perturbed(const NominalPair& nominal, const UncertaintyModel& uncertainty,
                             RngStream& rng) {
  const GaussianVectorSampler aircraft_noise(uncertainty.aircraft_cov);
  const GaussianVectorSampler radar_noise(uncertainty.radar_cov);
  NominalPair out;
  out.aircraft = apply_aircraft_noise(nominal.aircraft, aircraft_noise.sample(rng));
  out.radar = apply_radar_noise(nominal.radar, radar_noise.sample(rng));
  return out;
}

std::vector<SweepPoint> evaluate_nominal_sweep(const Scenario& scenario, ExecutionPolicy policy) {
  const std::vector<NominalPair> nominals = nominal_states(scenario.sweep, scenario.radar);
  const int n = static_cast<int>(nominals.size());
  std::vector<SweepPoint> points(n);

  for_each_index(n, policy, [&](int k) {
    SweepPoint& p = points[k];
    p.theta_deg = scenario.sweep.theta_deg(k);
    p.detection = evaluate_detection(nominals[k].aircraft, nominals[k].radar, *scenario.rcs,
                                     scenario.false_alarm_prob);
    p.sensitivity = linearize(nominals[k].aircraft, nominals[k].radar, *scenario.rcs,
                              scenario.false_alarm_prob, scenario.uncertainty);
  });
  return points;
}

McEnsemble run_monte_carlo(const Scenario& scenario, ExecutionPolicy policy) {
  if (scenario.mc.runs < 1) throw std::domain_error("monte_carlo: runs must be at least 1");

  const std::vector<NominalPair> nominals = nominal_states(scenario.sweep, scenario.radar);
  const int angles = static_cast<int>(nominals.size());
  const int runs = scenario.mc.runs;

  McEnsemble ens;
  ens.runs = runs;
  ens.angles = angles;
  ens.theta_deg.resize(angles);
  ens.pd_nominal.resize(angles);
  ens.sigma_pd.resize(angles);
  ens.pd_samples.resize(static_cast<std::size_t>(runs) * angles);
  ens.sample_mean.assign(angles, 0.0);
  ens.sample_std.assign(angles, 0.0);

  for_each_index(angles, policy, [&](int k) {
    ens.theta_deg[k] = scenario.sweep.theta_deg(k);
    const PdSensitivity s = linearize(nominals[k].aircraft, nominals[k].radar, *scenario.rcs,
                                      scenario.false_alarm_prob, scenario.uncertainty);
    ens.pd_nominal[k] = s.pd_nominal;
    ens.sigma_pd[k] = s.sigma_pd;
  });

  const GaussianVectorSampler aircraft_noise(scenario.uncertainty.aircraft_cov);
  const GaussianVectorSampler radar_noise(scenario.uncertainty.radar_cov);

  // Radar noise once per run, aircraft noise fresh at each grid point. The
  // stream index is the run index, so results do not depend on scheduling.
  for_each_index(runs, policy, [&](int i) {
    RngStream rng(scenario.mc.seed, static_cast<std::uint64_t>(i));
    const RadarState radar = apply_radar_noise(nominals[0].radar, radar_noise.sample(rng));
    for (int k = 0; k < angles; ++k) {
      const AircraftState aircraft =
          apply_aircraft_noise(nominals[k].aircraft, aircraft_noise.sample(rng));
      ens.pd_samples[static_cast<std::size_t>(i) * angles + k] =
          evaluate_detection(aircraft, radar, *scenario.rcs, scenario.false_alarm_prob).pd;
    }
  });

  // Ensemble statistics, reduced serially in index order.
  std::size_t inside = 0;
  for (int k = 0; k < angles; ++k) {
    double mean = 0.0;
    for (int i = 0; i < runs; ++i) mean += ens.pd_sample(i, k);
    mean /= runs;
    ens.sample_mean[k] = mean;

    double ss = 0.0;
    for (int i = 0; i < runs; ++i) {
      const double d = ens.pd_sample(i, k) - mean;
      ss += d * d;
      if (std::abs(ens.pd_error(i, k)) <= 3.0 * ens.sigma_pd[k]) ++inside;
    }
    ens.sample_std[k] = runs > 1 ? std::sqrt(ss / (runs - 1)) : 0.0;
  }
  ens.coverage = static_cast<double>(inside) / (static_cast<double>(runs) * angles);
  return ens;
}

std::vector<std::vector<double>> sensitivity_sweep(const Scenario& scenario,
                                                   const std::vector<UncertaintyModel>& levels,
                                                   ExecutionPolicy policy) {
  const std::vector<SweepPoint> points = evaluate_nominal_sweep(scenario, policy);
  std::vector<std::vector<double>> curves(levels.size(), std::vector<double>(points.size()));
  for (std::size_t level = 0; level < levels.size(); ++level)
    for (std::size_t k = 0; k < points.size(); ++k)
      curves[level][k] = 3.0 * sigma_pd(points[k].sensitivity.aircraft_jacobian,
                                        points[k].sensitivity.radar_jacobian, levels[level]);
  return curves;
}

}  // namespace radar_uq
