#include "radar_uq/commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace radar_uq {

namespace {

constexpr const char* kEol = "\r\n";

// Locale-independent, 17 significant digits: enough to round-trip a double,
// so identical runs produce identical bytes.
std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file for writing: " + path);
  file << contents;
  if (!file) throw std::runtime_error("failed while writing output file: " + path);
}

std::vector<UncertaintyModel> sensitivity_levels(const Scenario& scenario) {
  // The three radar presets, each paired with the scenario's aircraft block.
  std::vector<UncertaintyModel> levels = {preset_uncertainty(UncertaintyLevel::Low),
                                          preset_uncertainty(UncertaintyLevel::Medium),
                                          preset_uncertainty(UncertaintyLevel::High)};
  for (UncertaintyModel& level : levels) level.aircraft_cov = scenario.uncertainty.aircraft_cov;
  return levels;
}

}  // namespace

std::string render_nominal_csv(const Scenario& scenario, ExecutionPolicy policy) {
  const std::vector<SweepPoint> points = evaluate_nominal_sweep(scenario, policy);
  std::string out = "theta_deg,pd_nominal,snr,rcs_m2,rcs_azimuth_rad,rcs_elevation_rad";
  out += kEol;
  for (const SweepPoint& p : points) {
    out += fmt(p.theta_deg);
    out += ',';
    out += fmt(p.detection.pd);
    out += ',';
    out += fmt(p.detection.snr);
    out += ',';
    out += fmt(p.detection.rcs_m2);
    out += ',';
    out += fmt(p.detection.angles.azimuth);
    out += ',';
    out += fmt(p.detection.angles.elevation);
    out += kEol;
  }
  return out;
}

std::string render_montecarlo_csv(const McEnsemble& ensemble) {
  std::string out = "theta_deg,run,pd_sample,pd_error";
  out += kEol;
  for (int run = 0; run < ensemble.runs; ++run) {
    for (int k = 0; k < ensemble.angles; ++k) {
      out += fmt(ensemble.theta_deg[k]);
      out += ',';
      out += std::to_string(run);
      out += ',';
      out += fmt(ensemble.pd_sample(run, k));
      out += ',';
      out += fmt(ensemble.pd_error(run, k));
      out += kEol;
    }
  }
  return out;
}

std::string render_montecarlo_summary(const Scenario& scenario, const McEnsemble& ensemble) {
  nlohmann::ordered_json summary;
  summary["runs"] = ensemble.runs;
  summary["seed"] = scenario.mc.seed;
  summary["angles"] = ensemble.angles;
  summary["coverage"] = ensemble.coverage;
  const double max_sigma =
      ensemble.sigma_pd.empty() ? 0.0 : *std::max_element(ensemble.sigma_pd.begin(), ensemble.sigma_pd.end());
  summary["max_three_sigma_pd"] = 3.0 * max_sigma;
  summary["theta_deg"] = ensemble.theta_deg;
  summary["sigma_pd"] = ensemble.sigma_pd;
  summary["sample_mean"] = ensemble.sample_mean;
  summary["sample_std"] = ensemble.sample_std;
  return summary.dump(2) + "\n";
}

std::string render_sensitivity_csv(const Scenario& scenario, ExecutionPolicy policy) {
  const auto curves = sensitivity_sweep(scenario, sensitivity_levels(scenario), policy);
  const int n = scenario.sweep.count();
  std::string out = "theta_deg,three_sigma_low,three_sigma_medium,three_sigma_high";
  out += kEol;
  for (int k = 0; k < n; ++k) {
    out += fmt(scenario.sweep.theta_deg(k));
    for (const auto& curve : curves) {
      out += ',';
      out += fmt(curve[k]);
    }
    out += kEol;
  }
  return out;
}

std::string render_budget_csv(const Scenario& scenario, ExecutionPolicy policy) {
  const std::vector<SweepPoint> points = evaluate_nominal_sweep(scenario, policy);
  std::string out = "theta_deg,aircraft_position,aircraft_attitude,radar_position,radar_constant,total";
  out += kEol;
  for (const SweepPoint& p : points) {
    const ErrorBudget b = error_budget(p.sensitivity.aircraft_jacobian,
                                       p.sensitivity.radar_jacobian, scenario.uncertainty);
    out += fmt(p.theta_deg);
    out += ',';
    out += fmt(b.aircraft_position);
    out += ',';
    out += fmt(b.aircraft_attitude);
    out += ',';
    out += fmt(b.radar_position);
    out += ',';
    out += fmt(b.radar_constant);
    out += ',';
    out += fmt(b.total);
    out += kEol;
  }
  return out;
}

void cmd_nominal(const Scenario& scenario, const std::string& out_csv, ExecutionPolicy policy) {
  write_file(out_csv, render_nominal_csv(scenario, policy));
}

void cmd_montecarlo(const Scenario& scenario, const std::string& out_csv,
                    const std::string& out_summary, ExecutionPolicy policy) {
  const McEnsemble ensemble = run_monte_carlo(scenario, policy);
  write_file(out_csv, render_montecarlo_csv(ensemble));
  write_file(out_summary, render_montecarlo_summary(scenario, ensemble));
}

void cmd_sensitivity(const Scenario& scenario, const std::string& out_csv, ExecutionPolicy policy) {
  write_file(out_csv, render_sensitivity_csv(scenario, policy));
}

void cmd_budget(const Scenario& scenario, const std::string& out_csv, ExecutionPolicy policy) {
  write_file(out_csv, render_budget_csv(scenario, policy));
}

}  // namespace radar_uq
