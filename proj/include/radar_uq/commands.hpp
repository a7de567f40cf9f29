#pragma once

#include <string>

#include "radar_uq/scenario.hpp"

namespace radar_uq {

// Renderers are pure functions of (scenario, policy) so output bytes can be
// asserted without touching the filesystem. CSV uses CRLF line endings, '.'
// decimal separator, and 17-significant-digit doubles.

std::string render_nominal_csv(const Scenario& scenario,
                               ExecutionPolicy policy = ExecutionPolicy::Parallel);
std::string render_montecarlo_csv(const McEnsemble& ensemble);
std::string render_montecarlo_summary(const Scenario& scenario, const McEnsemble& ensemble);
std::string render_sensitivity_csv(const Scenario& scenario,
                                   ExecutionPolicy policy = ExecutionPolicy::Parallel);
std::string render_budget_csv(const Scenario& scenario,
                              ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// Nominal sweep: theta, pd, snr, cross section, aspect angles per row.
void cmd_nominal(const Scenario& scenario, const std::string& out_csv,
                 ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// Monte Carlo ensemble: long-form CSV (theta_deg, run, pd_sample, pd_error)
/// plus a JSON summary with the coverage fraction and per-angle statistics.
void cmd_montecarlo(const Scenario& scenario, const std::string& out_csv,
                    const std::string& out_summary,
                    ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// Linearized 3-sigma pd for the Low/Medium/High radar uncertainty presets.
void cmd_sensitivity(const Scenario& scenario, const std::string& out_csv,
                     ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// Per-source 3-sigma error budget for the scenario's uncertainty model.
void cmd_budget(const Scenario& scenario, const std::string& out_csv,
                ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace radar_uq
