#pragma once

#include "radar_uq/detection.hpp"

namespace radar_uq {

/// Input covariances, ordered like the state vectors: aircraft
/// [north, east, down, roll, pitch, yaw], radar [north, east, down,
/// constant]. Diagonal entries are variances.
struct UncertaintyModel {
  Mat6 aircraft_cov = Mat6::Zero();
  Mat4 radar_cov = Mat4::Zero();

  static UncertaintyModel from_sigmas(double aircraft_pos_std_m, double aircraft_ang_std_rad,
                                      double radar_pos_std_m, double radar_const_std);
};

/// Derivative of pd_from_snr with respect to snr:
/// exp(-(sqrt(-ln p_fa) - sqrt(snr + 0.5))^2) / (2 sqrt(pi) sqrt(snr + 0.5)).
double d_pd_d_snr(double snr, double false_alarm_prob);

/// 1x4 sensitivity of pd to the radar state: entries 1-3 per meter of radar
/// NED position, entry 4 per unit radar constant. The position entries
/// combine the range path with the cross-section path through the body
/// frame angles.
RowVec4 jacobian_radar(const AircraftState& aircraft, const RadarState& radar,
                       const RcsModel& rcs, double false_alarm_prob);

/// 1x6 sensitivity of pd to the aircraft state: entries 1-3 per meter of
/// position, entries 4-6 per radian of roll, pitch, yaw. Attitude entries
/// carry only the cross-section path; range does not depend on attitude.
RowVec6 jacobian_aircraft(const AircraftState& aircraft, const RadarState& radar,
                          const RcsModel& rcs, double false_alarm_prob);

/// Standard deviation of pd from the linearized model:
/// sqrt(Ja Caa Ja^T + Jr Crr Jr^T). Throws std::domain_error when the
/// quadratic form is negative (non-PSD covariance).
double sigma_pd(const RowVec6& aircraft_jac, const RowVec4& radar_jac,
                const UncertaintyModel& uncertainty);

/// Per-source 3-sigma contributions to the pd spread. `total` activates all
/// sources at once and equals the root-sum-square of the four contributions
/// whenever the covariance blocks are uncorrelated.
struct ErrorBudget {
  double aircraft_position = 0.0;
  double aircraft_attitude = 0.0;
  double radar_position = 0.0;
  double radar_constant = 0.0;
  double total = 0.0;
};
ErrorBudget error_budget(const RowVec6& aircraft_jac, const RowVec4& radar_jac,
                         const UncertaintyModel& uncertainty);

/// Nominal pd, both Jacobians, and the propagated standard deviation at one
/// state.
struct PdSensitivity {
  double pd_nominal = 0.0;
  RowVec6 aircraft_jacobian = RowVec6::Zero();
  RowVec4 radar_jacobian = RowVec4::Zero();
  double sigma_pd = 0.0;
};
PdSensitivity linearize(const AircraftState& aircraft, const RadarState& radar,
                        const RcsModel& rcs, double false_alarm_prob,
                        const UncertaintyModel& uncertainty);

}  // namespace radar_uq
