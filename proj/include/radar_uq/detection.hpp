#pragma once

#include "radar_uq/rcs.hpp"
#include "radar_uq/types.hpp"

namespace radar_uq {

/// Boltzmann constant (J/K) as used throughout the detection chain.
inline constexpr double kBoltzmann = 1.38e-23;

/// Surveillance radar hardware parameters; consolidate to a single radar
/// constant with radar_constant_surveillance().
struct RadarParams {
  double avg_power_w = 0.0;
  double aperture_m2 = 0.0;
  double temperature_k = 0.0;
  double loss = 0.0;
  double noise_factor = 0.0;
  double scan_time_s = 0.0;
  double search_volume_sr = 0.0;
};

/// Complementary error function, 1 - 2/sqrt(pi) * integral_0^z exp(-t^2) dt.
double erfc(double z);

/// Single-pulse detection probability,
/// 0.5 * erfc(sqrt(-ln p_fa) - sqrt(snr + 0.5)).
/// Strictly increasing in both snr and the false-alarm probability.
double pd_from_snr(double snr, double false_alarm_prob);

/// snr = radar_constant * rcs / (kBoltzmann * range^4).
double snr(double radar_constant, double rcs_m2, double range_m);

/// radar_constant = P A / (16 T L F) * T_scan / Omega for a surveillance
/// radar. All parameters must be positive.
double radar_constant_surveillance(const RadarParams& params);

/// All intermediates of one detection evaluation.
struct DetectionPoint {
  Vec3 rho_body = Vec3::Zero();
  double range_m = 0.0;
  RcsAngles angles{};
  double rcs_m2 = 0.0;
  double snr = 0.0;
  double pd = 0.0;
};

/// End-to-end evaluation: body-frame geometry, cross section, SNR,
/// detection probability. Propagates geometry singularities.
DetectionPoint evaluate_detection(const AircraftState& aircraft, const RadarState& radar,
                                  const RcsModel& rcs, double false_alarm_prob);

}  // namespace radar_uq
