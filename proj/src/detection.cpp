#include "radar_uq/detection.hpp"

#include <cmath>
#include <stdexcept>

#include "radar_uq/geometry.hpp"

namespace radar_uq {

double erfc(double z) {
  if (!std::isfinite(z)) throw std::domain_error("erfc: argument must be finite");
  return std::erfc(z);
}

double pd_from_snr(double snr, double false_alarm_prob) {
  if (!(false_alarm_prob > 0.0 && false_alarm_prob < 1.0))
    throw std::domain_error("pd_from_snr: false_alarm_prob must lie in (0, 1)");
  if (!(snr >= 0.0) || !std::isfinite(snr))
    throw std::domain_error("pd_from_snr: snr must be finite and nonnegative");
  return 0.5 * erfc(std::sqrt(-std::log(false_alarm_prob)) - std::sqrt(snr + 0.5));
}

double snr(double radar_constant, double rcs_m2, double range_m) {
  if (!(range_m > 0.0)) throw std::domain_error("snr: range must be positive");
  const double r2 = range_m * range_m;
  return radar_constant * rcs_m2 / (kBoltzmann * r2 * r2);
}

double radar_constant_surveillance(const RadarParams& p) {
  auto check = [](double v, const char* name) {
    if (!(std::isfinite(v) && v > 0.0))
      throw std::domain_error(std::string("radar_constant_surveillance: ") + name +
                              " must be positive");
  };
  check(p.avg_power_w, "avg_power_w");
  check(p.aperture_m2, "aperture_m2");
  check(p.temperature_k, "temperature_k");
  check(p.loss, "loss");
  check(p.noise_factor, "noise_factor");
  check(p.scan_time_s, "scan_time_s");
  check(p.search_volume_sr, "search_volume_sr");
  return p.avg_power_w * p.aperture_m2 / (16.0 * p.temperature_k * p.loss * p.noise_factor) *
         p.scan_time_s / p.search_volume_sr;
}

DetectionPoint evaluate_detection(const AircraftState& aircraft, const RadarState& radar,
                                  const RcsModel& rcs, double false_alarm_prob) {
  DetectionPoint point;
  point.rho_body = relative_position_body(aircraft, radar.position);
  point.range_m = range(aircraft.position, radar.position);
  point.angles = rcs_angles(point.rho_body);
  point.rcs_m2 = rcs.sigma(point.angles);
  point.snr = snr(radar.radar_constant, point.rcs_m2, point.range_m);
  point.pd = pd_from_snr(point.snr, false_alarm_prob);
  return point;
}

}  // namespace radar_uq
