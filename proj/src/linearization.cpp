#include "radar_uq/linearization.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "radar_uq/geometry.hpp"

namespace radar_uq {

UncertaintyModel UncertaintyModel::from_sigmas(double aircraft_pos_std_m,
                                               double aircraft_ang_std_rad,
                                               double radar_pos_std_m, double radar_const_std) {
  UncertaintyModel u;
  u.aircraft_cov.diagonal().head<3>().setConstant(aircraft_pos_std_m * aircraft_pos_std_m);
  u.aircraft_cov.diagonal().tail<3>().setConstant(aircraft_ang_std_rad * aircraft_ang_std_rad);
  u.radar_cov.diagonal().head<3>().setConstant(radar_pos_std_m * radar_pos_std_m);
  u.radar_cov(3, 3) = radar_const_std * radar_const_std;
  return u;
}

double d_pd_d_snr(double snr, double false_alarm_prob) {
  if (!(false_alarm_prob > 0.0 && false_alarm_prob < 1.0))
    throw std::domain_error("d_pd_d_snr: false_alarm_prob must lie in (0, 1)");
  if (!(snr >= 0.0) || !std::isfinite(snr))
    throw std::domain_error("d_pd_d_snr: snr must be finite and nonnegative");
  const double shifted = std::sqrt(snr + 0.5);
  const double gap = std::sqrt(-std::log(false_alarm_prob)) - shifted;
  return std::exp(-gap * gap) / (2.0 * std::sqrt(std::numbers::pi) * shifted);
}

namespace {

// Shared chain pieces for both Jacobians, evaluated once per state.
struct ChainTerms {
  DetectionPoint det;
  double dpd_dsnr = 0.0;
  double dsnr_drange = 0.0;
  double dsnr_dsigma = 0.0;
  RowVec3 dsigma_drho = RowVec3::Zero();  // cross-section path in body axes
};

ChainTerms chain_terms(const AircraftState& aircraft, const RadarState& radar,
                       const RcsModel& rcs, double false_alarm_prob) {
  ChainTerms t;
  t.det = evaluate_detection(aircraft, radar, rcs, false_alarm_prob);
  t.dpd_dsnr = d_pd_d_snr(t.det.snr, false_alarm_prob);
  t.dsnr_drange = -4.0 * t.det.snr / t.det.range_m;
  const double r2 = t.det.range_m * t.det.range_m;
  t.dsnr_dsigma = radar.radar_constant / (kBoltzmann * r2 * r2);

  const RcsGradient grad = rcs.grad(t.det.angles);
  const RcsAngleGradients angle_grads = d_angles_d_rho(t.det.rho_body);
  t.dsigma_drho =
      grad.d_azimuth * angle_grads.d_azimuth + grad.d_elevation * angle_grads.d_elevation;
  return t;
}

}  // namespace

RowVec4 jacobian_radar(const AircraftState& aircraft, const RadarState& radar,
                       const RcsModel& rcs, double false_alarm_prob) {
  const ChainTerms t = chain_terms(aircraft, radar, rcs, false_alarm_prob);

  const RowVec3 drange_dpos = d_range_d_radar_pos(aircraft.position, radar.position);
  const RowVec3 dsigma_dpos = t.dsigma_drho * d_rho_d_radar_pos(aircraft.attitude);

  RowVec4 jac;
  jac.head<3>() =
      t.dpd_dsnr * (t.dsnr_drange * drange_dpos + t.dsnr_dsigma * dsigma_dpos);
  // d(snr)/d(radar constant) = rcs / (k range^4) = snr / constant.
  const double r2 = t.det.range_m * t.det.range_m;
  jac(3) = t.dpd_dsnr * t.det.rcs_m2 / (kBoltzmann * r2 * r2);
  return jac;
}

RowVec6 jacobian_aircraft(const AircraftState& aircraft, const RadarState& radar,
                          const RcsModel& rcs, double false_alarm_prob) {
  const ChainTerms t = chain_terms(aircraft, radar, rcs, false_alarm_prob);

  const RowVec3 drange_dpos = -d_range_d_radar_pos(aircraft.position, radar.position);
  const RowVec6 dsigma_dstate = t.dsigma_drho * d_rho_d_aircraft_state(aircraft, radar.position);

  RowVec6 jac = t.dpd_dsnr * t.dsnr_dsigma * dsigma_dstate;
  jac.head<3>() += t.dpd_dsnr * t.dsnr_drange * drange_dpos;
  return jac;
}

double sigma_pd(const RowVec6& aircraft_jac, const RowVec4& radar_jac,
                const UncertaintyModel& uncertainty) {
  const double aircraft_var = aircraft_jac * uncertainty.aircraft_cov * aircraft_jac.transpose();
  const double radar_var = radar_jac * uncertainty.radar_cov * radar_jac.transpose();
  const double var = aircraft_var + radar_var;
  const double scale = std::abs(aircraft_var) + std::abs(radar_var);
  if (var < -1e-12 * std::max(scale, 1e-300))
    throw std::domain_error("sigma_pd: covariance is not positive semidefinite");
  return std::sqrt(std::max(var, 0.0));
}

ErrorBudget error_budget(const RowVec6& aircraft_jac, const RowVec4& radar_jac,
                         const UncertaintyModel& uncertainty) {
  auto one_sigma = [](double var) {
    if (var < 0.0 && var > -1e-300) var = 0.0;
    if (var < 0.0) throw std::domain_error("error_budget: covariance is not positive semidefinite");
    return std::sqrt(var);
  };

  const RowVec3 pos_jac = aircraft_jac.head<3>();
  const RowVec3 att_jac = aircraft_jac.tail<3>();
  const RowVec3 rpos_jac = radar_jac.head<3>();

  ErrorBudget budget;
  budget.aircraft_position =
      3.0 * one_sigma(pos_jac * uncertainty.aircraft_cov.topLeftCorner<3, 3>() * pos_jac.transpose());
  budget.aircraft_attitude =
      3.0 * one_sigma(att_jac * uncertainty.aircraft_cov.bottomRightCorner<3, 3>() * att_jac.transpose());
  budget.radar_position =
      3.0 * one_sigma(rpos_jac * uncertainty.radar_cov.topLeftCorner<3, 3>() * rpos_jac.transpose());
  budget.radar_constant =
      3.0 * one_sigma(radar_jac(3) * radar_jac(3) * uncertainty.radar_cov(3, 3));
  budget.total = 3.0 * sigma_pd(aircraft_jac, radar_jac, uncertainty);
  return budget;
}

PdSensitivity linearize(const AircraftState& aircraft, const RadarState& radar,
                        const RcsModel& rcs, double false_alarm_prob,
                        const UncertaintyModel& uncertainty) {
  PdSensitivity s;
  s.pd_nominal = evaluate_detection(aircraft, radar, rcs, false_alarm_prob).pd;
  s.aircraft_jacobian = jacobian_aircraft(aircraft, radar, rcs, false_alarm_prob);
  s.radar_jacobian = jacobian_radar(aircraft, radar, rcs, false_alarm_prob);
  s.sigma_pd = sigma_pd(s.aircraft_jacobian, s.radar_jacobian, uncertainty);
  return s;
}

}  // namespace radar_uq
