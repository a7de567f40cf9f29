#include "radar_uq/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace radar_uq {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
// Radar closer than this to the body z-axis (or to the aircraft) is treated
// as singular rather than returning huge or NaN derivatives.
constexpr double kSingularTol = 1e-9;

void require_valid_attitude(const EulerAngles& att) {
  if (!std::isfinite(att.roll) || !std::isfinite(att.pitch) || !std::isfinite(att.yaw))
    throw std::domain_error("attitude angles must be finite");
  if (!(std::abs(att.pitch) < kHalfPi))
    throw std::domain_error("gimbal singularity: pitch must lie strictly inside (-pi/2, pi/2)");
}

}  // namespace

Mat3 dcm_ned_to_body(const EulerAngles& att) {
  require_valid_attitude(att);
  const double sr = std::sin(att.roll), cr = std::cos(att.roll);
  const double sp = std::sin(att.pitch), cp = std::cos(att.pitch);
  const double sy = std::sin(att.yaw), cy = std::cos(att.yaw);

  Mat3 m;
  m << cp * cy, cp * sy, -sp,
      sr * sp * cy - cr * sy, sr * sp * sy + cr * cy, sr * cp,
      cr * sp * cy + sr * sy, cr * sp * sy - sr * cy, cr * cp;
  return m;
}

DcmPartials dcm_attitude_partials(const EulerAngles& att) {
  const Mat3 m = dcm_ned_to_body(att);
  const double sr = std::sin(att.roll), cr = std::cos(att.roll);
  const double sp = std::sin(att.pitch), cp = std::cos(att.pitch);
  const double sy = std::sin(att.yaw), cy = std::cos(att.yaw);

  DcmPartials p;
  // Row 2 depends on roll through row 3's trig terms and vice versa.
  p.d_roll.row(0).setZero();
  p.d_roll.row(1) = m.row(2);
  p.d_roll.row(2) = -m.row(1);

  p.d_pitch << -sp * cy, -sp * sy, -cp,
      sr * cp * cy, sr * cp * sy, -sr * sp,
      cr * cp * cy, cr * cp * sy, -cr * sp;

  // Each row i of d/d(yaw) is (-m(i,1), m(i,0), 0).
  for (int i = 0; i < 3; ++i) {
    p.d_yaw(i, 0) = -m(i, 1);
    p.d_yaw(i, 1) = m(i, 0);
    p.d_yaw(i, 2) = 0.0;
  }
  return p;
}

Vec3 relative_position_body(const AircraftState& aircraft, const Vec3& radar_position) {
  return dcm_ned_to_body(aircraft.attitude) * (radar_position - aircraft.position);
}

double range(const Vec3& aircraft_position, const Vec3& radar_position) {
  return (radar_position - aircraft_position).norm();
}

RcsAngles rcs_angles(const Vec3& rho_body) {
  const double horizontal = std::hypot(rho_body.x(), rho_body.y());
  if (horizontal < kSingularTol)
    throw std::domain_error("rcs_angles: radar lies on the body z-axis");
  double azimuth = std::atan2(rho_body.y(), rho_body.x());
  // atan2 can return -pi for a negative-zero y; keep azimuth in (-pi, pi].
  if (azimuth == -std::numbers::pi) azimuth = std::numbers::pi;
  return {azimuth, std::atan2(rho_body.z(), horizontal)};
}

RowVec3 d_range_d_radar_pos(const Vec3& aircraft_position, const Vec3& radar_position) {
  const Vec3 toward_radar = radar_position - aircraft_position;
  const double dist = toward_radar.norm();
  if (dist < kSingularTol)
    throw std::domain_error("d_range_d_radar_pos: coincident aircraft and radar positions");
  return toward_radar.transpose() / dist;
}

RcsAngleGradients d_angles_d_rho(const Vec3& rho_body) {
  const double x = rho_body.x(), y = rho_body.y(), z = rho_body.z();
  const double s2 = x * x + y * y;
  if (std::sqrt(s2) < kSingularTol)
    throw std::domain_error("d_angles_d_rho: radar lies on the body z-axis");
  const double r2 = s2 + z * z;
  const double alpha = r2 * std::sqrt(s2);

  RcsAngleGradients g;
  g.d_azimuth << -y / s2, x / s2, 0.0;
  g.d_elevation << -x * z / alpha, -y * z / alpha, std::sqrt(s2) / r2;
  return g;
}

Mat3 d_rho_d_radar_pos(const EulerAngles& attitude) { return dcm_ned_to_body(attitude); }

Mat36 d_rho_d_aircraft_state(const AircraftState& aircraft, const Vec3& radar_position) {
  const Mat3 dcm = dcm_ned_to_body(aircraft.attitude);
  const DcmPartials partials = dcm_attitude_partials(aircraft.attitude);
  const Vec3 toward_radar = radar_position - aircraft.position;

  Mat36 j;
  j.leftCols<3>() = -dcm;
  j.col(3) = partials.d_roll * toward_radar;
  j.col(4) = partials.d_pitch * toward_radar;
  j.col(5) = partials.d_yaw * toward_radar;
  return j;
}

}  // namespace radar_uq
