#pragma once

#include "radar_uq/types.hpp"

namespace radar_uq {

/// NED->body direction cosine matrix for the ZYX (yaw, pitch, roll)
/// sequence; row 1 is [cos(pitch)cos(yaw), cos(pitch)sin(yaw), -sin(pitch)].
/// Throws std::domain_error at the pitch = +-pi/2 gimbal singularity.
Mat3 dcm_ned_to_body(const EulerAngles& attitude);

/// Entrywise derivatives of dcm_ned_to_body with respect to roll, pitch, yaw.
struct DcmPartials {
  Mat3 d_roll;
  Mat3 d_pitch;
  Mat3 d_yaw;
};
DcmPartials dcm_attitude_partials(const EulerAngles& attitude);

/// Radar position expressed in the aircraft body frame.
Vec3 relative_position_body(const AircraftState& aircraft, const Vec3& radar_position);

/// Euclidean distance between the two positions (m).
double range(const Vec3& aircraft_position, const Vec3& radar_position);

/// Body-frame azimuth/elevation of the radar direction. Throws
/// std::domain_error when the radar lies on the body z-axis.
RcsAngles rcs_angles(const Vec3& rho_body);

/// d(range)/d(radar position): unit row vector from aircraft toward radar.
/// The aircraft-position partial is its negation. Throws std::domain_error
/// for coincident positions.
RowVec3 d_range_d_radar_pos(const Vec3& aircraft_position, const Vec3& radar_position);

/// Rows d(azimuth)/d(rho_body) and d(elevation)/d(rho_body).
struct RcsAngleGradients {
  RowVec3 d_azimuth;
  RowVec3 d_elevation;
};
RcsAngleGradients d_angles_d_rho(const Vec3& rho_body);

/// d(rho_body)/d(radar position) = the NED->body DCM.
Mat3 d_rho_d_radar_pos(const EulerAngles& attitude);

/// d(rho_body)/d(aircraft state), 3x6. Position block is -DCM; attitude
/// columns are the DCM partials applied to (radar - aircraft).
Mat36 d_rho_d_aircraft_state(const AircraftState& aircraft, const Vec3& radar_position);

}  // namespace radar_uq
