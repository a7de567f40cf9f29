#pragma once

#include <Eigen/Dense>

namespace radar_uq {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat36 = Eigen::Matrix<double, 3, 6>;
using RowVec3 = Eigen::RowVector3d;
using RowVec4 = Eigen::Matrix<double, 1, 4>;
using RowVec6 = Eigen::Matrix<double, 1, 6>;

/// ZYX Euler angles in radians: yaw about down, then pitch, then roll.
struct EulerAngles {
  double roll = 0.0;
  double pitch = 0.0;
  double yaw = 0.0;
};

/// Aircraft pose: NED position (m) plus attitude. Stacks to the 6-vector
/// [north, east, down, roll, pitch, yaw].
struct AircraftState {
  Vec3 position = Vec3::Zero();
  EulerAngles attitude{};

  Vec6 as_vector() const {
    Vec6 x;
    x << position.x(), position.y(), position.z(), attitude.roll, attitude.pitch, attitude.yaw;
    return x;
  }
  static AircraftState from_vector(const Vec6& x) {
    return {Vec3(x(0), x(1), x(2)), EulerAngles{x(3), x(4), x(5)}};
  }
};

/// Radar state: NED position (m) plus consolidated radar constant
/// (J m^2 / K). Stacks to the 4-vector [north, east, down, constant].
struct RadarState {
  Vec3 position = Vec3::Zero();
  double radar_constant = 0.0;

  Vec4 as_vector() const {
    return Vec4(position.x(), position.y(), position.z(), radar_constant);
  }
  static RadarState from_vector(const Vec4& x) {
    return {Vec3(x(0), x(1), x(2)), x(3)};
  }
};

/// Direction to the radar in the aircraft body frame: azimuth in (-pi, pi]
/// measured from the nose toward the right wing, elevation in
/// [-pi/2, pi/2] positive when the radar is below the body x-y plane.
struct RcsAngles {
  double azimuth = 0.0;
  double elevation = 0.0;
};

}  // namespace radar_uq
