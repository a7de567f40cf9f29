#pragma once

#include "radar_uq/types.hpp"

namespace radar_uq {

struct RcsGradient {
  double d_azimuth = 0.0;    // m^2 per rad
  double d_elevation = 0.0;  // m^2 per rad
};

/// Radar cross section as a function of the body-frame aspect angles.
/// Implementations are immutable and safe to share across threads.
class RcsModel {
 public:
  virtual ~RcsModel() = default;

  /// Cross section in m^2; strictly positive.
  virtual double sigma(const RcsAngles& angles) const = 0;

  /// Analytic gradient of sigma with respect to azimuth and elevation.
  virtual RcsGradient grad(const RcsAngles& angles) const = 0;
};

/// Ellipsoid scatterer aligned with the body frame: a axis forward, b axis
/// down, c axis out the right wing (half-lengths in meters).
class EllipsoidRcs final : public RcsModel {
 public:
  EllipsoidRcs(double a, double b, double c);

  double sigma(const RcsAngles& angles) const override;
  RcsGradient grad(const RcsAngles& angles) const override;

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

 private:
  double a_;
  double b_;
  double c_;
};

/// Aspect-independent cross section; the gradient is identically zero.
class ConstantRcs final : public RcsModel {
 public:
  explicit ConstantRcs(double sigma0_m2);

  double sigma(const RcsAngles&) const override { return sigma0_; }
  RcsGradient grad(const RcsAngles&) const override { return {0.0, 0.0}; }

  double sigma0() const { return sigma0_; }

 private:
  double sigma0_;
};

}  // namespace radar_uq
