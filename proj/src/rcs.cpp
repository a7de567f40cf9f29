#include "radar_uq/rcs.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace radar_uq {

namespace {

// Inner expression of the ellipsoid cross section; sigma = pi (abc)^2 / u^2.
double ellipsoid_inner(double a, double b, double c, const RcsAngles& ang) {
  const double sl = std::sin(ang.azimuth), cl = std::cos(ang.azimuth);
  const double se = std::sin(ang.elevation), ce = std::cos(ang.elevation);
  const double ta = a * sl * ce;
  const double tb = b * sl * se;
  const double tc = c * cl;
  return ta * ta + tb * tb + tc * tc;
}

}  // namespace

EllipsoidRcs::EllipsoidRcs(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (!(std::isfinite(a) && a > 0.0 && std::isfinite(b) && b > 0.0 && std::isfinite(c) && c > 0.0))
    throw std::invalid_argument("EllipsoidRcs: axis half-lengths must be positive and finite");
}

double EllipsoidRcs::sigma(const RcsAngles& angles) const {
  const double u = ellipsoid_inner(a_, b_, c_, angles);
  const double abc = a_ * b_ * c_;
  return std::numbers::pi * abc * abc / (u * u);
}

RcsGradient EllipsoidRcs::grad(const RcsAngles& angles) const {
  const double sl = std::sin(angles.azimuth);
  const double se = std::sin(angles.elevation), ce = std::cos(angles.elevation);
  const double u = ellipsoid_inner(a_, b_, c_, angles);
  const double u3 = u * u * u;
  const double abc2 = (a_ * b_ * c_) * (a_ * b_ * c_);

  // d(sigma)/dx = -2 pi (abc)^2 u_x / u^3 with u the inner expression.
  const double du_daz =
      std::sin(2.0 * angles.azimuth) * (a_ * a_ * ce * ce + b_ * b_ * se * se - c_ * c_);
  const double du_del = sl * sl * std::sin(2.0 * angles.elevation) * (b_ * b_ - a_ * a_);

  const double common = -2.0 * std::numbers::pi * abc2 / u3;
  return {common * du_daz, common * du_del};
}

ConstantRcs::ConstantRcs(double sigma0_m2) : sigma0_(sigma0_m2) {
  if (!(std::isfinite(sigma0_m2) && sigma0_m2 > 0.0))
    throw std::invalid_argument("ConstantRcs: cross section must be positive and finite");
}

}  // namespace radar_uq
