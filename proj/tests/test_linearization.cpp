#include "radar_uq/linearization.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "radar_uq/geometry.hpp"
#include "support/oracles.hpp"
#include "support/states.hpp"

using namespace radar_uq;
using test_support::rel_err;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPfa = 1.7e-4;

AircraftState sweep_aircraft(double theta_deg) {
  const double theta = theta_deg * kPi / 180.0;
  AircraftState a;
  a.position = Vec3(500e3 * std::sin(theta), 500e3 * std::cos(theta), -3000.0);
  a.attitude = EulerAngles{0.0, 0.0, kPi / 2.0};
  return a;
}

double pipeline_pd(const Vec6& xa, const Vec4& xr, const RcsModel& model) {
  return evaluate_detection(AircraftState::from_vector(xa), RadarState::from_vector(xr), model,
                            kPfa)
      .pd;
}

}  // namespace

TEST_CASE("d_pd_d_snr: midpoint closed form and saturation") {
  const double snr_mid = -std::log(kPfa) - 0.5;
  const double expected = 1.0 / (2.0 * std::sqrt(kPi) * std::sqrt(-std::log(kPfa)));
  CHECK(std::abs(d_pd_d_snr(snr_mid, kPfa) - expected) <= 1e-15);
  CHECK(std::abs(expected - 0.095750799158904262) <= 1e-15);

  CHECK(d_pd_d_snr(1e6, kPfa) <= 1e-10);
  CHECK(d_pd_d_snr(0.0, kPfa) > 0.0);
  CHECK_THROWS_AS(d_pd_d_snr(-1.0, kPfa), std::domain_error);
}

TEST_CASE("d_pd_d_snr: matches finite differences of pd_from_snr") {
  std::mt19937 rng(53);
  std::uniform_real_distribution<double> snr_draw(0.1, 50.0);
  for (int i = 0; i < 300; ++i) {
    const double s = snr_draw(rng);
    const double fd =
        test_support::central_diff([&](double v) { return pd_from_snr(v, kPfa); }, s);
    CHECK(rel_err(d_pd_d_snr(s, kPfa), fd) <= 1e-7);
  }
}

TEST_CASE("jacobian_radar: constant model reduces to the pure range path") {
  const ConstantRcs model(0.05);
  const AircraftState aircraft = sweep_aircraft(45.0);
  const RadarState radar{Vec3::Zero(), 167.0};

  const RowVec4 jac = jacobian_radar(aircraft, radar, model, kPfa);

  const DetectionPoint det = evaluate_detection(aircraft, radar, model, kPfa);
  const double dpds = d_pd_d_snr(det.snr, kPfa);
  const RowVec3 range_path = dpds * (-4.0 * det.snr / det.range_m) *
                             d_range_d_radar_pos(aircraft.position, radar.position);
  CHECK((jac.head<3>() - range_path).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("jacobian_radar: radar-constant entry at the 45-degree point") {
  const EllipsoidRcs model(0.15, 0.13, 0.21);
  const RadarState radar{Vec3::Zero(), 167.0};
  const RowVec4 jac = jacobian_radar(sweep_aircraft(45.0), radar, model, kPfa);

  const DetectionPoint det = evaluate_detection(sweep_aircraft(45.0), radar, model, kPfa);
  const double chain = d_pd_d_snr(det.snr, kPfa) * det.snr / radar.radar_constant;
  CHECK(rel_err(jac(3), chain) <= 1e-14);
  // About 0.005 per unit of radar constant at this geometry.
  CHECK(jac(3) > 0.004);
  CHECK(jac(3) < 0.006);
}

TEST_CASE("jacobian_radar: matches finite differences of the full pipeline") {
  const EllipsoidRcs model(0.15, 0.13, 0.21);
  test_support::RandomStateGen gen(59);
  for (int trial = 0; trial < 200; ++trial) {
    const auto [aircraft, radar] = gen.sample();
    const RowVec4 analytic = jacobian_radar(aircraft, radar, model, kPfa);
    const Vec6 xa = aircraft.as_vector();
    const Vec4 xr = radar.as_vector();
    for (int c = 0; c < 4; ++c) {
      const double fd = test_support::central_diff(
          [&](double v) {
            Vec4 x = xr;
            x(c) = v;
            return pipeline_pd(xa, x, model);
          },
          xr(c));
      CHECK(rel_err(analytic(c), fd) <= 1e-6);
    }
  }
}

TEST_CASE("jacobian_aircraft: constant model ties to the radar Jacobian") {
  const ConstantRcs model(0.05);
  const AircraftState aircraft = sweep_aircraft(45.0);
  const RadarState radar{Vec3::Zero(), 167.0};

  const RowVec6 aircraft_jac = jacobian_aircraft(aircraft, radar, model, kPfa);
  const RowVec4 radar_jac = jacobian_radar(aircraft, radar, model, kPfa);

  CHECK((aircraft_jac.head<3>() + radar_jac.head<3>()).cwiseAbs().maxCoeff() <= 1e-18);
  CHECK(aircraft_jac.tail<3>().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("jacobian_aircraft: matches finite differences of the full pipeline") {
  const EllipsoidRcs model(0.15, 0.13, 0.21);
  test_support::RandomStateGen gen(61);
  for (int trial = 0; trial < 200; ++trial) {
    const auto [aircraft, radar] = gen.sample();
    const RowVec6 analytic = jacobian_aircraft(aircraft, radar, model, kPfa);
    const Vec6 xa = aircraft.as_vector();
    const Vec4 xr = radar.as_vector();
    for (int c = 0; c < 6; ++c) {
      const double fd = test_support::central_diff(
          [&](double v) {
            Vec6 x = xa;
            x(c) = v;
            return pipeline_pd(x, xr, model);
          },
          xa(c));
      CHECK(rel_err(analytic(c), fd) <= 1e-6);
    }
  }
}

TEST_CASE("linearization consistency: residual shrinks quadratically") {
  const EllipsoidRcs model(0.15, 0.13, 0.21);
  const AircraftState aircraft = sweep_aircraft(45.0);
  const RadarState radar{Vec3::Zero(), 167.0};

  const RowVec6 aircraft_jac = jacobian_aircraft(aircraft, radar, model, kPfa);
  const RowVec4 radar_jac = jacobian_radar(aircraft, radar, model, kPfa);
  const double pd0 = evaluate_detection(aircraft, radar, model, kPfa).pd;

  // Fixed random direction, scaled per coordinate to natural units:
  // 100 m positions, 0.02 rad angles, 5 units of radar constant.
  std::mt19937 rng(67);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Vec6 wa;
  Vec4 wr;
  for (int i = 0; i < 3; ++i) wa(i) = 100.0 * unit(rng);
  for (int i = 3; i < 6; ++i) wa(i) = 0.02 * unit(rng);
  for (int i = 0; i < 3; ++i) wr(i) = 100.0 * unit(rng);
  wr(3) = 5.0 * unit(rng);

  auto residual = [&](double eps) {
    const Vec6 xa = aircraft.as_vector() + eps * wa;
    const Vec4 xr = radar.as_vector() + eps * wr;
    const double linear = (aircraft_jac * (eps * wa))(0) + (radar_jac * (eps * wr))(0);
    return std::abs(pipeline_pd(xa, xr, model) - pd0 - linear);
  };

  for (double eps = 1e-2; eps >= 2e-4; eps /= 2.0) {
    CHECK(residual(eps / 2.0) <= residual(eps) / 3.5);
  }
}

TEST_CASE("sigma_pd: zero covariance, scaling, rank-1 reduction") {
  RowVec6 aircraft_jac;
  aircraft_jac << 0.2, -0.1, 0.05, 1.3, -0.7, 0.4;
  RowVec4 radar_jac;
  radar_jac << -0.03, 0.02, 0.01, 0.9;

  CHECK(sigma_pd(aircraft_jac, radar_jac, UncertaintyModel{}) == 0.0);

  const UncertaintyModel base = UncertaintyModel::from_sigmas(10.0, 0.02, 100.0, 5.0);
  const double sig = sigma_pd(aircraft_jac, radar_jac, base);
  for (double s : {0.5, 2.0, 7.0}) {
    UncertaintyModel scaled = base;
    scaled.aircraft_cov *= s * s;
    scaled.radar_cov *= s * s;
    CHECK(sigma_pd(aircraft_jac, radar_jac, scaled) == doctest::Approx(s * sig).epsilon(1e-12));
  }

  // Single nonzero variance v at index i: sigma = |jac_i| sqrt(v).
  const double v = 0.37;
  for (int i = 0; i < 6; ++i) {
    UncertaintyModel single;
    single.aircraft_cov(i, i) = v;
    CHECK(sigma_pd(aircraft_jac, radar_jac, single) ==
          doctest::Approx(std::abs(aircraft_jac(i)) * std::sqrt(v)).epsilon(1e-12));
  }
  for (int i = 0; i < 4; ++i) {
    UncertaintyModel single;
    single.radar_cov(i, i) = v;
    CHECK(sigma_pd(aircraft_jac, radar_jac, single) ==
          doctest::Approx(std::abs(radar_jac(i)) * std::sqrt(v)).epsilon(1e-12));
  }

  UncertaintyModel bad;
  bad.aircraft_cov(0, 0) = -1.0;
  CHECK_THROWS_AS(sigma_pd(aircraft_jac, radar_jac, bad), std::domain_error);
}

TEST_CASE("error_budget: single sources and the RSS identity") {
  const EllipsoidRcs model(0.15, 0.13, 0.21);
  const AircraftState aircraft = sweep_aircraft(45.0);
  const RadarState radar{Vec3::Zero(), 167.0};
  const RowVec6 aircraft_jac = jacobian_aircraft(aircraft, radar, model, kPfa);
  const RowVec4 radar_jac = jacobian_radar(aircraft, radar, model, kPfa);

  const UncertaintyModel medium =
      UncertaintyModel::from_sigmas(10.0, kPi / 180.0, 100.0, 5.0);

  // One source active at a time: that contribution must equal the total.
  {
    UncertaintyModel only;
    only.aircraft_cov.topLeftCorner<3, 3>() = medium.aircraft_cov.topLeftCorner<3, 3>();
    const ErrorBudget b = error_budget(aircraft_jac, radar_jac, only);
    CHECK(b.aircraft_position == doctest::Approx(b.total).epsilon(1e-12));
    CHECK(b.aircraft_attitude == 0.0);
    CHECK(b.radar_position == 0.0);
    CHECK(b.radar_constant == 0.0);
  }
  {
    UncertaintyModel only;
    only.radar_cov(3, 3) = medium.radar_cov(3, 3);
    const ErrorBudget b = error_budget(aircraft_jac, radar_jac, only);
    CHECK(b.radar_constant == doctest::Approx(b.total).epsilon(1e-12));
  }

  const ErrorBudget budget = error_budget(aircraft_jac, radar_jac, medium);
  const double rss =
      std::sqrt(budget.aircraft_position * budget.aircraft_position +
                budget.aircraft_attitude * budget.aircraft_attitude +
                budget.radar_position * budget.radar_position +
                budget.radar_constant * budget.radar_constant);
  CHECK(std::abs(budget.total * budget.total - rss * rss) <= 1e-12 * budget.total * budget.total);

  // Random block-diagonal covariances keep the identity.
  std::mt19937 rng(71);
  std::uniform_real_distribution<double> draw(0.0, 4.0);
  for (int i = 0; i < 100; ++i) {
    const UncertaintyModel u =
        UncertaintyModel::from_sigmas(draw(rng), draw(rng), 10.0 * draw(rng), draw(rng));
    const ErrorBudget b = error_budget(aircraft_jac, radar_jac, u);
    const double sum_sq =
        b.aircraft_position * b.aircraft_position + b.aircraft_attitude * b.aircraft_attitude +
        b.radar_position * b.radar_position + b.radar_constant * b.radar_constant;
    CHECK(std::abs(b.total * b.total - sum_sq) <= 1e-12 * std::max(b.total * b.total, 1e-30));
  }
}

TEST_CASE("sigma_pd: sphere ellipsoid and matched constant model agree") {
  const double radius = 0.2;
  const EllipsoidRcs sphere(radius, radius, radius);
  const ConstantRcs constant(kPi * radius * radius);

  const AircraftState aircraft = sweep_aircraft(45.0);
  const RadarState radar{Vec3::Zero(), 167.0};
  const UncertaintyModel medium = UncertaintyModel::from_sigmas(10.0, kPi / 180.0, 100.0, 5.0);

  const PdSensitivity a = linearize(aircraft, radar, sphere, kPfa, medium);
  const PdSensitivity b = linearize(aircraft, radar, constant, kPfa, medium);
  CHECK(a.pd_nominal == doctest::Approx(b.pd_nominal).epsilon(1e-12));
  CHECK(a.sigma_pd == doctest::Approx(b.sigma_pd).epsilon(1e-12));
  CHECK((a.aircraft_jacobian - b.aircraft_jacobian).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((a.radar_jacobian - b.radar_jacobian).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("UncertaintyModel::from_sigmas: diagonal variances in state order") {
  const UncertaintyModel u = UncertaintyModel::from_sigmas(10.0, 0.5, 100.0, 5.0);
  for (int i = 0; i < 3; ++i) {
    CHECK(u.aircraft_cov(i, i) == 100.0);
    CHECK(u.aircraft_cov(3 + i, 3 + i) == 0.25);
    CHECK(u.radar_cov(i, i) == 10000.0);
  }
  CHECK(u.radar_cov(3, 3) == 25.0);
  CHECK(u.aircraft_cov.cwiseAbs().sum() ==
        doctest::Approx(u.aircraft_cov.diagonal().cwiseAbs().sum()));
}
