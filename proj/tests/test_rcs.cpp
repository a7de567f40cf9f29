#include "radar_uq/rcs.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "support/oracles.hpp"

using namespace radar_uq;
using test_support::rel_err;

namespace {

constexpr double kPi = std::numbers::pi;

RcsAngles random_angles(std::mt19937& rng) {
  std::uniform_real_distribution<double> az(-kPi, kPi);
  std::uniform_real_distribution<double> el(-1.4, 1.4);
  return {az(rng), el(rng)};
}

}  // namespace

TEST_CASE("EllipsoidRcs: sphere reduces to pi r^2") {
  const EllipsoidRcs sphere(0.4, 0.4, 0.4);
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    const RcsAngles ang = random_angles(rng);
    CHECK(std::abs(sphere.sigma(ang) - kPi * 0.16) <= 1e-12);
  }
}

TEST_CASE("EllipsoidRcs: closed forms on the reference axes") {
  const EllipsoidRcs model(0.15, 0.13, 0.21);

  // Nose-on: pi a^2 b^2 / c^2.
  const double nose = model.sigma({0.0, 0.37});
  CHECK(nose == doctest::Approx(kPi * 0.15 * 0.15 * 0.13 * 0.13 / (0.21 * 0.21)).epsilon(1e-13));
  CHECK(nose == doctest::Approx(0.027088222370238529).epsilon(1e-12));
  // Elevation drops out at azimuth 0 (the inner expression keeps only c cos(az)).
  CHECK(model.sigma({0.0, 0.0}) == doctest::Approx(nose).epsilon(1e-13));

  // Broadside at zero elevation: pi b^2 c^2 / a^2.
  CHECK(model.sigma({kPi / 2.0, 0.0}) ==
        doctest::Approx(0.1040621150575083).epsilon(1e-12));
}

TEST_CASE("EllipsoidRcs: azimuth parity and mirror invariance") {
  const EllipsoidRcs model(0.15, 0.13, 0.21);
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    const RcsAngles ang = random_angles(rng);
    CHECK(std::abs(model.sigma(ang) - model.sigma({-ang.azimuth, ang.elevation})) <= 1e-12);
    CHECK(std::abs(model.sigma(ang) - model.sigma({kPi - ang.azimuth, ang.elevation})) <= 1e-12);
  }
}

TEST_CASE("EllipsoidRcs: elevation symmetry when a equals b") {
  const EllipsoidRcs model(0.18, 0.18, 0.25);
  std::mt19937 rng(8);
  for (int i = 0; i < 500; ++i) {
    const RcsAngles ang = random_angles(rng);
    CHECK(std::abs(model.sigma(ang) - model.sigma({ang.azimuth, -ang.elevation})) <= 1e-12);
  }
}

TEST_CASE("EllipsoidRcs: gradient vanishes on stationary axes and spheres") {
  const EllipsoidRcs model(0.15, 0.13, 0.21);
  CHECK(model.grad({0.0, 0.3}).d_azimuth == 0.0);
  CHECK(model.grad({kPi / 2.0, 0.0}).d_azimuth == doctest::Approx(0.0).epsilon(1e-15));

  const EllipsoidRcs sphere(0.3, 0.3, 0.3);
  std::mt19937 rng(9);
  for (int i = 0; i < 100; ++i) {
    const RcsGradient g = sphere.grad(random_angles(rng));
    CHECK(std::abs(g.d_azimuth) <= 1e-15);
    CHECK(std::abs(g.d_elevation) <= 1e-15);
  }
}

TEST_CASE("RcsModel: gradients match finite differences of sigma") {
  std::vector<std::shared_ptr<const RcsModel>> models = {
      std::make_shared<EllipsoidRcs>(0.15, 0.13, 0.21),
      std::make_shared<EllipsoidRcs>(1.7, 0.4, 0.9),
      std::make_shared<ConstantRcs>(2.5),
  };
  std::mt19937 rng(12);
  for (const auto& model : models) {
    for (int i = 0; i < 300; ++i) {
      const RcsAngles ang = random_angles(rng);
      const RcsGradient analytic = model->grad(ang);
      const double fd_az = test_support::central_diff(
          [&](double v) { return model->sigma({v, ang.elevation}); }, ang.azimuth);
      const double fd_el = test_support::central_diff(
          [&](double v) { return model->sigma({ang.azimuth, v}); }, ang.elevation);
      CHECK(rel_err(analytic.d_azimuth, fd_az) <= 1e-7);
      CHECK(rel_err(analytic.d_elevation, fd_el) <= 1e-7);
    }
  }
}

TEST_CASE("EllipsoidRcs: positive and bounded on the reference axes") {
  const EllipsoidRcs model(0.15, 0.13, 0.21);
  for (double az = -kPi; az <= kPi; az += 0.05) {
    for (double el = -1.5; el <= 1.5; el += 0.05) {
      const double sigma = model.sigma({az, el});
      CHECK(sigma > 0.0);
      CHECK(sigma < 1e6);
    }
  }
}

TEST_CASE("ConstantRcs: fixed value, zero gradient") {
  const ConstantRcs model(1.0);
  CHECK(model.sigma({0.3, -0.8}) == 1.0);
  CHECK(model.sigma({-2.9, 1.2}) == 1.0);
  CHECK(model.grad({0.5, 0.5}).d_azimuth == 0.0);
  CHECK(model.grad({0.5, 0.5}).d_elevation == 0.0);
}

TEST_CASE("RCS models: constructor validation") {
  CHECK_THROWS_AS(EllipsoidRcs(0.0, 0.1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(EllipsoidRcs(0.1, -0.1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(EllipsoidRcs(0.1, 0.1, std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(ConstantRcs(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ConstantRcs(-2.0), std::invalid_argument);
}
