#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace radar_uq {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

/// xoshiro256++ seeded through splitmix64. Streams derived from
/// (seed, stream) are independent and reproducible, so Monte Carlo runs
/// stay deterministic under run-level parallelism.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t x = seed + stream * 0x9E3779B97F4A7C15ull;
    for (auto& word : state_) word = detail::splitmix64(x);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; the second value of each pair is cached.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Draws zero-mean Gaussian vectors with a fixed covariance. Diagonal
/// covariances scale per-coordinate standard normals; general PSD matrices
/// go through a symmetric eigendecomposition factor.
class GaussianVectorSampler {
 public:
  explicit GaussianVectorSampler(const Eigen::MatrixXd& covariance) {
    const auto n = covariance.rows();
    if (covariance.cols() != n) throw std::domain_error("covariance must be square");
    const double scale = std::max(1.0, covariance.cwiseAbs().maxCoeff());
    if ((covariance - covariance.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
      throw std::domain_error("covariance must be symmetric");

    const bool diagonal = (covariance - covariance.diagonal().asDiagonal().toDenseMatrix())
                              .cwiseAbs()
                              .maxCoeff() == 0.0;
    if (diagonal) {
      if (covariance.diagonal().minCoeff() < 0.0)
        throw std::domain_error("covariance is not positive semidefinite");
      factor_ = covariance.diagonal().cwiseSqrt().asDiagonal();
      return;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(covariance);
    if (eig.eigenvalues().minCoeff() < -1e-9 * scale)
      throw std::domain_error("covariance is not positive semidefinite");
    factor_ = eig.eigenvectors() *
              eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
  }

  Eigen::VectorXd sample(RngStream& rng) const {
    Eigen::VectorXd z(factor_.rows());
    for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = rng.gaussian();
    return factor_ * z;
  }

  const Eigen::MatrixXd& factor() const { return factor_; }

 private:
  Eigen::MatrixXd factor_;
};

}  // namespace radar_uq
