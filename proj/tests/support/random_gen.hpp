#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <random>

// Deterministic generators shared by property tests and oracles.
namespace testsupport {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Eigen::Vector3d random_vec(Rng& rng, double lo, double hi) {
  return {uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

inline Eigen::Vector3d random_unit(Rng& rng) {
  while (true) {
    Eigen::Vector3d v = random_vec(rng, -1.0, 1.0);
    double n = v.norm();
    if (n > 1e-3 && n <= 1.0) return v / n;
  }
}

// Magnitude in [lo, hi], sign chosen at random.
inline double signed_magnitude(Rng& rng, double lo, double hi) {
  double m = uniform(rng, lo, hi);
  return std::bernoulli_distribution(0.5)(rng) ? m : -m;
}

}  // namespace testsupport
