#pragma once

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "mateforge/tolerances.hpp"

namespace mateforge {

// Canonical undirected 3D line. `point` is the foot of the perpendicular
// from the world origin onto the line; `direction` is unit length with the
// sign fixed so that the first component of magnitude > 1e-9 is positive.
// Two descriptions of the same geometric line canonicalize to the same
// representation, which makes lines comparable and hashable after
// quantization (see AxisKey).
struct AxisLine {
  Eigen::Vector3d point{0.0, 0.0, 0.0};
  Eigen::Vector3d direction{0.0, 0.0, 1.0};
};

// Builds the canonical form from any point on the line and any (nonzero)
// direction. Throws GeometryError on a near-zero direction.
AxisLine canonicalize_line(const Eigen::Vector3d& point,
                           const Eigen::Vector3d& direction);

// Unit vector with the sign convention above applied.
Eigen::Vector3d canonical_direction(const Eigen::Vector3d& direction);

// True when the (undirected) directions agree within tol.angle_tol.
bool directions_parallel(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                         const ToleranceConfig& tol);
bool directions_parallel(const AxisLine& a, const AxisLine& b,
                         const ToleranceConfig& tol);

// Symmetric perpendicular distance between two (near-parallel) lines:
// max of each canonical point's distance to the other line.
double line_line_distance(const AxisLine& a, const AxisLine& b);

// Same geometric line: parallel within angle_tol and within dist_tol
// perpendicular offset.
bool lines_coincident(const AxisLine& a, const AxisLine& b,
                      const ToleranceConfig& tol);

// Quantized canonical form for hashing and deterministic ordering.
// Point components are snapped to 1e-4 model units, direction components to
// 1e-6, so equality on keys is transitive.
struct AxisKey {
  std::array<std::int64_t, 6> v{};
  friend bool operator==(const AxisKey&, const AxisKey&) = default;
  friend auto operator<=>(const AxisKey&, const AxisKey&) = default;
};

AxisKey quantize(const AxisLine& line);

// Lexicographic order on the quantized (point, direction) fields.
bool axis_less(const AxisLine& a, const AxisLine& b);

// Sorts canonically and removes lines coincident with an earlier entry.
std::vector<AxisLine> dedup_axes(std::vector<AxisLine> axes,
                                 const ToleranceConfig& tol);

}  // namespace mateforge

template <>
struct std::hash<mateforge::AxisKey> {
  std::size_t operator()(const mateforge::AxisKey& k) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : k.v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};
