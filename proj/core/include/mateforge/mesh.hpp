#pragma once

#include <Eigen/Core>

#include <array>
#include <vector>

#include "mateforge/transform.hpp"

namespace mateforge {

struct Aabb {
  Eigen::Vector3d min{0.0, 0.0, 0.0};
  Eigen::Vector3d max{0.0, 0.0, 0.0};

  void expand(const Eigen::Vector3d& p) {
    min = min.cwiseMin(p);
    max = max.cwiseMax(p);
  }
  void expand(const Aabb& o) {
    min = min.cwiseMin(o.min);
    max = max.cwiseMax(o.max);
  }
  Eigen::Vector3d center() const { return 0.5 * (min + max); }
  double diagonal() const { return (max - min).norm(); }
  // Squared distance between two boxes, 0 when overlapping.
  double squared_distance(const Aabb& o) const {
    double d2 = 0.0;
    for (int i = 0; i < 3; ++i) {
      double gap = std::max({0.0, o.min[i] - max[i], min[i] - o.max[i]});
      d2 += gap * gap;
    }
    return d2;
  }
};

// Plain indexed triangle soup. Vertices are in the owning part's local frame;
// world coordinates come from the part placement.
struct TriangleMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 3>> triangles;

  bool empty() const { return triangles.empty(); }

  // Checks index ranges, finiteness, and that no triangle is degenerate
  // (area <= 1e-12). Throws SchemaError; `path` prefixes error locations.
  void validate(const std::string& path = "mesh") const;

  Aabb bounding_box() const;
};

TriangleMesh transformed(const TriangleMesh& mesh, const RigidTransform& t);

// Pulls every vertex toward the vertex centroid so the largest displacement
// is `amount`. Used to apply a penetration allowance to swept poses.
TriangleMesh shrunk(const TriangleMesh& mesh, double amount);

}  // namespace mateforge
