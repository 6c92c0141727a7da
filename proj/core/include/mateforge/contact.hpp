#pragma once

#include <Eigen/Core>

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "mateforge/assembly.hpp"
#include "mateforge/mesh.hpp"

namespace mateforge {

struct ContactReport {
  std::string part_a;
  std::string part_b;
  double min_distance = 0.0;
  bool in_contact = false;
};

// Triangle primitives (world-space points).
double point_segment_distance(const Eigen::Vector3d& p,
                              const Eigen::Vector3d& a,
                              const Eigen::Vector3d& b);
double point_triangle_distance(const Eigen::Vector3d& p,
                               const std::array<Eigen::Vector3d, 3>& tri);
double segment_segment_distance(const Eigen::Vector3d& p1,
                                const Eigen::Vector3d& q1,
                                const Eigen::Vector3d& p2,
                                const Eigen::Vector3d& q2);
bool triangles_intersect(const std::array<Eigen::Vector3d, 3>& a,
                         const std::array<Eigen::Vector3d, 3>& b);
// 0 when the triangles intersect, else the closest-approach distance.
double triangle_distance(const std::array<Eigen::Vector3d, 3>& a,
                         const std::array<Eigen::Vector3d, 3>& b);

// Axis-aligned BVH over a triangle mesh in a fixed pose. Rebuilt per pose;
// no incremental update.
class MeshBvh {
 public:
  explicit MeshBvh(const TriangleMesh& world_mesh);

  const Aabb& bounds() const;
  std::size_t triangle_count() const;
  const std::array<Eigen::Vector3d, 3>& triangle(std::size_t i) const;

  // Minimum distance between the two triangle sets (0 when intersecting).
  double distance_to(const MeshBvh& other) const;
  bool intersects(const MeshBvh& other) const;
  double point_distance(const Eigen::Vector3d& p) const;

  // Ray-parity containment for watertight meshes. The query direction is
  // re-seeded deterministically when a ray grazes an edge or vertex.
  bool contains_point(const Eigen::Vector3d& p) const;

  ~MeshBvh();
  MeshBvh(MeshBvh&&) noexcept;
  MeshBvh& operator=(MeshBvh&&) noexcept;
  MeshBvh(const MeshBvh&) = delete;
  MeshBvh& operator=(const MeshBvh&) = delete;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Minimum Euclidean distance between the placed meshes of two parts.
// Throws GeometryError on an empty mesh.
ContactReport min_distance(const Part& a, const Part& b, double contact_tol);

}  // namespace mateforge
