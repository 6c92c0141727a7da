#include "mateforge/sweep.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "mateforge/contact.hpp"
#include "mateforge/errors.hpp"

namespace mateforge {

namespace {

// Blocked when the (shrunk) moving mesh crosses the static surface or sits
// fully inside/outside-swallowing it at the sampled pose.
bool pose_blocked(const MeshBvh& static_bvh, const TriangleMesh& moving,
                  const RigidTransform& pose) {
  TriangleMesh posed = transformed(moving, pose);
  MeshBvh moving_bvh(posed);
  if (static_bvh.intersects(moving_bvh)) return true;

  // No surface crossing: each mesh is entirely on one side of the other.
  // Spot-check with the sample vertex farthest from the other surface so a
  // touching vertex can't flip the parity test.
  auto contained = [](const MeshBvh& outer, const TriangleMesh& inner) {
    std::size_t stride = std::max<std::size_t>(1, inner.vertices.size() / 8);
    double best = -1.0;
    Eigen::Vector3d probe = Eigen::Vector3d::Zero();
    for (std::size_t i = 0; i < inner.vertices.size(); i += stride) {
      double d = outer.point_distance(inner.vertices[i]);
      if (d > best) {
        best = d;
        probe = inner.vertices[i];
      }
    }
    if (best <= 1e-9) return false;  // glued surfaces, not containment
    return outer.contains_point(probe);
  };
  if (contained(static_bvh, posed)) return true;

  TriangleMesh static_copy;
  static_copy.triangles.reserve(static_bvh.triangle_count());
  for (std::size_t i = 0; i < static_bvh.triangle_count(); ++i) {
    const auto& tri = static_bvh.triangle(i);
    int base = static_cast<int>(static_copy.vertices.size());
    static_copy.vertices.insert(static_copy.vertices.end(), tri.begin(),
                                tri.end());
    static_copy.triangles.push_back({base, base + 1, base + 2});
  }
  return contained(moving_bvh, static_copy);
}

}  // namespace

FeasibilityLabel sweep_feasibility(const Part& a, const Part& b,
                                   const AxisLine& axis,
                                   const ToleranceConfig& tol) {
  if (a.mesh.empty() || b.mesh.empty()) {
    throw GeometryError("sweep_feasibility: empty mesh");
  }

  TriangleMesh static_mesh = a.world_mesh();
  TriangleMesh moving_mesh = b.world_mesh();

  Aabb box = static_mesh.bounding_box();
  box.expand(moving_mesh.bounding_box());
  const double diagonal = box.diagonal();
  const double penetration = tol.penetration_tol(diagonal);

  MeshBvh static_bvh(static_mesh);
  TriangleMesh probe_mesh = shrunk(moving_mesh, penetration);

  FeasibilityLabel label;
  label.part_a = a.id;
  label.part_b = b.id;
  label.axis = axis;

  label.rotatable = true;
  for (double deg : tol.sweep_rotations_deg) {
    for (double sign : {1.0, -1.0}) {
      double angle = sign * deg * std::numbers::pi / 180.0;
      RigidTransform pose =
          RigidTransform::rotate_about(axis.direction, angle, axis.point);
      if (pose_blocked(static_bvh, probe_mesh, pose)) {
        label.rotatable = false;
        break;
      }
    }
    if (!label.rotatable) break;
  }

  label.slidable = true;
  for (double frac : tol.sweep_translation_fracs) {
    for (double sign : {1.0, -1.0}) {
      RigidTransform pose =
          RigidTransform::translate(sign * frac * diagonal * axis.direction);
      if (pose_blocked(static_bvh, probe_mesh, pose)) {
        label.slidable = false;
        break;
      }
    }
    if (!label.slidable) break;
  }

  return label;
}

}  // namespace mateforge
