#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <optional>

#include "mateforge/axis.hpp"
#include "mateforge/tolerances.hpp"

namespace mateforge {

// Rigid motion as a unit quaternion plus a translation. The quaternion is
// re-normalized after every composition to keep drift out of long chains.
struct RigidTransform {
  Eigen::Quaterniond rotation{1.0, 0.0, 0.0, 0.0};
  Eigen::Vector3d translation{0.0, 0.0, 0.0};

  static RigidTransform identity() { return {}; }
  static RigidTransform translate(const Eigen::Vector3d& t);
  // Rotation by `angle` about the line through `point` along `unit_axis`.
  static RigidTransform rotate_about(const Eigen::Vector3d& unit_axis,
                                     double angle,
                                     const Eigen::Vector3d& point =
                                         Eigen::Vector3d::Zero());

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const {
    return rotation * p + translation;
  }
  Eigen::Vector3d rotate(const Eigen::Vector3d& v) const {
    return rotation * v;
  }
  RigidTransform inverse() const;

  bool is_identity(const ToleranceConfig& tol) const;
};

// Applies b first, then a.
RigidTransform compose_transforms(const RigidTransform& a,
                                  const RigidTransform& b);

// Chasles decomposition of a rigid motion into a rotation about a line plus
// a translation along it. When the rotation angle is below tol.angle_tol the
// axis is absent and `pitch_translation` carries the full translation.
// `rotation_direction` keeps the signed axis so the motion can be
// re-composed exactly; `axis` is the undirected canonical line.
struct ScrewDecomposition {
  double angle = 0.0;  // in [0, pi]
  std::optional<AxisLine> axis;
  Eigen::Vector3d rotation_direction{0.0, 0.0, 0.0};
  Eigen::Vector3d pitch_translation{0.0, 0.0, 0.0};
};

ScrewDecomposition screw_decompose(const RigidTransform& t,
                                   const ToleranceConfig& tol);

// Rebuilds the rigid motion described by a decomposition.
RigidTransform recompose_screw(const ScrewDecomposition& s);

}  // namespace mateforge
