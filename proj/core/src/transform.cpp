#include "mateforge/transform.hpp"

#include <cmath>

namespace mateforge {

RigidTransform RigidTransform::translate(const Eigen::Vector3d& t) {
  RigidTransform r;
  r.translation = t;
  return r;
}

RigidTransform RigidTransform::rotate_about(const Eigen::Vector3d& unit_axis,
                                            double angle,
                                            const Eigen::Vector3d& point) {
  RigidTransform r;
  r.rotation = Eigen::Quaterniond(Eigen::AngleAxisd(angle, unit_axis));
  // x -> R (x - p) + p
  r.translation = point - r.rotation * point;
  return r;
}

RigidTransform RigidTransform::inverse() const {
  RigidTransform r;
  r.rotation = rotation.conjugate();
  r.translation = -(r.rotation * translation);
  return r;
}

bool RigidTransform::is_identity(const ToleranceConfig& tol) const {
  double w = std::clamp(std::abs(rotation.w()), 0.0, 1.0);
  double angle = 2.0 * std::acos(w);
  return angle <= tol.angle_tol && translation.norm() <= tol.dist_tol;
}

RigidTransform compose_transforms(const RigidTransform& a,
                                  const RigidTransform& b) {
  RigidTransform r;
  r.rotation = (a.rotation * b.rotation).normalized();
  r.translation = a.rotation * b.translation + a.translation;
  return r;
}

ScrewDecomposition screw_decompose(const RigidTransform& t,
                                   const ToleranceConfig& tol) {
  ScrewDecomposition s;

  // Normalize the double cover so the angle lands in [0, pi].
  Eigen::Quaterniond q = t.rotation.normalized();
  if (q.w() < 0.0) q.coeffs() = -q.coeffs();

  double vec_norm = q.vec().norm();
  s.angle = 2.0 * std::atan2(vec_norm, q.w());

  if (s.angle <= tol.angle_tol) {
    s.pitch_translation = t.translation;
    return s;
  }

  Eigen::Vector3d u = q.vec() / vec_norm;
  s.rotation_direction = u;

  Eigen::Vector3d axial = t.translation.dot(u) * u;
  Eigen::Vector3d perp = t.translation - axial;
  s.pitch_translation = axial;

  // Fixed point of the in-plane motion: (I - R) c = perp, c orthogonal to u.
  double half = 0.5 * s.angle;
  Eigen::Vector3d c =
      0.5 * perp + 0.5 * (std::cos(half) / std::sin(half)) * u.cross(perp);
  s.axis = canonicalize_line(c, u);
  return s;
}

RigidTransform recompose_screw(const ScrewDecomposition& s) {
  if (!s.axis) {
    return RigidTransform::translate(s.pitch_translation);
  }
  // Rotation about the line, then the axial translation.
  RigidTransform rot = RigidTransform::rotate_about(s.rotation_direction,
                                                    s.angle, s.axis->point);
  RigidTransform slide = RigidTransform::translate(s.pitch_translation);
  return compose_transforms(slide, rot);
}

}  // namespace mateforge
