#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mateforge/assembly.hpp"
#include "mateforge/axis.hpp"
#include "mateforge/tolerances.hpp"
#include "mateforge/transform.hpp"

namespace mateforge {

// The set of relative rigid motions a joint permits. Closed algebra over
// five variants: Fixed (identity only), Rotation about a line, Translation
// along a direction, Cylindrical (rotation + translation about one line),
// and Complex (anything that is not one of the simple groups).
class MotionGroup {
 public:
  enum class Kind { Fixed, Rotation, Translation, Cylindrical, Complex };

  static MotionGroup fixed() { return MotionGroup(Kind::Fixed); }
  static MotionGroup rotation(const AxisLine& axis) {
    MotionGroup g(Kind::Rotation);
    g.axis_ = axis;
    return g;
  }
  static MotionGroup translation(const Eigen::Vector3d& direction);
  static MotionGroup cylindrical(const AxisLine& axis) {
    MotionGroup g(Kind::Cylindrical);
    g.axis_ = axis;
    return g;
  }
  static MotionGroup complex() { return MotionGroup(Kind::Complex); }

  Kind kind() const { return kind_; }
  bool has_axis() const {
    return kind_ == Kind::Rotation || kind_ == Kind::Cylindrical;
  }
  // Valid for Rotation and Cylindrical.
  const AxisLine& axis() const { return axis_; }
  // Valid for Translation (sign-canonicalized unit vector).
  const Eigen::Vector3d& direction() const { return direction_; }

 private:
  explicit MotionGroup(Kind kind) : kind_(kind) {}

  Kind kind_;
  AxisLine axis_;
  Eigen::Vector3d direction_{0.0, 0.0, 1.0};
};

std::string to_string(MotionGroup::Kind kind);

// Kind equality plus geometric equality of the axis/direction parameters.
bool same_group(const MotionGroup& a, const MotionGroup& b,
                const ToleranceConfig& tol);

// Fasten -> Fixed, Revolute -> Rotation, Slider -> Translation (offset
// discarded), Cylindrical -> Cylindrical. Throws GeometryError for mates
// whose tag is outside the four supported types.
MotionGroup mate_to_group(const Mate& m);

// Inverse of mate_to_group; empty for Complex.
std::optional<MateType> group_to_mate_type(const MotionGroup& g);

// Smallest variant containing all products of an element of g1 with an
// element of g2. Symmetric up to geometric equality of the result; the
// result adopts g1's axis parameters when both carry one.
MotionGroup compose(const MotionGroup& g1, const MotionGroup& g2,
                    const ToleranceConfig& tol);

// Largest listed variant contained in both groups.
MotionGroup intersect(const MotionGroup& g1, const MotionGroup& g2,
                      const ToleranceConfig& tol);

// Relative motion of part_b w.r.t. part_a allowed by the existing mates:
// composes groups along the BFS-shortest mate path (lexicographic mate-id
// tie-break), then intersects with the composition along one detour walk per
// fundamental-cycle chord. Throws DisconnectedError when no path exists.
MotionGroup relative_motion(const Assembly& assembly,
                            const std::string& part_a,
                            const std::string& part_b,
                            const ToleranceConfig& tol);

// Classifies a set of sampled relative transforms into the motion group that
// contains them all. Requires at least 8 samples (GeometryError otherwise).
MotionGroup classify_transform_samples(
    const std::vector<RigidTransform>& samples, const ToleranceConfig& tol);

}  // namespace mateforge
