#include "motion_oracle.hpp"

#include <cmath>
#include <numbers>

using mateforge::AxisLine;
using mateforge::MotionGroup;
using mateforge::RigidTransform;
using mateforge::ToleranceConfig;

namespace testsupport {

namespace {

double sample_angle(Rng& rng, const ToleranceConfig& tol) {
  while (true) {
    double angle = uniform(rng, -std::numbers::pi / 2.0, std::numbers::pi / 2.0);
    if (std::abs(angle) >= 10.0 * tol.angle_tol) return angle;
  }
}

double sample_slide(Rng& rng) { return signed_magnitude(rng, 0.1, 10.0); }

RigidTransform rotation_about_line(const AxisLine& axis, double angle) {
  return RigidTransform::rotate_about(axis.direction, angle, axis.point);
}

}  // namespace

RigidTransform sample_element(const MotionGroup& g, Rng& rng,
                              const ToleranceConfig& tol) {
  using Kind = MotionGroup::Kind;
  switch (g.kind()) {
    case Kind::Fixed:
      return RigidTransform::identity();
    case Kind::Rotation:
      return rotation_about_line(g.axis(), sample_angle(rng, tol));
    case Kind::Translation:
      return RigidTransform::translate(sample_slide(rng) * g.direction());
    case Kind::Cylindrical: {
      RigidTransform rot =
          rotation_about_line(g.axis(), sample_angle(rng, tol));
      RigidTransform slide = RigidTransform::translate(
          sample_slide(rng) * g.axis().direction);
      return compose_transforms(slide, rot);
    }
    case Kind::Complex:
      // Generic screw about a random line: enough to witness "anything".
      break;
  }
  AxisLine line = mateforge::canonicalize_line(random_vec(rng, -5.0, 5.0),
                                               random_unit(rng));
  RigidTransform rot = rotation_about_line(line, sample_angle(rng, tol));
  return compose_transforms(
      RigidTransform::translate(random_vec(rng, -5.0, 5.0)), rot);
}

bool group_contains(const MotionGroup& g, const RigidTransform& t,
                    const ToleranceConfig& tol) {
  using Kind = MotionGroup::Kind;
  mateforge::ScrewDecomposition s = mateforge::screw_decompose(t, tol);
  const bool rotates = s.axis.has_value();
  const double slide = s.pitch_translation.norm();

  switch (g.kind()) {
    case Kind::Complex:
      return true;
    case Kind::Fixed:
      return !rotates && slide <= tol.dist_tol;
    case Kind::Rotation:
      if (!rotates) return slide <= tol.dist_tol;
      return lines_coincident(*s.axis, g.axis(), tol) && slide <= tol.dist_tol;
    case Kind::Translation:
      if (rotates) return false;
      if (slide <= tol.dist_tol) return true;
      return directions_parallel(
          mateforge::canonical_direction(s.pitch_translation), g.direction(),
          tol);
    case Kind::Cylindrical:
      if (!rotates) {
        if (slide <= tol.dist_tol) return true;
        return directions_parallel(
            mateforge::canonical_direction(s.pitch_translation),
            g.axis().direction, tol);
      }
      return lines_coincident(*s.axis, g.axis(), tol);
  }
  return false;
}

MotionGroup oracle_compose(const MotionGroup& g1, const MotionGroup& g2,
                           Rng& rng, int samples, const ToleranceConfig& tol) {
  std::vector<RigidTransform> products;
  products.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    products.push_back(compose_transforms(sample_element(g1, rng, tol),
                                          sample_element(g2, rng, tol)));
  }
  return mateforge::classify_transform_samples(products, tol);
}

MotionGroup oracle_intersect(const MotionGroup& g1, const MotionGroup& g2,
                             Rng& rng, int samples,
                             const ToleranceConfig& tol) {
  using Kind = MotionGroup::Kind;
  // Everything belongs to Complex; sample the more structured side.
  const MotionGroup& source = g1.kind() == Kind::Complex ? g2 : g1;
  const MotionGroup& filter = g1.kind() == Kind::Complex ? g1 : g2;

  // Stratified element draws: the intersection may be a lower-DOF subgroup
  // (pure slides inside a cylindrical, say), which plain joint sampling
  // would miss.
  std::vector<RigidTransform> survivors;
  auto offer = [&](const RigidTransform& t) {
    if (group_contains(filter, t, tol)) survivors.push_back(t);
  };
  offer(RigidTransform::identity());
  for (int i = 0; i < samples; ++i) {
    switch (source.kind()) {
      case Kind::Fixed:
        offer(RigidTransform::identity());
        break;
      case Kind::Rotation:
      case Kind::Translation:
        offer(sample_element(source, rng, tol));
        break;
      case Kind::Cylindrical: {
        offer(rotation_about_line(source.axis(), sample_angle(rng, tol)));
        offer(RigidTransform::translate(sample_slide(rng) *
                                        source.axis().direction));
        offer(sample_element(source, rng, tol));
        break;
      }
      case Kind::Complex:
        offer(sample_element(source, rng, tol));
        break;
    }
  }
  while (survivors.size() < 8) survivors.push_back(RigidTransform::identity());
  return mateforge::classify_transform_samples(survivors, tol);
}

std::pair<MotionGroup, MotionGroup> random_group_pair(
    Rng& rng, const ToleranceConfig& tol) {
  auto random_line = [&] {
    return mateforge::canonicalize_line(random_vec(rng, -5.0, 5.0),
                                        random_unit(rng));
  };

  AxisLine first = random_line();

  // Relation of the second axis to the first.
  AxisLine second = first;
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0:  // same line
      second = first;
      break;
    case 1: {  // parallel, offset well beyond dist_tol
      Eigen::Vector3d perp = first.direction.unitOrthogonal();
      double offset = signed_magnitude(rng, 10.0 * tol.dist_tol, 8.0);
      second = mateforge::canonicalize_line(first.point + offset * perp,
                                            first.direction);
      break;
    }
    case 2: {  // intersecting at a clearly different angle
      Eigen::Vector3d perp = first.direction.unitOrthogonal();
      double angle = signed_magnitude(rng, 10.0 * tol.angle_tol,
                                      std::numbers::pi / 2.0);
      Eigen::Quaterniond q(Eigen::AngleAxisd(angle, perp));
      second = mateforge::canonicalize_line(first.point, q * first.direction);
      break;
    }
    default: {  // skew
      Eigen::Vector3d perp = first.direction.unitOrthogonal();
      double angle = signed_magnitude(rng, 10.0 * tol.angle_tol,
                                      std::numbers::pi / 2.0);
      double offset = signed_magnitude(rng, 10.0 * tol.dist_tol, 8.0);
      Eigen::Quaterniond q(Eigen::AngleAxisd(angle, perp));
      second = mateforge::canonicalize_line(first.point + offset * perp,
                                            q * first.direction);
      break;
    }
  }

  auto pick = [&](const AxisLine& line) {
    switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
      case 0: return MotionGroup::fixed();
      case 1: return MotionGroup::rotation(line);
      case 2: return MotionGroup::translation(line.direction);
      case 3: return MotionGroup::cylindrical(line);
      default: return MotionGroup::complex();
    }
  };
  return {pick(first), pick(second)};
}

}  // namespace testsupport
