#include <doctest.h>

#include <numbers>

#include "mateforge/errors.hpp"
#include "mateforge/motion.hpp"
#include "motion_oracle.hpp"
#include "random_gen.hpp"

using namespace mateforge;
using testsupport::Rng;

namespace {

const ToleranceConfig kTol;

AxisLine z_at(double x, double y) {
  return canonicalize_line({x, y, 0.0}, {0.0, 0.0, 1.0});
}

Mate mate_of(MateType type, const AxisLine& axis) {
  return Mate::make("m", "a", "b", type, axis);
}

}  // namespace

TEST_CASE("mate_to_group maps the four types") {
  CHECK(mate_to_group(mate_of(MateType::Fasten, z_at(3, 4))).kind() ==
        MotionGroup::Kind::Fixed);

  MotionGroup rot = mate_to_group(mate_of(MateType::Revolute, z_at(0, 0)));
  CHECK(rot.kind() == MotionGroup::Kind::Rotation);
  CHECK(lines_coincident(rot.axis(), z_at(0, 0), kTol));

  // Slider through an offset point: only the direction survives.
  AxisLine off_x = canonicalize_line({1.0, 2.0, 3.0}, {1.0, 0.0, 0.0});
  MotionGroup sli = mate_to_group(mate_of(MateType::Slider, off_x));
  CHECK(sli.kind() == MotionGroup::Kind::Translation);
  CHECK(sli.direction().isApprox(Eigen::Vector3d::UnitX(), 1e-12));

  MotionGroup cyl = mate_to_group(mate_of(MateType::Cylindrical, z_at(1, 0)));
  CHECK(cyl.kind() == MotionGroup::Kind::Cylindrical);

  Mate planar = mate_of(MateType::Fasten, z_at(0, 0));
  planar.type_tag = "planar";
  CHECK_THROWS_AS(mate_to_group(planar), GeometryError);
}

TEST_CASE("group_to_mate_type inverts the simple variants") {
  CHECK(group_to_mate_type(MotionGroup::fixed()) == MateType::Fasten);
  CHECK(group_to_mate_type(MotionGroup::rotation(z_at(0, 0))) ==
        MateType::Revolute);
  CHECK(group_to_mate_type(MotionGroup::translation({0, 0, 1})) ==
        MateType::Slider);
  CHECK(group_to_mate_type(MotionGroup::cylindrical(z_at(0, 0))) ==
        MateType::Cylindrical);
  CHECK(!group_to_mate_type(MotionGroup::complex()).has_value());

  for (MateType type : kMateTypes) {
    Mate m = mate_of(type, z_at(0, 0));
    CHECK(group_to_mate_type(mate_to_group(m)) == type);
  }
}

TEST_CASE("compose table on fixed axes") {
  MotionGroup rot0 = MotionGroup::rotation(z_at(0, 0));
  MotionGroup rot1 = MotionGroup::rotation(z_at(1, 0));
  MotionGroup tz = MotionGroup::translation({0, 0, 1});
  MotionGroup tx = MotionGroup::translation({1, 0, 0});

  CHECK(same_group(compose(MotionGroup::fixed(), rot0, kTol), rot0, kTol));
  CHECK(compose(MotionGroup::complex(), rot0, kTol).kind() ==
        MotionGroup::Kind::Complex);

  MotionGroup cyl = compose(rot0, tz, kTol);
  CHECK(cyl.kind() == MotionGroup::Kind::Cylindrical);
  CHECK(lines_coincident(cyl.axis(), z_at(0, 0), kTol));

  CHECK(compose(rot0, tx, kTol).kind() == MotionGroup::Kind::Complex);
  CHECK(compose(rot0, rot1, kTol).kind() == MotionGroup::Kind::Complex);
  CHECK(same_group(compose(rot0, rot0, kTol), rot0, kTol));
  CHECK(same_group(compose(tz, tz, kTol), tz, kTol));
  CHECK(compose(tz, tx, kTol).kind() == MotionGroup::Kind::Complex);

  MotionGroup cyl0 = MotionGroup::cylindrical(z_at(0, 0));
  CHECK(same_group(compose(cyl0, rot0, kTol), cyl0, kTol));
  CHECK(same_group(compose(cyl0, tz, kTol), cyl0, kTol));
  CHECK(same_group(compose(cyl0, cyl0, kTol), cyl0, kTol));
  CHECK(compose(cyl0, MotionGroup::cylindrical(z_at(1, 0)), kTol).kind() ==
        MotionGroup::Kind::Complex);
  CHECK(compose(cyl0, tx, kTol).kind() == MotionGroup::Kind::Complex);
}

TEST_CASE("intersect table on fixed axes") {
  MotionGroup rot0 = MotionGroup::rotation(z_at(0, 0));
  MotionGroup tz = MotionGroup::translation({0, 0, 1});
  MotionGroup cyl0 = MotionGroup::cylindrical(z_at(0, 0));
  MotionGroup cyl1 = MotionGroup::cylindrical(z_at(1, 0));

  CHECK(same_group(intersect(MotionGroup::complex(), rot0, kTol), rot0, kTol));
  CHECK(intersect(MotionGroup::fixed(), rot0, kTol).kind() ==
        MotionGroup::Kind::Fixed);
  CHECK(intersect(rot0, tz, kTol).kind() == MotionGroup::Kind::Fixed);

  // Parallel-offset cylindricals share exactly the axial translations.
  MotionGroup shared = intersect(cyl0, cyl1, kTol);
  CHECK(shared.kind() == MotionGroup::Kind::Translation);
  CHECK(shared.direction().isApprox(Eigen::Vector3d::UnitZ(), 1e-12));

  CHECK(same_group(intersect(cyl0, rot0, kTol), rot0, kTol));
  CHECK(same_group(intersect(cyl0, tz, kTol), tz, kTol));
  CHECK(intersect(rot0, MotionGroup::rotation(z_at(2, 0)), kTol).kind() ==
        MotionGroup::Kind::Fixed);
  CHECK(intersect(cyl0, MotionGroup::translation({1, 0, 0}), kTol).kind() ==
        MotionGroup::Kind::Fixed);
  CHECK(intersect(cyl0, MotionGroup::cylindrical(
                            canonicalize_line({0, 0, 0}, {1, 0, 0})),
                  kTol)
            .kind() == MotionGroup::Kind::Fixed);
}

TEST_CASE("compose and intersect laws over randomized pairs") {
  Rng rng(31);
  for (int i = 0; i < 2000; ++i) {
    auto [g1, g2] = testsupport::random_group_pair(rng, kTol);

    // Symmetry up to geometric equality.
    CHECK(same_group(compose(g1, g2, kTol), compose(g2, g1, kTol), kTol));
    CHECK(same_group(intersect(g1, g2, kTol), intersect(g2, g1, kTol), kTol));

    // Fixed is the compose identity and intersect bottom; Complex dual.
    CHECK(same_group(compose(MotionGroup::fixed(), g1, kTol), g1, kTol));
    CHECK(same_group(intersect(MotionGroup::complex(), g1, kTol), g1, kTol));
    CHECK(compose(MotionGroup::complex(), g1, kTol).kind() ==
          MotionGroup::Kind::Complex);
    CHECK(intersect(MotionGroup::fixed(), g1, kTol).kind() ==
          MotionGroup::Kind::Fixed);

    // Idempotence.
    CHECK(same_group(compose(g1, g1, kTol), g1, kTol));
    CHECK(same_group(intersect(g1, g1, kTol), g1, kTol));
  }
}

TEST_CASE("compose agrees with the transform-sampling oracle") {
  Rng rng(32);
  for (int i = 0; i < 1000; ++i) {
    auto [g1, g2] = testsupport::random_group_pair(rng, kTol);
    MotionGroup expected = compose(g1, g2, kTol);
    MotionGroup sampled = testsupport::oracle_compose(g1, g2, rng, 50, kTol);
    CHECK(same_group(expected, sampled, kTol));
  }
}

TEST_CASE("intersect agrees with the membership-sampling oracle") {
  Rng rng(33);
  for (int i = 0; i < 1000; ++i) {
    auto [g1, g2] = testsupport::random_group_pair(rng, kTol);
    MotionGroup expected = intersect(g1, g2, kTol);
    MotionGroup sampled = testsupport::oracle_intersect(g1, g2, rng, 40, kTol);
    CHECK(same_group(expected, sampled, kTol));
  }
}

TEST_CASE("classify_transform_samples on constructed sets") {
  CHECK_THROWS_AS(classify_transform_samples(
                      std::vector<RigidTransform>(4), kTol),
                  GeometryError);

  std::vector<RigidTransform> identities(10);
  CHECK(classify_transform_samples(identities, kTol).kind() ==
        MotionGroup::Kind::Fixed);

  Rng rng(34);
  std::vector<RigidTransform> rotations;
  for (int i = 0; i < 12; ++i) {
    rotations.push_back(RigidTransform::rotate_about(
        Eigen::Vector3d::UnitZ(), testsupport::uniform(rng, 0.1, 1.4)));
  }
  MotionGroup rot = classify_transform_samples(rotations, kTol);
  CHECK(rot.kind() == MotionGroup::Kind::Rotation);
  CHECK(lines_coincident(rot.axis(), z_at(0, 0), kTol));

  std::vector<RigidTransform> screws;
  for (int i = 0; i < 12; ++i) {
    RigidTransform r = RigidTransform::rotate_about(
        Eigen::Vector3d::UnitZ(), testsupport::uniform(rng, 0.1, 1.4));
    RigidTransform t = RigidTransform::translate(
        {0.0, 0.0, testsupport::signed_magnitude(rng, 0.2, 3.0)});
    screws.push_back(compose_transforms(t, r));
  }
  MotionGroup cyl = classify_transform_samples(screws, kTol);
  CHECK(cyl.kind() == MotionGroup::Kind::Cylindrical);
  CHECK(lines_coincident(cyl.axis(), z_at(0, 0), kTol));
  // Round trip: every sample belongs to the classified group.
  for (const auto& s : screws) {
    CHECK(testsupport::group_contains(cyl, s, kTol));
  }
}

namespace {

Assembly chain_assembly() {
  // Parts a - c - b with explicit mates; meshes are irrelevant for the mate
  // graph, so give every part a tiny box.
  Assembly assembly;
  assembly.id = "chain";
  for (const char* id : {"a", "b", "c"}) {
    Part p;
    p.id = id;
    p.mesh.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    p.mesh.triangles = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    assembly.parts.push_back(p);
  }
  return assembly;
}

}  // namespace

TEST_CASE("relative_motion composes along chains") {
  Assembly a = chain_assembly();
  a.mates = {Mate::make("m1", "a", "b", MateType::Fasten, z_at(0, 0))};
  CHECK(relative_motion(a, "a", "b", kTol).kind() == MotionGroup::Kind::Fixed);

  a.mates = {Mate::make("m1", "a", "c", MateType::Fasten, z_at(0, 0)),
             Mate::make("m2", "c", "b", MateType::Revolute, z_at(0, 0))};
  MotionGroup rot = relative_motion(a, "a", "b", kTol);
  CHECK(rot.kind() == MotionGroup::Kind::Rotation);
  CHECK(lines_coincident(rot.axis(), z_at(0, 0), kTol));

  a.mates = {Mate::make("m1", "a", "c", MateType::Revolute, z_at(0, 0)),
             Mate::make("m2", "c", "b", MateType::Revolute, z_at(1, 0))};
  CHECK(relative_motion(a, "a", "b", kTol).kind() ==
        MotionGroup::Kind::Complex);

  // Symmetric in the endpoints.
  MotionGroup ab = relative_motion(a, "a", "c", kTol);
  MotionGroup ba = relative_motion(a, "c", "a", kTol);
  CHECK(same_group(ab, ba, kTol));

  a.mates = {Mate::make("m1", "a", "c", MateType::Fasten, z_at(0, 0))};
  CHECK_THROWS_AS(relative_motion(a, "a", "b", kTol), DisconnectedError);
}

TEST_CASE("relative_motion intersects cycle detours") {
  // Direct revolute a-b, plus a second path a-c-b whose revolute is offset:
  // the cycle pins the pair down to Fixed.
  Assembly a = chain_assembly();
  a.mates = {Mate::make("m1", "a", "b", MateType::Revolute, z_at(0, 0)),
             Mate::make("m2", "a", "c", MateType::Fasten, z_at(0, 0)),
             Mate::make("m3", "c", "b", MateType::Revolute, z_at(1, 0))};
  CHECK(relative_motion(a, "a", "b", kTol).kind() == MotionGroup::Kind::Fixed);

  // Coincident axes across the cycle stay a rotation.
  a.mates = {Mate::make("m1", "a", "b", MateType::Revolute, z_at(0, 0)),
             Mate::make("m2", "a", "c", MateType::Fasten, z_at(0, 0)),
             Mate::make("m3", "c", "b", MateType::Revolute, z_at(0, 0))};
  MotionGroup rot = relative_motion(a, "a", "b", kTol);
  CHECK(rot.kind() == MotionGroup::Kind::Rotation);
  CHECK(lines_coincident(rot.axis(), z_at(0, 0), kTol));
}
