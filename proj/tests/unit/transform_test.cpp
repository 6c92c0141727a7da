#include <doctest.h>

#include <Eigen/Dense>
#include <numbers>

#include "mateforge/transform.hpp"
#include "random_gen.hpp"

using namespace mateforge;
using testsupport::Rng;

namespace {

const ToleranceConfig kTol;

Eigen::Matrix4d as_matrix(const RigidTransform& t) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.topLeftCorner<3, 3>() = t.rotation.toRotationMatrix();
  m.topRightCorner<3, 1>() = t.translation;
  return m;
}

RigidTransform random_transform(Rng& rng) {
  RigidTransform t;
  t.rotation = Eigen::Quaterniond(Eigen::AngleAxisd(
      testsupport::uniform(rng, -std::numbers::pi, std::numbers::pi),
      testsupport::random_unit(rng)));
  t.translation = testsupport::random_vec(rng, -10.0, 10.0);
  return t;
}

}  // namespace

TEST_CASE("compose: identity and inverse") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    RigidTransform t = random_transform(rng);
    RigidTransform id = RigidTransform::identity();

    RigidTransform left = compose_transforms(id, t);
    CHECK(left.translation.isApprox(t.translation, 1e-12));
    CHECK(left.rotation.angularDistance(t.rotation) < 1e-12);

    RigidTransform round = compose_transforms(t, t.inverse());
    CHECK(round.is_identity(kTol));
    CHECK(round.translation.norm() < 1e-9);
    CHECK(2.0 * std::acos(std::clamp(std::abs(round.rotation.w()), 0.0, 1.0)) <
          1e-9);
  }
}

TEST_CASE("compose applies second argument first") {
  RigidTransform rot = RigidTransform::rotate_about(Eigen::Vector3d::UnitZ(),
                                                    std::numbers::pi / 2.0);
  RigidTransform slide = RigidTransform::translate({1.0, 0.0, 0.0});
  RigidTransform both = compose_transforms(rot, slide);
  Eigen::Vector3d image = both.apply(Eigen::Vector3d::Zero());
  CHECK(image.isApprox(Eigen::Vector3d(0.0, 1.0, 0.0), 1e-12));
}

TEST_CASE("compose agrees with the 4x4 matrix product") {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    RigidTransform a = random_transform(rng);
    RigidTransform b = random_transform(rng);
    Eigen::Matrix4d expected = as_matrix(a) * as_matrix(b);
    Eigen::Matrix4d actual = as_matrix(compose_transforms(a, b));
    CHECK((expected - actual).cwiseAbs().maxCoeff() < 1e-12);
  }
  // Associativity on a sample.
  RigidTransform a = random_transform(rng);
  RigidTransform b = random_transform(rng);
  RigidTransform c = random_transform(rng);
  Eigen::Matrix4d lhs =
      as_matrix(compose_transforms(compose_transforms(a, b), c));
  Eigen::Matrix4d rhs =
      as_matrix(compose_transforms(a, compose_transforms(b, c)));
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("screw_decompose: identity and pure rotation") {
  ScrewDecomposition id = screw_decompose(RigidTransform::identity(), kTol);
  CHECK(id.angle == doctest::Approx(0.0));
  CHECK(!id.axis.has_value());
  CHECK(id.pitch_translation.norm() == doctest::Approx(0.0));

  RigidTransform rot = RigidTransform::rotate_about(Eigen::Vector3d::UnitZ(),
                                                    std::numbers::pi / 6.0);
  ScrewDecomposition s = screw_decompose(rot, kTol);
  CHECK(s.angle == doctest::Approx(std::numbers::pi / 6.0).epsilon(1e-12));
  REQUIRE(s.axis.has_value());
  CHECK(s.axis->point.norm() < 1e-12);
  CHECK(s.axis->direction.isApprox(Eigen::Vector3d::UnitZ(), 1e-12));
  CHECK(s.pitch_translation.norm() < 1e-12);
}

TEST_CASE("screw_decompose: rotation composed with a general translation") {
  // rot 90 deg about z applied after translate (1,1,2). The in-plane fixed
  // point solves (I - R) c = t_perp; expected values frozen from the
  // least-squares solve below.
  RigidTransform rot = RigidTransform::rotate_about(Eigen::Vector3d::UnitZ(),
                                                    std::numbers::pi / 2.0);
  RigidTransform slide = RigidTransform::translate({1.0, 1.0, 2.0});
  RigidTransform t = compose_transforms(rot, slide);

  ScrewDecomposition s = screw_decompose(t, kTol);
  CHECK(s.angle == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-12));
  REQUIRE(s.axis.has_value());
  CHECK(s.axis->direction.isApprox(Eigen::Vector3d::UnitZ(), 1e-12));
  CHECK(s.pitch_translation.isApprox(Eigen::Vector3d(0.0, 0.0, 2.0), 1e-12));
  CHECK(s.axis->point.isApprox(Eigen::Vector3d(-1.0, 0.0, 0.0), 1e-9));

  // Independent route: least-squares fixed point, constrained to the plane.
  Eigen::Matrix3d r = t.rotation.toRotationMatrix();
  Eigen::Vector3d u = Eigen::Vector3d::UnitZ();
  Eigen::Vector3d axial = t.translation.dot(u) * u;
  Eigen::Vector3d perp = t.translation - axial;
  Eigen::Matrix3d lhs = Eigen::Matrix3d::Identity() - r;
  Eigen::Vector3d c = lhs.jacobiSvd(Eigen::ComputeFullU | Eigen::ComputeFullV)
                          .solve(perp);
  c -= c.dot(u) * u;
  CHECK(c.isApprox(s.axis->point, 1e-9));
  // And the fixed-point equation really holds.
  CHECK((lhs * c - perp).norm() < 1e-9);
}

TEST_CASE("screw recomposition reproduces the transform") {
  Rng rng(13);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    RigidTransform t = random_transform(rng);
    ScrewDecomposition s = screw_decompose(t, kTol);
    if (!s.axis) continue;
    checked += 1;
    RigidTransform rebuilt = recompose_screw(s);
    CHECK((as_matrix(rebuilt) - as_matrix(t)).cwiseAbs().maxCoeff() < 1e-6);
  }
  CHECK(checked > 900);  // almost every random draw rotates
}
