#include "mateforge/fixtures.hpp"

#include <cmath>
#include <numbers>

#include "mateforge/errors.hpp"
#include "mateforge/primitives.hpp"

namespace mateforge::fixtures {

namespace {

constexpr int kSegments = 64;

double param(const Params& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

AxisLine z_line(double x, double y) {
  return canonicalize_line({x, y, 0.0}, {0.0, 0.0, 1.0});
}

AxisLine x_line(double y, double z) {
  return canonicalize_line({0.0, y, z}, {1.0, 0.0, 0.0});
}

std::vector<Feature> box_faces(const Eigen::Vector3d& center,
                               const Eigen::Vector3d& half) {
  std::vector<Feature> faces;
  for (int axis = 0; axis < 3; ++axis) {
    for (double sign : {-1.0, 1.0}) {
      PlanarFace face;
      face.normal = Eigen::Vector3d::Zero();
      face.normal[axis] = sign;
      face.centroid = center + sign * half[axis] * face.normal;
      faces.emplace_back(face);
    }
  }
  return faces;
}

CylindricalFace cylinder_feature(const AxisLine& axis, double radius,
                                 double lo, double hi) {
  CylindricalFace f;
  f.axis = axis;
  f.radius = radius;
  f.extent = {lo, hi};
  return f;
}

PlanarFace cap_feature(const Eigen::Vector3d& centroid,
                       const Eigen::Vector3d& normal) {
  PlanarFace f;
  f.centroid = centroid;
  f.normal = normal;
  return f;
}

TriangleMesh rotated_z_to_x(TriangleMesh mesh) {
  RigidTransform rot = RigidTransform::rotate_about(
      Eigen::Vector3d::UnitY(), std::numbers::pi / 2.0);
  return transformed(mesh, rot);
}

Assembly base(const std::string& name, std::uint64_t seed) {
  Assembly a;
  a.id = name;
  a.metadata["fixture"] = name;
  a.metadata["seed"] = std::to_string(seed);
  return a;
}

// Shaft turning and sliding freely in a through hole; radial clearance keeps
// the pair within contact tolerance while every sampled motion stays free.
Assembly shaft_hole(const Params& params, std::uint64_t seed) {
  const double radius = param(params, "radius", 5.0);
  const double clearance = param(params, "clearance", 0.035);

  Assembly a = base("shaft_hole", seed);

  Part shaft;
  shaft.id = "shaft";
  shaft.mesh = make_cylinder(radius, -20.0, 20.0, kSegments);
  shaft.features = {cylinder_feature(z_line(0, 0), radius, -20.0, 20.0),
                    cap_feature({0, 0, -20.0}, {0, 0, -1.0}),
                    cap_feature({0, 0, 20.0}, {0, 0, 1.0})};

  Part hub;
  hub.id = "hub";
  hub.mesh = make_tube(radius + clearance, 2.0 * radius, -10.0, 10.0, kSegments);
  hub.features = {
      cylinder_feature(z_line(0, 0), radius + clearance, -10.0, 10.0),
      cylinder_feature(z_line(0, 0), 2.0 * radius, -10.0, 10.0),
      cap_feature({0, 0, -10.0}, {0, 0, -1.0}),
      cap_feature({0, 0, 10.0}, {0, 0, 1.0})};

  a.parts = {shaft, hub};
  a.mates = {Mate::make("m_shaft_hub", "shaft", "hub", MateType::Cylindrical,
                        z_line(0, 0))};
  return a;
}

// Pin with end flanges in a hub: free to turn, blocked axially.
Assembly hinge_flanged(const Params& params, std::uint64_t seed) {
  const double radius = param(params, "radius", 4.0);
  const double clearance = param(params, "clearance", 0.03);
  const double flange_radius = 7.0;
  const double hub_half = 10.0;
  const double axial_gap = 0.5;

  Assembly a = base("hinge_flanged", seed);

  const double pin_half = hub_half + axial_gap;  // flange inner faces
  Part pin;
  pin.id = "pin";
  pin.mesh = make_cylinder(radius, -pin_half, pin_half, kSegments);
  append_mesh(pin.mesh,
              make_cylinder(flange_radius, -pin_half - 2.0, -pin_half, kSegments));
  append_mesh(pin.mesh,
              make_cylinder(flange_radius, pin_half, pin_half + 2.0, kSegments));
  pin.features = {
      cylinder_feature(z_line(0, 0), radius, -pin_half, pin_half),
      cylinder_feature(z_line(0, 0), flange_radius, pin_half, pin_half + 2.0),
      cylinder_feature(z_line(0, 0), flange_radius, -pin_half - 2.0, -pin_half),
      cap_feature({0, 0, -pin_half - 2.0}, {0, 0, -1.0}),
      cap_feature({0, 0, pin_half + 2.0}, {0, 0, 1.0})};

  Part hub;
  hub.id = "hub";
  hub.mesh = make_tube(radius + clearance, 9.0, -hub_half, hub_half, kSegments);
  hub.features = {
      cylinder_feature(z_line(0, 0), radius + clearance, -hub_half, hub_half),
      cylinder_feature(z_line(0, 0), 9.0, -hub_half, hub_half),
      cap_feature({0, 0, -hub_half}, {0, 0, -1.0}),
      cap_feature({0, 0, hub_half}, {0, 0, 1.0})};

  a.parts = {pin, hub};
  a.mates = {
      Mate::make("m_pin_hub", "pin", "hub", MateType::Revolute, z_line(0, 0))};
  return a;
}

// Square shaft in a square sleeve: slides freely, cannot rotate.
Assembly keyed_slider(const Params& params, std::uint64_t seed) {
  const double half = param(params, "half_width", 4.0);
  const double clearance = param(params, "clearance", 0.03);

  Assembly a = base("keyed_slider", seed);

  Part shaft;
  shaft.id = "shaft";
  shaft.mesh = make_box({0, 0, 0}, {half, half, 20.0});
  shaft.features = box_faces({0, 0, 0}, {half, half, 20.0});

  Part sleeve;
  sleeve.id = "sleeve";
  sleeve.mesh = make_box_with_square_hole(1.5 * half, half + clearance, -8.0, 8.0);
  sleeve.features = box_faces({0, 0, 0}, {1.5 * half, 1.5 * half, 8.0});
  // Hole walls and end annulus faces.
  for (double sign : {-1.0, 1.0}) {
    sleeve.features.push_back(
        cap_feature({sign * (half + clearance), 0, 0}, {sign, 0, 0}));
    sleeve.features.push_back(
        cap_feature({0, sign * (half + clearance), 0}, {0, sign, 0}));
    sleeve.features.push_back(cap_feature({0, 0, sign * 8.0}, {0, 0, sign}));
  }

  a.parts = {shaft, sleeve};
  a.mates = {Mate::make("m_shaft_sleeve", "shaft", "sleeve", MateType::Slider,
                        z_line(0, 0))};
  return a;
}

// Block fully enclosed in a matching cavity; no sampled motion is free.
// All-fasten, so the moving-part filter rejects it.
Assembly press_fit(const Params& params, std::uint64_t seed) {
  const double block_half = param(params, "block_half", 5.0);
  const double fit_gap = param(params, "fit_gap", 0.005);

  Assembly a = base("press_fit", seed);

  Part shell;
  shell.id = "shell";
  shell.mesh = make_box({0, 0, 0}, Eigen::Vector3d::Constant(2.0 * block_half));
  append_mesh(shell.mesh, make_box({0, 0, 0}, Eigen::Vector3d::Constant(
                                                  block_half + fit_gap)));
  shell.features = box_faces({0, 0, 0},
                             Eigen::Vector3d::Constant(2.0 * block_half));
  auto cavity = box_faces({0, 0, 0},
                          Eigen::Vector3d::Constant(block_half + fit_gap));
  shell.features.insert(shell.features.end(), cavity.begin(), cavity.end());

  Part block;
  block.id = "block";
  block.mesh = make_box({0, 0, 0}, Eigen::Vector3d::Constant(block_half));
  block.features = box_faces({0, 0, 0}, Eigen::Vector3d::Constant(block_half));

  a.parts = {shell, block};
  a.mates = {Mate::make("m_block_shell", "block", "shell", MateType::Fasten,
                        z_line(0, 0))};
  return a;
}

// Tube on two coaxial brackets, mated to only one of them: densification
// must add the second revolute.
Assembly telescope(const Params& params, std::uint64_t seed) {
  const double radius = param(params, "radius", 3.0);
  const double clearance = param(params, "clearance", 0.03);

  Assembly a = base("telescope", seed);

  Part tube;
  tube.id = "tube";
  tube.mesh = make_cylinder(radius, -20.0, 20.0, kSegments);
  tube.features = {cylinder_feature(z_line(0, 0), radius, -20.0, 20.0),
                   cap_feature({0, 0, -20.0}, {0, 0, -1.0}),
                   cap_feature({0, 0, 20.0}, {0, 0, 1.0})};
  tube.placement = RigidTransform::rotate_about(Eigen::Vector3d::UnitY(),
                                                std::numbers::pi / 2.0);

  auto bracket = [&](const std::string& id, double hub_lo, double hub_hi,
                     double foot_lo, double foot_hi) {
    Part p;
    p.id = id;
    TriangleMesh hub = rotated_z_to_x(
        make_tube(radius + clearance, 6.0, hub_lo, hub_hi, kSegments));
    p.mesh = hub;
    Eigen::Vector3d foot_center((foot_lo + foot_hi) / 2.0, -8.0, 0.0);
    Eigen::Vector3d foot_half((foot_hi - foot_lo) / 2.0, 2.0, 3.0);
    append_mesh(p.mesh, make_box(foot_center, foot_half));
    p.features = {
        cylinder_feature(x_line(0, 0), radius + clearance, hub_lo, hub_hi),
        cylinder_feature(x_line(0, 0), 6.0, hub_lo, hub_hi)};
    auto foot_faces = box_faces(foot_center, foot_half);
    p.features.insert(p.features.end(), foot_faces.begin(), foot_faces.end());
    return p;
  };

  a.parts = {tube, bracket("bracket_left", -12.0, -8.0, -12.0, 0.0),
             bracket("bracket_right", 8.0, 12.0, 0.0, 12.0)};
  a.mates = {Mate::make("m_tube_left", "tube", "bracket_left",
                        MateType::Revolute, x_line(0, 0)),
             Mate::make("m_brackets", "bracket_left", "bracket_right",
                        MateType::Fasten, x_line(0, 0))};
  return a;
}

// Revolute mate across a visible gap: geometric consistency must reject.
Assembly floating_pair(const Params& params, std::uint64_t seed) {
  const double gap = param(params, "gap", 1.5);

  Assembly a = base("floating_pair", seed);

  Part shaft;
  shaft.id = "shaft";
  shaft.mesh = make_cylinder(3.0, -15.0, 15.0, kSegments);
  shaft.features = {cylinder_feature(z_line(0, 0), 3.0, -15.0, 15.0)};

  Part ring;
  ring.id = "ring";
  ring.mesh = make_tube(3.0 + gap, 8.0, -5.0, 5.0, kSegments);
  ring.features = {cylinder_feature(z_line(0, 0), 3.0 + gap, -5.0, 5.0)};

  a.parts = {shaft, ring};
  a.mates = {Mate::make("m_float", "shaft", "ring", MateType::Revolute,
                        z_line(0, 0))};
  return a;
}

// Two mates between one pair: the compound filter rejects before geometry.
Assembly compound_pair(const Params&, std::uint64_t seed) {
  Assembly a = base("compound_pair", seed);

  Part lower;
  lower.id = "lower";
  lower.mesh = make_box({0, 0, 5.0}, {5.0, 5.0, 5.0});
  lower.features = box_faces({0, 0, 5.0}, {5.0, 5.0, 5.0});

  Part upper;
  upper.id = "upper";
  upper.mesh = make_box({0, 0, 15.0}, {5.0, 5.0, 5.0});
  upper.features = box_faces({0, 0, 15.0}, {5.0, 5.0, 5.0});

  a.parts = {lower, upper};
  a.mates = {Mate::make("m_rev", "lower", "upper", MateType::Revolute,
                        z_line(0, 0)),
             Mate::make("m_sli", "lower", "upper", MateType::Slider,
                        z_line(0, 0))};
  return a;
}

// A mated pair plus a stray part: connectivity must reject.
Assembly disconnected(const Params&, std::uint64_t seed) {
  Assembly a = base("disconnected", seed);

  Part lower;
  lower.id = "lower";
  lower.mesh = make_box({0, 0, 5.0}, {5.0, 5.0, 5.0});
  lower.features = box_faces({0, 0, 5.0}, {5.0, 5.0, 5.0});

  Part upper;
  upper.id = "upper";
  upper.mesh = make_box({0, 0, 15.0}, {5.0, 5.0, 5.0});
  upper.features = box_faces({0, 0, 15.0}, {5.0, 5.0, 5.0});

  Part stray;
  stray.id = "stray";
  stray.mesh = make_box({100.0, 0, 5.0}, {5.0, 5.0, 5.0});
  stray.features = box_faces({100.0, 0, 5.0}, {5.0, 5.0, 5.0});

  a.parts = {lower, upper, stray};
  a.mates = {Mate::make("m_rev", "lower", "upper", MateType::Revolute,
                        z_line(0, 0))};
  return a;
}

// Carries a "planar" mate tag: the type whitelist rejects the assembly.
Assembly planar_tagged(const Params&, std::uint64_t seed) {
  Assembly a = base("planar_tagged", seed);

  for (int i = 0; i < 3; ++i) {
    Part p;
    p.id = "slab_" + std::to_string(i);
    Eigen::Vector3d center(0, 0, 5.0 + 10.0 * i);
    p.mesh = make_box(center, {5.0, 5.0, 5.0});
    p.features = box_faces(center, {5.0, 5.0, 5.0});
    a.parts.push_back(p);
  }

  a.mates = {Mate::make("m_rev", "slab_0", "slab_1", MateType::Revolute,
                        z_line(0, 0))};
  Mate planar;
  planar.id = "m_planar";
  planar.part_a = "slab_1";
  planar.part_b = "slab_2";
  planar.type_tag = "planar";
  planar.axis = z_line(0, 0);
  a.mates.push_back(planar);
  return a;
}

// Three-part loop whose closing pair touches on a shared axis but derives a
// non-simple motion (two revolutes about skew axes): densify must reject.
Assembly skew_loop(const Params&, std::uint64_t seed) {
  Assembly a = base("skew_loop", seed);

  Part deck;
  deck.id = "deck";
  deck.mesh = make_box({0, 0, 2.0}, {10.0, 5.0, 2.0});
  deck.features = box_faces({0, 0, 2.0}, {10.0, 5.0, 2.0});
  deck.features.push_back(cylinder_feature(z_line(-5.0, 0), 1.0, 0.0, 4.0));
  deck.features.push_back(cylinder_feature(z_line(3.0, 0), 1.0, 0.0, 4.0));

  Part post;
  post.id = "post";
  post.mesh = make_box({-5.0, 0, 6.0}, {4.0, 4.0, 2.0});
  post.features = box_faces({-5.0, 0, 6.0}, {4.0, 4.0, 2.0});
  post.features.push_back(cylinder_feature(x_line(1.0, 6.0), 0.8, -9.0, -1.0));

  Part arm;
  arm.id = "arm";
  arm.mesh = make_box({3.0, 0, 8.0}, {4.0, 4.0, 4.0});
  arm.features = box_faces({3.0, 0, 8.0}, {4.0, 4.0, 4.0});
  arm.features.push_back(cylinder_feature(x_line(1.0, 6.0), 0.8, -1.0, 7.0));

  a.parts = {deck, post, arm};
  a.mates = {Mate::make("m_deck_post", "deck", "post", MateType::Revolute,
                        z_line(-5.0, 0)),
             Mate::make("m_post_arm", "post", "arm", MateType::Revolute,
                        x_line(1.0, 6.0))};
  return a;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "telescope",    "hinge_flanged", "shaft_hole",   "keyed_slider",
      "press_fit",    "floating_pair", "compound_pair", "disconnected",
      "planar_tagged", "skew_loop"};
  return names;
}

Assembly generate_fixture(const std::string& name, const Params& params,
                          std::uint64_t seed) {
  Assembly a;
  if (name == "telescope") {
    a = telescope(params, seed);
  } else if (name == "hinge_flanged") {
    a = hinge_flanged(params, seed);
  } else if (name == "shaft_hole") {
    a = shaft_hole(params, seed);
  } else if (name == "keyed_slider") {
    a = keyed_slider(params, seed);
  } else if (name == "press_fit") {
    a = press_fit(params, seed);
  } else if (name == "floating_pair") {
    a = floating_pair(params, seed);
  } else if (name == "compound_pair") {
    a = compound_pair(params, seed);
  } else if (name == "disconnected") {
    a = disconnected(params, seed);
  } else if (name == "planar_tagged") {
    a = planar_tagged(params, seed);
  } else if (name == "skew_loop") {
    a = skew_loop(params, seed);
  } else {
    throw GeometryError("unknown fixture '" + name + "'");
  }
  a.validate();
  return a;
}

}  // namespace mateforge::fixtures
