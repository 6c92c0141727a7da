#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace mateforge {

// Tolerances and sampling parameters shared across the geometric pipeline.
// Angles are radians, distances are model units (assumed millimeters).
//
// Contact and penetration tolerances are relative to a bounding-box diagonal
// by default so they survive unit and scale variation; absolute overrides are
// available for corpora with known units.
struct ToleranceConfig {
  double angle_tol = 1e-3;
  double dist_tol = 1e-3;

  double contact_tol_rel = 1e-3;
  std::optional<double> contact_tol_abs;

  double penetration_tol_rel = 1e-3;
  std::optional<double> penetration_tol_abs;

  // Swept-motion sampling: rotations in degrees, translations as fractions of
  // the bounding-box diagonal. Each magnitude is probed in both signs.
  std::vector<double> sweep_rotations_deg{5.0, 10.0, 20.0, 45.0};
  std::vector<double> sweep_translation_fracs{0.005, 0.01, 0.02, 0.05};

  // Geometric-consistency filter: when true, each mate axis must also
  // coincide with a shared candidate axis (contact alone when false).
  bool require_mate_axis_in_candidates = true;

  std::uint64_t seed = 0;

  double contact_tol(double bbox_diagonal) const {
    return contact_tol_abs ? *contact_tol_abs : contact_tol_rel * bbox_diagonal;
  }
  double penetration_tol(double bbox_diagonal) const {
    return penetration_tol_abs ? *penetration_tol_abs
                               : penetration_tol_rel * bbox_diagonal;
  }
};

}  // namespace mateforge
