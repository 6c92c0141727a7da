#pragma once

#include <string>

#include "mateforge/assembly.hpp"
#include "mateforge/axis.hpp"
#include "mateforge/tolerances.hpp"

namespace mateforge {

struct FeasibilityLabel {
  std::string part_a;
  std::string part_b;
  AxisLine axis;
  bool rotatable = false;
  bool slidable = false;
};

// Samples rotations of part b about `axis` and translations along it (both
// signs, magnitudes from the config) and reports which motions stay free of
// penetration into part a. The moving mesh is shrunk by the penetration
// tolerance so grazing contact does not count as blockage; a pose is blocked
// on any triangle-triangle intersection or full containment.
FeasibilityLabel sweep_feasibility(const Part& a, const Part& b,
                                   const AxisLine& axis,
                                   const ToleranceConfig& tol);

}  // namespace mateforge
