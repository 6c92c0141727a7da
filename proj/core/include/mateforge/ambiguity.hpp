#pragma once

#include <vector>

#include "mateforge/assembly.hpp"
#include "mateforge/candidates.hpp"

namespace mateforge {

// Which of the pair's shared candidate axes are equally valid for a mate.
// For fastens every axis is valid; for sliders every axis with the mate's
// direction; for revolutes and cylindricals only coincident lines.
bool axis_equivalent_for_type(MateType type, const AxisLine& mate_axis,
                              const AxisLine& candidate,
                              const ToleranceConfig& tol);

struct AxisAmbiguity {
  std::vector<AxisLine> equivalent_axes;
  bool ambiguous = false;           // some shared axis is NOT equivalent
  bool mate_axis_in_shared = true;  // reported, not fatal, when false
};

AxisAmbiguity axis_ambiguity(const Assembly& assembly, const Mate& mate,
                             const CandidateAxisSet& candidates,
                             const ToleranceConfig& tol);

}  // namespace mateforge
