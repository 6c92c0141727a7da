#include "mateforge/ambiguity.hpp"

#include "mateforge/errors.hpp"

namespace mateforge {

bool axis_equivalent_for_type(MateType type, const AxisLine& mate_axis,
                              const AxisLine& candidate,
                              const ToleranceConfig& tol) {
  switch (type) {
    case MateType::Fasten:
      return true;  // no motion, any axis is valid
    case MateType::Slider:
      return directions_parallel(mate_axis, candidate, tol);
    case MateType::Revolute:
    case MateType::Cylindrical:
      return lines_coincident(mate_axis, candidate, tol);
  }
  return false;
}

AxisAmbiguity axis_ambiguity(const Assembly& assembly, const Mate& mate,
                             const CandidateAxisSet& candidates,
                             const ToleranceConfig& tol) {
  auto type = mate.mate_type();
  if (!type) {
    throw GeometryError("axis_ambiguity: mate '" + mate.id +
                        "' has unsupported type tag '" + mate.type_tag + "'");
  }
  std::vector<AxisLine> shared = shared_axes(
      assembly.part(mate.part_a), assembly.part(mate.part_b), candidates, tol);

  AxisAmbiguity result;
  result.mate_axis_in_shared = false;
  for (const AxisLine& axis : shared) {
    if (lines_coincident(axis, mate.axis, tol)) {
      result.mate_axis_in_shared = true;
    }
    if (axis_equivalent_for_type(*type, mate.axis, axis, tol)) {
      result.equivalent_axes.push_back(axis);
    } else {
      result.ambiguous = true;
    }
  }
  return result;
}

}  // namespace mateforge
