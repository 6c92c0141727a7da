#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "mateforge/assembly.hpp"
#include "mateforge/candidates.hpp"
#include "mateforge/tolerances.hpp"

namespace mateforge {

// Index into score arrays, fixed order for tie-breaking.
int mate_type_index(MateType t);
MateType mate_type_at(int index);

struct TypePrediction {
  std::string part_a;
  std::string part_b;
  MateType predicted = MateType::Fasten;
  // Nonnegative, sums to 1; `predicted` is the argmax with ties broken in
  // Fasten < Revolute < Slider < Cylindrical order.
  std::array<double, 4> score_per_type{};
};

struct AxisPrediction {
  std::string part_a;
  std::string part_b;
  AxisLine chosen;
  // Scores per shared axis, aligned with `axes`.
  std::vector<AxisLine> axes;
  std::vector<double> scores;
};

// Types the pair by swept-motion feasibility about `axis`:
// rotatable && slidable -> Cylindrical, rotatable -> Revolute,
// slidable -> Slider, neither -> Fasten. Scores put 0.01 on each
// non-predicted type.
TypePrediction predict_type_heuristic(const Assembly& assembly,
                                      const std::string& part_a,
                                      const std::string& part_b,
                                      const AxisLine& axis,
                                      const ToleranceConfig& tol);

// Modal type; ties broken by the fixed type order. Throws GeometryError on
// an empty label set.
MateType predict_majority(const std::vector<MateType>& corpus_labels);

// Scores each shared axis by the summed axial overlap of coincident
// cylindrical-feature pairs plus a contact-tolerance-weighted count of
// coincident planar face-center line pairs; argmax wins, ties broken by
// canonical axis order. Throws GeometryError when the pair shares no axis.
AxisPrediction score_axis_heuristic(const Assembly& assembly,
                                    const std::string& part_a,
                                    const std::string& part_b,
                                    const CandidateAxisSet& candidates,
                                    const ToleranceConfig& tol);

}  // namespace mateforge
