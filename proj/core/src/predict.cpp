#include "mateforge/predict.hpp"

#include <algorithm>

#include "mateforge/errors.hpp"
#include "mateforge/sweep.hpp"

namespace mateforge {

int mate_type_index(MateType t) {
  switch (t) {
    case MateType::Fasten: return 0;
    case MateType::Revolute: return 1;
    case MateType::Slider: return 2;
    case MateType::Cylindrical: return 3;
  }
  return 0;
}

MateType mate_type_at(int index) { return kMateTypes.at(index); }

TypePrediction predict_type_heuristic(const Assembly& assembly,
                                      const std::string& part_a,
                                      const std::string& part_b,
                                      const AxisLine& axis,
                                      const ToleranceConfig& tol) {
  FeasibilityLabel label = sweep_feasibility(assembly.part(part_a),
                                             assembly.part(part_b), axis, tol);
  MateType predicted;
  if (label.rotatable && label.slidable) {
    predicted = MateType::Cylindrical;
  } else if (label.rotatable) {
    predicted = MateType::Revolute;
  } else if (label.slidable) {
    predicted = MateType::Slider;
  } else {
    predicted = MateType::Fasten;
  }

  TypePrediction prediction;
  prediction.part_a = part_a;
  prediction.part_b = part_b;
  prediction.predicted = predicted;
  prediction.score_per_type.fill(0.01);
  prediction.score_per_type[mate_type_index(predicted)] = 0.97;
  return prediction;
}

MateType predict_majority(const std::vector<MateType>& corpus_labels) {
  if (corpus_labels.empty()) {
    throw GeometryError("predict_majority: empty label set");
  }
  std::array<std::size_t, 4> counts{};
  for (MateType t : corpus_labels) counts[mate_type_index(t)] += 1;
  int best = 0;
  for (int i = 1; i < 4; ++i) {
    if (counts[i] > counts[best]) best = i;  // ties keep the earlier type
  }
  return mate_type_at(best);
}

AxisPrediction score_axis_heuristic(const Assembly& assembly,
                                    const std::string& part_a,
                                    const std::string& part_b,
                                    const CandidateAxisSet& candidates,
                                    const ToleranceConfig& tol) {
  const Part& pa = assembly.part(part_a);
  const Part& pb = assembly.part(part_b);
  std::vector<AxisLine> shared = shared_axes(pa, pb, candidates, tol);
  if (shared.empty()) {
    throw GeometryError("score_axis_heuristic: pair (" + part_a + ", " +
                        part_b + ") shares no candidate axis");
  }

  const double contact_tol = tol.contact_tol(assembly.bounding_box().diagonal());
  std::vector<WorldCylinder> cyl_a = world_cylinders(pa);
  std::vector<WorldCylinder> cyl_b = world_cylinders(pb);
  std::vector<AxisLine> plane_a = world_planar_lines(pa);
  std::vector<AxisLine> plane_b = world_planar_lines(pb);

  AxisPrediction prediction;
  prediction.part_a = part_a;
  prediction.part_b = part_b;
  prediction.axes = shared;
  prediction.scores.resize(shared.size(), 0.0);

  for (std::size_t i = 0; i < shared.size(); ++i) {
    const AxisLine& axis = shared[i];
    double score = 0.0;
    for (const WorldCylinder& ca : cyl_a) {
      if (!lines_coincident(ca.axis, axis, tol)) continue;
      for (const WorldCylinder& cb : cyl_b) {
        if (!lines_coincident(cb.axis, axis, tol)) continue;
        // Both extents re-projected onto the shared axis parameterization.
        auto project = [&](const WorldCylinder& wc) {
          double t0 = (wc.axis.point - axis.point).dot(axis.direction) +
                      wc.extent[0] * wc.axis.direction.dot(axis.direction);
          double t1 = (wc.axis.point - axis.point).dot(axis.direction) +
                      wc.extent[1] * wc.axis.direction.dot(axis.direction);
          return std::pair(std::min(t0, t1), std::max(t0, t1));
        };
        auto [a0, a1] = project(ca);
        auto [b0, b1] = project(cb);
        score += std::max(0.0, std::min(a1, b1) - std::max(a0, b0));
      }
    }
    std::size_t plane_pairs = 0;
    for (const AxisLine& la : plane_a) {
      if (!lines_coincident(la, axis, tol)) continue;
      for (const AxisLine& lb : plane_b) {
        if (lines_coincident(lb, axis, tol)) plane_pairs += 1;
      }
    }
    score += contact_tol * static_cast<double>(plane_pairs);
    prediction.scores[i] = score;
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < shared.size(); ++i) {
    if (prediction.scores[i] > prediction.scores[best]) best = i;
  }
  prediction.chosen = shared[best];  // shared is in canonical order
  return prediction;
}

}  // namespace mateforge
