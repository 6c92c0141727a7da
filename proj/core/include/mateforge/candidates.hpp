#pragma once

#include <map>
#include <string>
#include <vector>

#include "mateforge/assembly.hpp"
#include "mateforge/axis.hpp"
#include "mateforge/tolerances.hpp"

namespace mateforge {

// Per-part candidate mate axes in the world frame, deduplicated and in
// canonical order.
struct CandidateAxisSet {
  std::map<std::string, std::vector<AxisLine>> per_part;

  const std::vector<AxisLine>* find(const std::string& part_id) const {
    auto it = per_part.find(part_id);
    return it == per_part.end() ? nullptr : &it->second;
  }
};

// World-frame candidate lines of one part: one line per cylindrical face
// (its axis) and one per planar face (through the face centroid along its
// normal), deduplicated by coincidence.
std::vector<AxisLine> extract_axes(const Part& part, const ToleranceConfig& tol);

CandidateAxisSet extract_candidates(const Assembly& assembly,
                                    const ToleranceConfig& tol);

// Candidate lines of `a` that coincide with a candidate line of `b`;
// canonical, deduplicated, deterministically ordered.
std::vector<AxisLine> shared_axes(const Part& a, const Part& b,
                                  const CandidateAxisSet& candidates,
                                  const ToleranceConfig& tol);

// World-frame cylindrical features with their extent re-parameterized along
// the canonical world axis. Used by the axis scorer.
struct WorldCylinder {
  AxisLine axis;
  double radius = 0.0;
  std::array<double, 2> extent{0.0, 0.0};
};

std::vector<WorldCylinder> world_cylinders(const Part& part);
std::vector<AxisLine> world_planar_lines(const Part& part);

}  // namespace mateforge
