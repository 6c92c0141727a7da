#include "mateforge/candidates.hpp"

#include <algorithm>

namespace mateforge {

namespace {

AxisLine world_line(const RigidTransform& placement, const AxisLine& local) {
  return canonicalize_line(placement.apply(local.point),
                           placement.rotate(local.direction));
}

}  // namespace

std::vector<WorldCylinder> world_cylinders(const Part& part) {
  std::vector<WorldCylinder> out;
  for (const Feature& f : part.features) {
    const auto* cyl = std::get_if<CylindricalFace>(&f);
    if (!cyl) continue;
    WorldCylinder wc;
    wc.axis = world_line(part.placement, cyl->axis);
    wc.radius = cyl->radius;
    // Re-parameterize the extent endpoints along the canonical world axis.
    Eigen::Vector3d p0 = part.placement.apply(
        cyl->axis.point + cyl->extent[0] * cyl->axis.direction);
    Eigen::Vector3d p1 = part.placement.apply(
        cyl->axis.point + cyl->extent[1] * cyl->axis.direction);
    double t0 = (p0 - wc.axis.point).dot(wc.axis.direction);
    double t1 = (p1 - wc.axis.point).dot(wc.axis.direction);
    wc.extent = {std::min(t0, t1), std::max(t0, t1)};
    out.push_back(wc);
  }
  return out;
}

std::vector<AxisLine> world_planar_lines(const Part& part) {
  std::vector<AxisLine> out;
  for (const Feature& f : part.features) {
    const auto* plane = std::get_if<PlanarFace>(&f);
    if (!plane) continue;
    out.push_back(canonicalize_line(part.placement.apply(plane->centroid),
                                    part.placement.rotate(plane->normal)));
  }
  return out;
}

std::vector<AxisLine> extract_axes(const Part& part,
                                   const ToleranceConfig& tol) {
  std::vector<AxisLine> axes;
  for (const WorldCylinder& wc : world_cylinders(part)) axes.push_back(wc.axis);
  for (const AxisLine& line : world_planar_lines(part)) axes.push_back(line);
  return dedup_axes(std::move(axes), tol);
}

CandidateAxisSet extract_candidates(const Assembly& assembly,
                                    const ToleranceConfig& tol) {
  CandidateAxisSet set;
  for (const Part& p : assembly.parts) {
    set.per_part[p.id] = extract_axes(p, tol);
  }
  return set;
}

std::vector<AxisLine> shared_axes(const Part& a, const Part& b,
                                  const CandidateAxisSet& candidates,
                                  const ToleranceConfig& tol) {
  const auto* axes_a = candidates.find(a.id);
  const auto* axes_b = candidates.find(b.id);
  if (!axes_a || !axes_b) return {};
  std::vector<AxisLine> shared;
  for (const AxisLine& la : *axes_a) {
    for (const AxisLine& lb : *axes_b) {
      if (lines_coincident(la, lb, tol)) {
        shared.push_back(la);
        break;
      }
    }
  }
  return dedup_axes(std::move(shared), tol);
}

}  // namespace mateforge
