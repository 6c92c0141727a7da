#include "mateforge/axis.hpp"

#include <algorithm>
#include <cmath>

#include "mateforge/errors.hpp"

namespace mateforge {

namespace {

constexpr double kSignEps = 1e-9;
constexpr double kPointStep = 1e-4;
constexpr double kDirectionStep = 1e-6;

}  // namespace

Eigen::Vector3d canonical_direction(const Eigen::Vector3d& direction) {
  double norm = direction.norm();
  if (norm <= kSignEps) {
    throw GeometryError("canonical_direction: near-zero direction");
  }
  Eigen::Vector3d d = direction / norm;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(d[i]) > kSignEps) {
      if (d[i] < 0.0) d = -d;
      break;
    }
  }
  return d;
}

AxisLine canonicalize_line(const Eigen::Vector3d& point,
                           const Eigen::Vector3d& direction) {
  AxisLine line;
  line.direction = canonical_direction(direction);
  line.point = point - point.dot(line.direction) * line.direction;
  return line;
}

bool directions_parallel(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                         const ToleranceConfig& tol) {
  double c = std::clamp(std::abs(a.dot(b)), 0.0, 1.0);
  return std::acos(c) <= tol.angle_tol;
}

bool directions_parallel(const AxisLine& a, const AxisLine& b,
                         const ToleranceConfig& tol) {
  return directions_parallel(a.direction, b.direction, tol);
}

double line_line_distance(const AxisLine& a, const AxisLine& b) {
  auto point_to_line = [](const Eigen::Vector3d& p, const AxisLine& l) {
    return (p - l.point).cross(l.direction).norm();
  };
  return std::max(point_to_line(b.point, a), point_to_line(a.point, b));
}

bool lines_coincident(const AxisLine& a, const AxisLine& b,
                      const ToleranceConfig& tol) {
  return directions_parallel(a, b, tol) &&
         line_line_distance(a, b) <= tol.dist_tol;
}

AxisKey quantize(const AxisLine& line) {
  AxisKey key;
  for (int i = 0; i < 3; ++i) {
    key.v[i] = std::llround(line.point[i] / kPointStep);
    key.v[3 + i] = std::llround(line.direction[i] / kDirectionStep);
  }
  return key;
}

bool axis_less(const AxisLine& a, const AxisLine& b) {
  return quantize(a) < quantize(b);
}

std::vector<AxisLine> dedup_axes(std::vector<AxisLine> axes,
                                 const ToleranceConfig& tol) {
  std::sort(axes.begin(), axes.end(), axis_less);
  std::vector<AxisLine> unique;
  unique.reserve(axes.size());
  for (const AxisLine& axis : axes) {
    bool duplicate = false;
    for (const AxisLine& kept : unique) {
      if (lines_coincident(axis, kept, tol)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) unique.push_back(axis);
  }
  return unique;
}

}  // namespace mateforge
