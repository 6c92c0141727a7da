#include "mateforge/mesh.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mateforge/errors.hpp"

namespace mateforge {

void TriangleMesh::validate(const std::string& path) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!vertices[i].allFinite()) {
      throw NonFiniteError(path + "/vertices/" + std::to_string(i),
                           "non-finite vertex coordinate");
    }
  }
  const int n = static_cast<int>(vertices.size());
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const auto& tri = triangles[i];
    for (int k = 0; k < 3; ++k) {
      if (tri[k] < 0 || tri[k] >= n) {
        throw SchemaError(path + "/triangles/" + std::to_string(i),
                          "vertex index out of range");
      }
    }
    const Eigen::Vector3d& a = vertices[tri[0]];
    const Eigen::Vector3d& b = vertices[tri[1]];
    const Eigen::Vector3d& c = vertices[tri[2]];
    double area = 0.5 * (b - a).cross(c - a).norm();
    if (!(area > 1e-12)) {
      throw SchemaError(path + "/triangles/" + std::to_string(i),
                        "degenerate triangle (area <= 1e-12)");
    }
  }
}

Aabb TriangleMesh::bounding_box() const {
  Aabb box;
  if (vertices.empty()) return box;
  box.min = box.max = vertices.front();
  for (const auto& v : vertices) box.expand(v);
  return box;
}

TriangleMesh transformed(const TriangleMesh& mesh, const RigidTransform& t) {
  TriangleMesh out;
  out.vertices.reserve(mesh.vertices.size());
  for (const auto& v : mesh.vertices) out.vertices.push_back(t.apply(v));
  out.triangles = mesh.triangles;
  return out;
}

TriangleMesh shrunk(const TriangleMesh& mesh, double amount) {
  if (mesh.vertices.empty() || amount <= 0.0) return mesh;
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const auto& v : mesh.vertices) centroid += v;
  centroid /= static_cast<double>(mesh.vertices.size());

  double max_dist = 0.0;
  for (const auto& v : mesh.vertices) {
    max_dist = std::max(max_dist, (v - centroid).norm());
  }
  if (max_dist <= amount) return mesh;  // too small to shrink meaningfully

  double scale = 1.0 - amount / max_dist;
  TriangleMesh out;
  out.vertices.reserve(mesh.vertices.size());
  for (const auto& v : mesh.vertices) {
    out.vertices.push_back(centroid + scale * (v - centroid));
  }
  out.triangles = mesh.triangles;
  return out;
}

}  // namespace mateforge
