#include "mateforge/primitives.hpp"

#include <cmath>
#include <numbers>

namespace mateforge {

namespace {

void add_quad(TriangleMesh& mesh, int a, int b, int c, int d) {
  mesh.triangles.push_back({a, b, c});
  mesh.triangles.push_back({a, c, d});
}

}  // namespace

TriangleMesh make_box(const Eigen::Vector3d& center,
                      const Eigen::Vector3d& half_extents) {
  TriangleMesh mesh;
  for (int i = 0; i < 8; ++i) {
    Eigen::Vector3d corner(((i & 1) ? 1.0 : -1.0) * half_extents.x(),
                           ((i & 2) ? 1.0 : -1.0) * half_extents.y(),
                           ((i & 4) ? 1.0 : -1.0) * half_extents.z());
    mesh.vertices.push_back(center + corner);
  }
  add_quad(mesh, 0, 2, 3, 1);  // -z
  add_quad(mesh, 4, 5, 7, 6);  // +z
  add_quad(mesh, 0, 1, 5, 4);  // -y
  add_quad(mesh, 2, 6, 7, 3);  // +y
  add_quad(mesh, 0, 4, 6, 2);  // -x
  add_quad(mesh, 1, 3, 7, 5);  // +x
  return mesh;
}

TriangleMesh make_cylinder(double radius, double z0, double z1, int segments) {
  TriangleMesh mesh;
  const int n = segments;
  for (int i = 0; i < n; ++i) {
    double angle = 2.0 * std::numbers::pi * i / n;
    double x = radius * std::cos(angle);
    double y = radius * std::sin(angle);
    mesh.vertices.emplace_back(x, y, z0);
    mesh.vertices.emplace_back(x, y, z1);
  }
  int bottom_center = static_cast<int>(mesh.vertices.size());
  mesh.vertices.emplace_back(0.0, 0.0, z0);
  int top_center = bottom_center + 1;
  mesh.vertices.emplace_back(0.0, 0.0, z1);

  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    add_quad(mesh, 2 * i, 2 * j, 2 * j + 1, 2 * i + 1);     // wall
    mesh.triangles.push_back({bottom_center, 2 * j, 2 * i}); // bottom cap
    mesh.triangles.push_back({top_center, 2 * i + 1, 2 * j + 1});
  }
  return mesh;
}

TriangleMesh make_tube(double inner_radius, double outer_radius, double z0,
                       double z1, int segments) {
  TriangleMesh mesh;
  const int n = segments;
  // Vertex layout per segment: inner z0, inner z1, outer z0, outer z1.
  for (int i = 0; i < n; ++i) {
    double angle = 2.0 * std::numbers::pi * i / n;
    double c = std::cos(angle), s = std::sin(angle);
    mesh.vertices.emplace_back(inner_radius * c, inner_radius * s, z0);
    mesh.vertices.emplace_back(inner_radius * c, inner_radius * s, z1);
    mesh.vertices.emplace_back(outer_radius * c, outer_radius * s, z0);
    mesh.vertices.emplace_back(outer_radius * c, outer_radius * s, z1);
  }
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    int i0 = 4 * i, j0 = 4 * j;
    add_quad(mesh, i0 + 1, j0 + 1, j0, i0);          // inner wall (faces hole)
    add_quad(mesh, i0 + 2, j0 + 2, j0 + 3, i0 + 3);  // outer wall
    add_quad(mesh, i0, j0, j0 + 2, i0 + 2);          // bottom annulus
    add_quad(mesh, i0 + 3, j0 + 3, j0 + 1, i0 + 1);  // top annulus
  }
  return mesh;
}

TriangleMesh make_box_with_square_hole(double outer_half, double inner_half,
                                       double z0, double z1) {
  TriangleMesh mesh;
  auto ring = [&](double half, double z) {
    int base = static_cast<int>(mesh.vertices.size());
    mesh.vertices.emplace_back(-half, -half, z);
    mesh.vertices.emplace_back(half, -half, z);
    mesh.vertices.emplace_back(half, half, z);
    mesh.vertices.emplace_back(-half, half, z);
    return base;
  };
  int o0 = ring(outer_half, z0);
  int o1 = ring(outer_half, z1);
  int i0 = ring(inner_half, z0);
  int i1 = ring(inner_half, z1);

  for (int k = 0; k < 4; ++k) {
    int next = (k + 1) % 4;
    add_quad(mesh, o0 + k, o0 + next, o1 + next, o1 + k);  // outer wall
    add_quad(mesh, i0 + next, i0 + k, i1 + k, i1 + next);  // hole wall
    add_quad(mesh, o0 + next, o0 + k, i0 + k, i0 + next);  // bottom annulus
    add_quad(mesh, o1 + k, o1 + next, i1 + next, i1 + k);  // top annulus
  }
  return mesh;
}

void append_mesh(TriangleMesh& mesh, const TriangleMesh& extra) {
  int base = static_cast<int>(mesh.vertices.size());
  mesh.vertices.insert(mesh.vertices.end(), extra.vertices.begin(),
                       extra.vertices.end());
  for (const auto& t : extra.triangles) {
    mesh.triangles.push_back({t[0] + base, t[1] + base, t[2] + base});
  }
}

}  // namespace mateforge
