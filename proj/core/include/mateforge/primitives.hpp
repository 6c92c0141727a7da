#pragma once

#include <Eigen/Core>

#include "mateforge/mesh.hpp"

namespace mateforge {

// Watertight mesh builders for fixtures and tests. Cylindrical shapes are
// built around the +z axis with `segments`-gon cross sections (vertices on
// the nominal radius).

TriangleMesh make_box(const Eigen::Vector3d& center,
                      const Eigen::Vector3d& half_extents);

TriangleMesh make_cylinder(double radius, double z0, double z1, int segments);

// Hollow cylinder: outer wall, inner wall, and two annular caps.
TriangleMesh make_tube(double inner_radius, double outer_radius, double z0,
                       double z1, int segments);

// Box with a square through-hole along z: outer walls, hole walls, and two
// square-annulus end faces.
TriangleMesh make_box_with_square_hole(double outer_half, double inner_half,
                                       double z0, double z1);

// Appends `extra` to `mesh` (triangle soup union of closed solids).
void append_mesh(TriangleMesh& mesh, const TriangleMesh& extra);

}  // namespace mateforge
