#pragma once

#include <array>

#include "mateforge/mesh.hpp"
#include "random_gen.hpp"

// Brute-force mesh distance oracle. The primitives are written from scratch
// with different formulations than the library (normal-equation barycentrics,
// boundary-scan quadratic minimization, edge-pierce intersection) so the two
// routes only agree when both are right.
namespace testsupport {

using Tri = std::array<Eigen::Vector3d, 3>;

double oracle_point_triangle(const Eigen::Vector3d& p, const Tri& tri);
double oracle_segment_segment(const Eigen::Vector3d& p1,
                              const Eigen::Vector3d& q1,
                              const Eigen::Vector3d& p2,
                              const Eigen::Vector3d& q2);
bool oracle_triangles_intersect(const Tri& a, const Tri& b);
double oracle_triangle_distance(const Tri& a, const Tri& b);

// All-pairs minimum over the two triangle sets (world space).
double brute_force_min_distance(const mateforge::TriangleMesh& a,
                                const mateforge::TriangleMesh& b);

// Random well-formed triangle soup with `triangles` faces inside a box of
// the given half extent.
mateforge::TriangleMesh random_soup(Rng& rng, int triangles, double half);

}  // namespace testsupport
