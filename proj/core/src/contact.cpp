#include "mateforge/contact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mateforge/errors.hpp"

namespace mateforge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Tri = std::array<Eigen::Vector3d, 3>;

}  // namespace

double point_segment_distance(const Eigen::Vector3d& p,
                              const Eigen::Vector3d& a,
                              const Eigen::Vector3d& b) {
  Eigen::Vector3d ab = b - a;
  double len2 = ab.squaredNorm();
  if (len2 <= 0.0) return (p - a).norm();
  double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

double point_triangle_distance(const Eigen::Vector3d& p, const Tri& tri) {
  // Ericson, Real-Time Collision Detection: region classification via
  // barycentric signs.
  const Eigen::Vector3d& a = tri[0];
  const Eigen::Vector3d& b = tri[1];
  const Eigen::Vector3d& c = tri[2];
  Eigen::Vector3d ab = b - a, ac = c - a, ap = p - a;

  double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) return (p - a).norm();

  Eigen::Vector3d bp = p - b;
  double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) return (p - b).norm();

  double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
    double v = d1 / (d1 - d3);
    return (p - (a + v * ab)).norm();
  }

  Eigen::Vector3d cp = p - c;
  double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) return (p - c).norm();

  double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
    double w = d2 / (d2 - d6);
    return (p - (a + w * ac)).norm();
  }

  double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    return (p - (b + w * (c - b))).norm();
  }

  double denom = 1.0 / (va + vb + vc);
  double v = vb * denom, w = vc * denom;
  return (p - (a + v * ab + w * ac)).norm();
}

double segment_segment_distance(const Eigen::Vector3d& p1,
                                const Eigen::Vector3d& q1,
                                const Eigen::Vector3d& p2,
                                const Eigen::Vector3d& q2) {
  // Ericson's closest-point-of-two-segments with clamping.
  Eigen::Vector3d d1 = q1 - p1, d2 = q2 - p2, r = p1 - p2;
  double a = d1.squaredNorm(), e = d2.squaredNorm(), f = d2.dot(r);
  double s = 0.0, t = 0.0;
  constexpr double eps = 1e-30;

  if (a <= eps && e <= eps) return r.norm();
  if (a <= eps) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    double c = d1.dot(r);
    if (e <= eps) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      double b = d1.dot(d2);
      double denom = a * e - b * b;
      if (denom > eps) {
        s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
      }
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  return ((p1 + s * d1) - (p2 + t * d2)).norm();
}

namespace {

// Scale-aware epsilon for the intersection predicates.
double tri_pair_eps(const Tri& a, const Tri& b) {
  double m = 0.0;
  for (const auto& v : a) m = std::max(m, v.cwiseAbs().maxCoeff());
  for (const auto& v : b) m = std::max(m, v.cwiseAbs().maxCoeff());
  return 1e-12 * std::max(1.0, m);
}

// 2D segment intersection including endpoints, for the coplanar case.
bool segments_intersect_2d(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                           const Eigen::Vector2d& c, const Eigen::Vector2d& d,
                           double eps) {
  auto cross2 = [](const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
    return u.x() * v.y() - u.y() * v.x();
  };
  Eigen::Vector2d ab = b - a, cd = d - c;
  double denom = cross2(ab, cd);
  double t_num = cross2(c - a, cd);
  double u_num = cross2(c - a, ab);
  if (std::abs(denom) <= eps) {
    if (std::abs(t_num) > eps) return false;  // parallel, non-collinear
    // Collinear: overlap of parameter intervals on ab.
    double len2 = ab.squaredNorm();
    if (len2 <= eps) return (c - a).squaredNorm() <= eps;
    double t0 = (c - a).dot(ab) / len2;
    double t1 = (d - a).dot(ab) / len2;
    if (t0 > t1) std::swap(t0, t1);
    return t1 >= 0.0 && t0 <= 1.0;
  }
  double t = t_num / denom;
  double u = u_num / denom;
  return t >= 0.0 && t <= 1.0 && u >= 0.0 && u <= 1.0;
}

bool point_in_triangle_2d(const Eigen::Vector2d& p, const Eigen::Vector2d& a,
                          const Eigen::Vector2d& b, const Eigen::Vector2d& c,
                          double eps) {
  auto side = [&](const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
    return (v.x() - u.x()) * (p.y() - u.y()) - (v.y() - u.y()) * (p.x() - u.x());
  };
  double s1 = side(a, b), s2 = side(b, c), s3 = side(c, a);
  bool has_neg = (s1 < -eps) || (s2 < -eps) || (s3 < -eps);
  bool has_pos = (s1 > eps) || (s2 > eps) || (s3 > eps);
  return !(has_neg && has_pos);
}

bool coplanar_triangles_intersect(const Tri& a, const Tri& b,
                                  const Eigen::Vector3d& normal, double eps) {
  // Project to the dominant axis plane and run edge/containment tests.
  int drop = 0;
  Eigen::Vector3d an = normal.cwiseAbs();
  if (an.y() > an.x()) drop = 1;
  if (an.z() > an[drop]) drop = 2;
  auto project = [&](const Eigen::Vector3d& v) {
    return drop == 0   ? Eigen::Vector2d(v.y(), v.z())
           : drop == 1 ? Eigen::Vector2d(v.x(), v.z())
                       : Eigen::Vector2d(v.x(), v.y());
  };
  std::array<Eigen::Vector2d, 3> pa{project(a[0]), project(a[1]), project(a[2])};
  std::array<Eigen::Vector2d, 3> pb{project(b[0]), project(b[1]), project(b[2])};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (segments_intersect_2d(pa[i], pa[(i + 1) % 3], pb[j], pb[(j + 1) % 3],
                                eps)) {
        return true;
      }
    }
  }
  if (point_in_triangle_2d(pa[0], pb[0], pb[1], pb[2], eps)) return true;
  if (point_in_triangle_2d(pb[0], pa[0], pa[1], pa[2], eps)) return true;
  return false;
}

}  // namespace

bool triangles_intersect(const Tri& t1, const Tri& t2) {
  // Moller's interval test.
  const double eps = tri_pair_eps(t1, t2);

  Eigen::Vector3d n1 = (t1[1] - t1[0]).cross(t1[2] - t1[0]);
  double d1 = -n1.dot(t1[0]);
  std::array<double, 3> dv2;
  for (int i = 0; i < 3; ++i) dv2[i] = n1.dot(t2[i]) + d1;
  double scale1 = n1.norm();
  bool all_pos2 = dv2[0] > eps * scale1 && dv2[1] > eps * scale1 &&
                  dv2[2] > eps * scale1;
  bool all_neg2 = dv2[0] < -eps * scale1 && dv2[1] < -eps * scale1 &&
                  dv2[2] < -eps * scale1;
  if (all_pos2 || all_neg2) return false;

  Eigen::Vector3d n2 = (t2[1] - t2[0]).cross(t2[2] - t2[0]);
  double d2 = -n2.dot(t2[0]);
  std::array<double, 3> dv1;
  for (int i = 0; i < 3; ++i) dv1[i] = n2.dot(t1[i]) + d2;
  double scale2 = n2.norm();
  bool all_pos1 = dv1[0] > eps * scale2 && dv1[1] > eps * scale2 &&
                  dv1[2] > eps * scale2;
  bool all_neg1 = dv1[0] < -eps * scale2 && dv1[1] < -eps * scale2 &&
                  dv1[2] < -eps * scale2;
  if (all_pos1 || all_neg1) return false;

  bool coplanar2 = std::abs(dv2[0]) <= eps * scale1 &&
                   std::abs(dv2[1]) <= eps * scale1 &&
                   std::abs(dv2[2]) <= eps * scale1;
  if (coplanar2) {
    return coplanar_triangles_intersect(t1, t2, n1, eps);
  }

  Eigen::Vector3d dir = n1.cross(n2);
  int axis = 0;
  Eigen::Vector3d ad = dir.cwiseAbs();
  if (ad.y() > ad.x()) axis = 1;
  if (ad.z() > ad[axis]) axis = 2;

  // Interval of a triangle on the intersection line.
  auto interval = [&](const Tri& t, const std::array<double, 3>& dv,
                      double& lo, double& hi) {
    std::array<double, 3> proj{t[0][axis], t[1][axis], t[2][axis]};
    // Pick the vertex on the opposite side of the other plane.
    int odd;
    if ((dv[0] > 0.0) == (dv[1] > 0.0)) {
      odd = 2;
    } else if ((dv[0] > 0.0) == (dv[2] > 0.0)) {
      odd = 1;
    } else {
      odd = 0;
    }
    int i = (odd + 1) % 3, j = (odd + 2) % 3;
    auto cut = [&](int from, int to) {
      double denom = dv[from] - dv[to];
      if (std::abs(denom) <= 0.0) return proj[from];
      return proj[from] + (proj[to] - proj[from]) * dv[from] / denom;
    };
    lo = cut(i, odd);
    hi = cut(j, odd);
    if (lo > hi) std::swap(lo, hi);
  };

  double lo1, hi1, lo2, hi2;
  interval(t1, dv1, lo1, hi1);
  interval(t2, dv2, lo2, hi2);
  return hi1 >= lo2 - eps && hi2 >= lo1 - eps;
}

double triangle_distance(const Tri& a, const Tri& b) {
  if (triangles_intersect(a, b)) return 0.0;
  double best = kInf;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      best = std::min(best,
                      segment_segment_distance(a[i], a[(i + 1) % 3], b[j],
                                               b[(j + 1) % 3]));
    }
  }
  for (int i = 0; i < 3; ++i) {
    best = std::min(best, point_triangle_distance(a[i], b));
    best = std::min(best, point_triangle_distance(b[i], a));
  }
  return best;
}

// ---------------------------------------------------------------------------
// BVH

struct MeshBvh::Impl {
  struct Node {
    Aabb box;
    int left = -1;   // child index; -1 for leaves
    int right = -1;
    int begin = 0;   // triangle range for leaves
    int end = 0;
    bool leaf() const { return left < 0; }
  };

  std::vector<Tri> tris;
  std::vector<int> tri_order;
  std::vector<Node> nodes;

  static constexpr int kLeafSize = 4;

  int build(int begin, int end) {
    Node node;
    node.box.min = Eigen::Vector3d::Constant(kInf);
    node.box.max = Eigen::Vector3d::Constant(-kInf);
    for (int i = begin; i < end; ++i) {
      for (const auto& v : tris[tri_order[i]]) node.box.expand(v);
    }
    int index = static_cast<int>(nodes.size());
    nodes.push_back(node);
    if (end - begin <= kLeafSize) {
      nodes[index].begin = begin;
      nodes[index].end = end;
      return index;
    }
    Eigen::Vector3d extent = node.box.max - node.box.min;
    int axis = 0;
    if (extent.y() > extent.x()) axis = 1;
    if (extent.z() > extent[axis]) axis = 2;
    int mid = (begin + end) / 2;
    std::nth_element(tri_order.begin() + begin, tri_order.begin() + mid,
                     tri_order.begin() + end, [&](int lhs, int rhs) {
                       auto centroid = [&](int t) {
                         return (tris[t][0][axis] + tris[t][1][axis] +
                                 tris[t][2][axis]);
                       };
                       return centroid(lhs) < centroid(rhs);
                     });
    int left = build(begin, mid);
    int right = build(mid, end);
    nodes[index].left = left;
    nodes[index].right = right;
    nodes[index].begin = begin;
    nodes[index].end = end;
    return index;
  }

  void distance(const Impl& other, int na, int nb, double& best) const {
    const Node& a = nodes[na];
    const Node& b = other.nodes[nb];
    double lower2 = a.box.squared_distance(b.box);
    if (lower2 >= best * best) return;
    if (a.leaf() && b.leaf()) {
      for (int i = a.begin; i < a.end; ++i) {
        for (int j = b.begin; j < b.end; ++j) {
          best = std::min(best, triangle_distance(tris[tri_order[i]],
                                                  other.tris[other.tri_order[j]]));
          if (best <= 0.0) return;
        }
      }
      return;
    }
    // Descend the node with the larger box first, nearest child first.
    bool split_a;
    if (a.leaf()) {
      split_a = false;
    } else if (b.leaf()) {
      split_a = true;
    } else {
      split_a = (a.box.max - a.box.min).squaredNorm() >=
                (b.box.max - b.box.min).squaredNorm();
    }
    if (split_a) {
      double dl = nodes[a.left].box.squared_distance(b.box);
      double dr = nodes[a.right].box.squared_distance(b.box);
      if (dl <= dr) {
        distance(other, a.left, nb, best);
        distance(other, a.right, nb, best);
      } else {
        distance(other, a.right, nb, best);
        distance(other, a.left, nb, best);
      }
    } else {
      double dl = a.box.squared_distance(other.nodes[b.left].box);
      double dr = a.box.squared_distance(other.nodes[b.right].box);
      if (dl <= dr) {
        distance(other, na, b.left, best);
        distance(other, na, b.right, best);
      } else {
        distance(other, na, b.right, best);
        distance(other, na, b.left, best);
      }
    }
  }

  bool overlap(const Impl& other, int na, int nb) const {
    const Node& a = nodes[na];
    const Node& b = other.nodes[nb];
    if (a.box.squared_distance(b.box) > 0.0) return false;
    if (a.leaf() && b.leaf()) {
      for (int i = a.begin; i < a.end; ++i) {
        for (int j = b.begin; j < b.end; ++j) {
          if (triangles_intersect(tris[tri_order[i]],
                                  other.tris[other.tri_order[j]])) {
            return true;
          }
        }
      }
      return false;
    }
    bool split_a;
    if (a.leaf()) {
      split_a = false;
    } else if (b.leaf()) {
      split_a = true;
    } else {
      split_a = (a.box.max - a.box.min).squaredNorm() >=
                (b.box.max - b.box.min).squaredNorm();
    }
    if (split_a) {
      return overlap(other, a.left, nb) || overlap(other, a.right, nb);
    }
    return overlap(other, na, b.left) || overlap(other, na, b.right);
  }

  double point_distance(const Eigen::Vector3d& p, int n, double best) const {
    const Node& node = nodes[n];
    Eigen::Vector3d clamped = p.cwiseMax(node.box.min).cwiseMin(node.box.max);
    if ((p - clamped).norm() >= best) return best;
    if (node.leaf()) {
      for (int i = node.begin; i < node.end; ++i) {
        best = std::min(best, point_triangle_distance(p, tris[tri_order[i]]));
      }
      return best;
    }
    best = point_distance(p, node.left, best);
    best = point_distance(p, node.right, best);
    return best;
  }
};

MeshBvh::MeshBvh(const TriangleMesh& world_mesh) : impl_(new Impl) {
  if (world_mesh.empty()) {
    throw GeometryError("MeshBvh: empty mesh");
  }
  impl_->tris.reserve(world_mesh.triangles.size());
  for (const auto& t : world_mesh.triangles) {
    impl_->tris.push_back({world_mesh.vertices[t[0]], world_mesh.vertices[t[1]],
                           world_mesh.vertices[t[2]]});
  }
  impl_->tri_order.resize(impl_->tris.size());
  std::iota(impl_->tri_order.begin(), impl_->tri_order.end(), 0);
  impl_->build(0, static_cast<int>(impl_->tris.size()));
}

MeshBvh::~MeshBvh() = default;
MeshBvh::MeshBvh(MeshBvh&&) noexcept = default;
MeshBvh& MeshBvh::operator=(MeshBvh&&) noexcept = default;

const Aabb& MeshBvh::bounds() const { return impl_->nodes.front().box; }
std::size_t MeshBvh::triangle_count() const { return impl_->tris.size(); }
const std::array<Eigen::Vector3d, 3>& MeshBvh::triangle(std::size_t i) const {
  return impl_->tris[i];
}

double MeshBvh::distance_to(const MeshBvh& other) const {
  double best = kInf;
  impl_->distance(*other.impl_, 0, 0, best);
  return best;
}

bool MeshBvh::intersects(const MeshBvh& other) const {
  return impl_->overlap(*other.impl_, 0, 0);
}

double MeshBvh::point_distance(const Eigen::Vector3d& p) const {
  return impl_->point_distance(p, 0, kInf);
}

bool MeshBvh::contains_point(const Eigen::Vector3d& p) const {
  // Parity of ray crossings; retried with a new direction whenever a hit is
  // too close to a triangle edge or to the ray origin to be trusted.
  Eigen::Vector3d dir(0.5377397593985796, 0.6213671097723111,
                      0.5697522544793244);
  const Eigen::Quaterniond spin =
      Eigen::Quaterniond(Eigen::AngleAxisd(
          0.7390851332151607, Eigen::Vector3d(0.2672612419124244,
                                              -0.5345224838248488,
                                              0.8017837257372732)))
          .normalized();
  for (int attempt = 0; attempt < 12; ++attempt) {
    int crossings = 0;
    bool marginal = false;
    for (const Tri& t : impl_->tris) {
      Eigen::Vector3d e1 = t[1] - t[0];
      Eigen::Vector3d e2 = t[2] - t[0];
      Eigen::Vector3d pv = dir.cross(e2);
      double det = e1.dot(pv);
      double scale = e1.norm() * e2.norm();
      if (std::abs(det) <= 1e-14 * std::max(1.0, scale)) continue;
      double inv = 1.0 / det;
      Eigen::Vector3d tv = p - t[0];
      double u = tv.dot(pv) * inv;
      Eigen::Vector3d qv = tv.cross(e1);
      double v = dir.dot(qv) * inv;
      double ray_t = e2.dot(qv) * inv;
      constexpr double edge_eps = 1e-9;
      if (u < -edge_eps || v < -edge_eps || u + v > 1.0 + edge_eps) continue;
      if (ray_t <= 0.0) continue;
      if (u < edge_eps || v < edge_eps || u + v > 1.0 - edge_eps ||
          ray_t < edge_eps) {
        marginal = true;
        break;
      }
      crossings += 1;
    }
    if (!marginal) return (crossings % 2) == 1;
    dir = (spin * dir).normalized();
  }
  return false;  // persistent grazing: treat as boundary, not containment
}

ContactReport min_distance(const Part& a, const Part& b, double contact_tol) {
  if (a.mesh.empty() || b.mesh.empty()) {
    throw GeometryError("min_distance: empty mesh on part '" +
                        (a.mesh.empty() ? a.id : b.id) + "'");
  }
  MeshBvh bvh_a(a.world_mesh());
  MeshBvh bvh_b(b.world_mesh());
  ContactReport report;
  report.part_a = a.id;
  report.part_b = b.id;
  report.min_distance = bvh_a.distance_to(bvh_b);
  report.in_contact = report.min_distance <= contact_tol;
  return report;
}

}  // namespace mateforge
