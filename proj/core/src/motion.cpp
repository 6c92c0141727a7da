#include "mateforge/motion.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "mateforge/errors.hpp"

namespace mateforge {

MotionGroup MotionGroup::translation(const Eigen::Vector3d& direction) {
  MotionGroup g(Kind::Translation);
  g.direction_ = canonical_direction(direction);
  return g;
}

std::string to_string(MotionGroup::Kind kind) {
  switch (kind) {
    case MotionGroup::Kind::Fixed: return "fixed";
    case MotionGroup::Kind::Rotation: return "rotation";
    case MotionGroup::Kind::Translation: return "translation";
    case MotionGroup::Kind::Cylindrical: return "cylindrical";
    case MotionGroup::Kind::Complex: return "complex";
  }
  return "complex";
}

bool same_group(const MotionGroup& a, const MotionGroup& b,
                const ToleranceConfig& tol) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case MotionGroup::Kind::Fixed:
    case MotionGroup::Kind::Complex:
      return true;
    case MotionGroup::Kind::Translation:
      return directions_parallel(a.direction(), b.direction(), tol);
    case MotionGroup::Kind::Rotation:
    case MotionGroup::Kind::Cylindrical:
      return lines_coincident(a.axis(), b.axis(), tol);
  }
  return false;
}

MotionGroup mate_to_group(const Mate& m) {
  auto type = m.mate_type();
  if (!type) {
    throw GeometryError("mate '" + m.id + "' has unsupported type tag '" +
                        m.type_tag + "'");
  }
  switch (*type) {
    case MateType::Fasten: return MotionGroup::fixed();
    case MateType::Revolute: return MotionGroup::rotation(m.axis);
    case MateType::Slider: return MotionGroup::translation(m.axis.direction);
    case MateType::Cylindrical: return MotionGroup::cylindrical(m.axis);
  }
  return MotionGroup::complex();
}

std::optional<MateType> group_to_mate_type(const MotionGroup& g) {
  switch (g.kind()) {
    case MotionGroup::Kind::Fixed: return MateType::Fasten;
    case MotionGroup::Kind::Rotation: return MateType::Revolute;
    case MotionGroup::Kind::Translation: return MateType::Slider;
    case MotionGroup::Kind::Cylindrical: return MateType::Cylindrical;
    case MotionGroup::Kind::Complex: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

using Kind = MotionGroup::Kind;

bool dir_parallel_to_axis(const Eigen::Vector3d& d, const AxisLine& axis,
                          const ToleranceConfig& tol) {
  return directions_parallel(d, axis.direction, tol);
}

}  // namespace

MotionGroup compose(const MotionGroup& g1, const MotionGroup& g2,
                    const ToleranceConfig& tol) {
  if (g1.kind() == Kind::Complex || g2.kind() == Kind::Complex) {
    return MotionGroup::complex();
  }
  if (g1.kind() == Kind::Fixed) return g2;
  if (g2.kind() == Kind::Fixed) return g1;

  const Kind k1 = g1.kind();
  const Kind k2 = g2.kind();

  if (k1 == Kind::Rotation && k2 == Kind::Rotation) {
    return lines_coincident(g1.axis(), g2.axis(), tol)
               ? MotionGroup::rotation(g1.axis())
               : MotionGroup::complex();
  }
  if (k1 == Kind::Translation && k2 == Kind::Translation) {
    return directions_parallel(g1.direction(), g2.direction(), tol)
               ? MotionGroup::translation(g1.direction())
               : MotionGroup::complex();
  }
  if ((k1 == Kind::Rotation && k2 == Kind::Translation) ||
      (k1 == Kind::Translation && k2 == Kind::Rotation)) {
    const MotionGroup& rot = k1 == Kind::Rotation ? g1 : g2;
    const MotionGroup& tr = k1 == Kind::Rotation ? g2 : g1;
    return dir_parallel_to_axis(tr.direction(), rot.axis(), tol)
               ? MotionGroup::cylindrical(rot.axis())
               : MotionGroup::complex();
  }
  if (k1 == Kind::Cylindrical && k2 == Kind::Cylindrical) {
    return lines_coincident(g1.axis(), g2.axis(), tol)
               ? MotionGroup::cylindrical(g1.axis())
               : MotionGroup::complex();
  }
  if ((k1 == Kind::Cylindrical && k2 == Kind::Rotation) ||
      (k1 == Kind::Rotation && k2 == Kind::Cylindrical)) {
    if (!lines_coincident(g1.axis(), g2.axis(), tol)) {
      return MotionGroup::complex();
    }
    return MotionGroup::cylindrical(g1.axis());
  }
  // Cylindrical with Translation, either order.
  const MotionGroup& cyl = k1 == Kind::Cylindrical ? g1 : g2;
  const MotionGroup& tr = k1 == Kind::Cylindrical ? g2 : g1;
  return dir_parallel_to_axis(tr.direction(), cyl.axis(), tol)
             ? MotionGroup::cylindrical(cyl.axis())
             : MotionGroup::complex();
}

MotionGroup intersect(const MotionGroup& g1, const MotionGroup& g2,
                      const ToleranceConfig& tol) {
  if (g1.kind() == Kind::Complex) return g2;
  if (g2.kind() == Kind::Complex) return g1;
  if (g1.kind() == Kind::Fixed || g2.kind() == Kind::Fixed) {
    return MotionGroup::fixed();
  }

  const Kind k1 = g1.kind();
  const Kind k2 = g2.kind();

  if (k1 == Kind::Rotation && k2 == Kind::Rotation) {
    return lines_coincident(g1.axis(), g2.axis(), tol)
               ? MotionGroup::rotation(g1.axis())
               : MotionGroup::fixed();
  }
  if (k1 == Kind::Translation && k2 == Kind::Translation) {
    return directions_parallel(g1.direction(), g2.direction(), tol)
               ? MotionGroup::translation(g1.direction())
               : MotionGroup::fixed();
  }
  if ((k1 == Kind::Rotation && k2 == Kind::Translation) ||
      (k1 == Kind::Translation && k2 == Kind::Rotation)) {
    return MotionGroup::fixed();
  }
  if (k1 == Kind::Cylindrical && k2 == Kind::Cylindrical) {
    if (lines_coincident(g1.axis(), g2.axis(), tol)) {
      return MotionGroup::cylindrical(g1.axis());
    }
    if (directions_parallel(g1.axis(), g2.axis(), tol)) {
      // Parallel but offset: only the shared translations remain.
      return MotionGroup::translation(g1.axis().direction);
    }
    return MotionGroup::fixed();
  }
  if ((k1 == Kind::Cylindrical && k2 == Kind::Rotation) ||
      (k1 == Kind::Rotation && k2 == Kind::Cylindrical)) {
    if (!lines_coincident(g1.axis(), g2.axis(), tol)) {
      return MotionGroup::fixed();
    }
    return MotionGroup::rotation(g1.axis());
  }
  // Cylindrical with Translation, either order.
  const MotionGroup& cyl = k1 == Kind::Cylindrical ? g1 : g2;
  const MotionGroup& tr = k1 == Kind::Cylindrical ? g2 : g1;
  if (!dir_parallel_to_axis(tr.direction(), cyl.axis(), tol)) {
    return MotionGroup::fixed();
  }
  return k1 == Kind::Translation ? MotionGroup::translation(g1.direction())
                                 : MotionGroup::translation(
                                       g1.axis().direction);
}

namespace {

struct MateGraph {
  std::vector<std::string> nodes;                 // sorted part ids
  std::map<std::string, int> index;
  // adjacency[u] = (mate id, neighbor) sorted by mate id
  std::vector<std::vector<std::pair<std::string, int>>> adjacency;
  std::map<std::string, const Mate*> mate_by_id;

  explicit MateGraph(const Assembly& assembly) {
    for (const Part& p : assembly.parts) nodes.push_back(p.id);
    std::sort(nodes.begin(), nodes.end());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      index[nodes[i]] = static_cast<int>(i);
    }
    adjacency.resize(nodes.size());
    for (const Mate& m : assembly.mates) {
      int a = index.at(m.part_a);
      int b = index.at(m.part_b);
      adjacency[a].emplace_back(m.id, b);
      adjacency[b].emplace_back(m.id, a);
      mate_by_id[m.id] = &m;
    }
    for (auto& adj : adjacency) std::sort(adj.begin(), adj.end());
  }

  std::vector<int> bfs_distances(int source) const {
    std::vector<int> dist(nodes.size(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (const auto& [mate_id, v] : adjacency[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return dist;
  }
};

}  // namespace

MotionGroup relative_motion(const Assembly& assembly,
                            const std::string& part_a,
                            const std::string& part_b,
                            const ToleranceConfig& tol) {
  if (!assembly.find_part(part_a) || !assembly.find_part(part_b)) {
    throw SchemaError("/parts", "relative_motion: unknown part id");
  }
  if (part_a == part_b) return MotionGroup::fixed();

  MateGraph graph(assembly);
  const int src = graph.index.at(part_a);
  const int dst = graph.index.at(part_b);

  std::vector<int> dist_a = graph.bfs_distances(src);
  std::vector<int> dist_b = graph.bfs_distances(dst);
  if (dist_a[dst] < 0) {
    throw DisconnectedError("parts '" + part_a + "' and '" + part_b +
                            "' are not connected by mates");
  }
  const int total = dist_a[dst];

  // Shortest path with the lexicographically smallest mate-id sequence:
  // greedily take the smallest mate id that still lies on a shortest path.
  auto compose_shortest = [&](int from, int to,
                              const std::vector<int>& dist_from,
                              const std::vector<int>& dist_to) {
    MotionGroup g = MotionGroup::fixed();
    int current = from;
    int depth = 0;
    const int length = dist_from[to];
    while (current != to) {
      const std::pair<std::string, int>* next = nullptr;
      for (const auto& edge : graph.adjacency[current]) {
        if (dist_from[edge.second] == depth + 1 &&
            dist_to[edge.second] == length - depth - 1) {
          next = &edge;
          break;  // adjacency sorted by mate id
        }
      }
      g = compose(g, mate_to_group(*graph.mate_by_id.at(next->first)), tol);
      current = next->second;
      depth += 1;
    }
    return g;
  };

  MotionGroup result = compose_shortest(src, dst, dist_a, dist_b);

  // Cycle handling: one BFS spanning tree from part_a; every non-tree mate
  // contributes a detour walk src ~~> u -> v ~~> dst whose composition is a
  // sound constraint; intersect them all. Walks use tree paths.
  std::vector<int> parent(graph.nodes.size(), -1);
  std::vector<std::string> parent_mate(graph.nodes.size());
  std::vector<int> order;
  {
    std::deque<int> queue{src};
    std::vector<char> seen(graph.nodes.size(), 0);
    seen[src] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (const auto& [mate_id, v] : graph.adjacency[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          parent[v] = u;
          parent_mate[v] = mate_id;
          queue.push_back(v);
        }
      }
    }
  }

  auto tree_path_groups = [&](int from, int to) {
    // Unique tree path via walking both ends up to the common ancestor.
    std::map<int, int> depth;
    for (int u : order) {
      depth[u] = parent[u] < 0 ? 0 : depth[parent[u]] + 1;
    }
    std::vector<std::string> up_from, up_to;
    int x = from, y = to;
    while (depth[x] > depth[y]) {
      up_from.push_back(parent_mate[x]);
      x = parent[x];
    }
    while (depth[y] > depth[x]) {
      up_to.push_back(parent_mate[y]);
      y = parent[y];
    }
    while (x != y) {
      up_from.push_back(parent_mate[x]);
      up_to.push_back(parent_mate[y]);
      x = parent[x];
      y = parent[y];
    }
    MotionGroup g = MotionGroup::fixed();
    for (const auto& id : up_from) {
      g = compose(g, mate_to_group(*graph.mate_by_id.at(id)), tol);
    }
    for (auto it = up_to.rbegin(); it != up_to.rend(); ++it) {
      g = compose(g, mate_to_group(*graph.mate_by_id.at(*it)), tol);
    }
    return g;
  };

  std::set<std::string> tree_mates;
  for (std::size_t v = 0; v < graph.nodes.size(); ++v) {
    if (parent[static_cast<int>(v)] >= 0) tree_mates.insert(parent_mate[v]);
  }
  for (const auto& [mate_id, mate] : graph.mate_by_id) {
    if (tree_mates.contains(mate_id)) continue;
    int u = graph.index.at(mate->part_a);
    int v = graph.index.at(mate->part_b);
    if (dist_a[u] < 0 || dist_a[v] < 0) continue;  // chord off the component
    MotionGroup chord = mate_to_group(*mate);
    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
      MotionGroup walk = compose(
          compose(tree_path_groups(src, x), chord, tol),
          tree_path_groups(y, dst), tol);
      result = intersect(result, walk, tol);
    }
  }
  return result;
}

MotionGroup classify_transform_samples(
    const std::vector<RigidTransform>& samples, const ToleranceConfig& tol) {
  if (samples.size() < 8) {
    throw GeometryError("classify_transform_samples: need at least 8 samples");
  }

  std::vector<ScrewDecomposition> screws;
  screws.reserve(samples.size());
  for (const auto& t : samples) screws.push_back(screw_decompose(t, tol));

  bool any_rotation = false;
  for (const auto& s : screws) {
    if (s.axis) any_rotation = true;
  }

  if (!any_rotation) {
    // Pure translations (or identity).
    std::optional<Eigen::Vector3d> direction;
    for (const auto& s : screws) {
      if (s.pitch_translation.norm() <= tol.dist_tol) continue;
      Eigen::Vector3d d = canonical_direction(s.pitch_translation);
      if (!direction) {
        direction = d;
      } else if (!directions_parallel(*direction, d, tol)) {
        return MotionGroup::complex();
      }
    }
    if (!direction) return MotionGroup::fixed();
    return MotionGroup::translation(*direction);
  }

  // Some samples rotate: all rotating samples must share one line.
  std::optional<AxisLine> axis;
  for (const auto& s : screws) {
    if (!s.axis) continue;
    if (!axis) {
      axis = s.axis;
    } else if (!lines_coincident(*axis, *s.axis, tol)) {
      return MotionGroup::complex();
    }
  }

  bool any_axial_translation = false;
  for (const auto& s : screws) {
    if (s.axis) {
      if (s.pitch_translation.norm() > tol.dist_tol) {
        any_axial_translation = true;
      }
    } else {
      // Zero-angle sample: must be identity-like or a slide along the axis.
      if (s.pitch_translation.norm() <= tol.dist_tol) continue;
      if (!directions_parallel(canonical_direction(s.pitch_translation),
                               axis->direction, tol)) {
        return MotionGroup::complex();
      }
      any_axial_translation = true;
    }
  }

  return any_axial_translation ? MotionGroup::cylindrical(*axis)
                               : MotionGroup::rotation(*axis);
}

}  // namespace mateforge
