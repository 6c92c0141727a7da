#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mateforge/axis.hpp"
#include "mateforge/mesh.hpp"
#include "mateforge/transform.hpp"

namespace mateforge {

// Analytic surface data attached to a part, in the part's local frame.
// Stands in for the face geometry a B-Rep tessellation would carry.
struct PlanarFace {
  Eigen::Vector3d centroid{0.0, 0.0, 0.0};
  Eigen::Vector3d normal{0.0, 0.0, 1.0};  // unit, as modeled (directed)
};

struct CylindricalFace {
  AxisLine axis;  // local frame, canonical
  double radius = 1.0;
  // Parameter interval along axis.direction, measured from axis.point.
  std::array<double, 2> extent{0.0, 1.0};
};

using Feature = std::variant<PlanarFace, CylindricalFace>;

enum class MateType { Fasten, Revolute, Slider, Cylindrical };

inline constexpr std::array<MateType, 4> kMateTypes = {
    MateType::Fasten, MateType::Revolute, MateType::Slider,
    MateType::Cylindrical};

// Lowercase wire tags ("fasten", "revolute", "slider", "cylindrical").
std::string to_tag(MateType t);
std::optional<MateType> mate_type_from_tag(const std::string& tag);

enum class Provenance { Original, Densified, Predicted };

std::string to_tag(Provenance p);
std::optional<Provenance> provenance_from_tag(const std::string& tag);

struct Part {
  std::string id;
  TriangleMesh mesh;                  // local frame
  std::vector<Feature> features;      // local frame
  RigidTransform placement;           // part -> world

  TriangleMesh world_mesh() const { return transformed(mesh, placement); }
};

// A typed connection between two parts. The raw `type_tag` is the source of
// truth: documents may carry tags outside the four supported types (the
// type-whitelist filter consumes them), so `mate_type()` is empty for those.
struct Mate {
  std::string id;
  std::string part_a;
  std::string part_b;
  std::string type_tag;
  AxisLine axis;  // world frame, canonical
  Provenance provenance = Provenance::Original;

  std::optional<MateType> mate_type() const {
    return mate_type_from_tag(type_tag);
  }

  static Mate make(std::string id, std::string part_a, std::string part_b,
                   MateType type, AxisLine axis,
                   Provenance provenance = Provenance::Original);
};

struct Assembly {
  std::string id;
  std::vector<Part> parts;
  std::vector<Mate> mates;
  std::map<std::string, std::string> metadata;

  const Part* find_part(const std::string& part_id) const;
  const Part& part(const std::string& part_id) const;  // throws SchemaError

  // Unordered part-id pair in a fixed order, for pair keyed maps.
  static std::pair<std::string, std::string> pair_key(const std::string& a,
                                                      const std::string& b);

  // Structural invariants: unique ids, resolvable mate endpoints,
  // part_a != part_b, valid meshes/features/placements. Throws SchemaError.
  void validate() const;

  Aabb bounding_box() const;  // over all placed meshes
};

}  // namespace mateforge
