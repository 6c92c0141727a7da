#include "mateforge/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "mateforge/errors.hpp"

namespace mateforge {

std::string to_tag(MateType t) {
  switch (t) {
    case MateType::Fasten: return "fasten";
    case MateType::Revolute: return "revolute";
    case MateType::Slider: return "slider";
    case MateType::Cylindrical: return "cylindrical";
  }
  return "fasten";
}

std::optional<MateType> mate_type_from_tag(const std::string& tag) {
  if (tag == "fasten") return MateType::Fasten;
  if (tag == "revolute") return MateType::Revolute;
  if (tag == "slider") return MateType::Slider;
  if (tag == "cylindrical") return MateType::Cylindrical;
  return std::nullopt;
}

std::string to_tag(Provenance p) {
  switch (p) {
    case Provenance::Original: return "original";
    case Provenance::Densified: return "densified";
    case Provenance::Predicted: return "predicted";
  }
  return "original";
}

std::optional<Provenance> provenance_from_tag(const std::string& tag) {
  if (tag == "original") return Provenance::Original;
  if (tag == "densified") return Provenance::Densified;
  if (tag == "predicted") return Provenance::Predicted;
  return std::nullopt;
}

Mate Mate::make(std::string id, std::string part_a, std::string part_b,
                MateType type, AxisLine axis, Provenance provenance) {
  Mate m;
  m.id = std::move(id);
  m.part_a = std::move(part_a);
  m.part_b = std::move(part_b);
  m.type_tag = to_tag(type);
  m.axis = axis;
  m.provenance = provenance;
  return m;
}

const Part* Assembly::find_part(const std::string& part_id) const {
  for (const Part& p : parts) {
    if (p.id == part_id) return &p;
  }
  return nullptr;
}

const Part& Assembly::part(const std::string& part_id) const {
  const Part* p = find_part(part_id);
  if (!p) throw SchemaError("/parts", "unknown part id '" + part_id + "'");
  return *p;
}

std::pair<std::string, std::string> Assembly::pair_key(const std::string& a,
                                                       const std::string& b) {
  return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

void Assembly::validate() const {
  std::unordered_set<std::string> part_ids;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Part& p = parts[i];
    const std::string path = "/parts/" + std::to_string(i);
    if (p.id.empty()) throw SchemaError(path + "/id", "empty part id");
    if (!part_ids.insert(p.id).second) {
      throw SchemaError(path + "/id", "duplicate part id '" + p.id + "'");
    }
    if (!p.placement.translation.allFinite() ||
        !p.placement.rotation.coeffs().allFinite()) {
      throw NonFiniteError(path + "/placement", "non-finite placement");
    }
    if (std::abs(p.placement.rotation.norm() - 1.0) > 1e-9) {
      throw SchemaError(path + "/placement/quaternion",
                        "quaternion is not unit length");
    }
    p.mesh.validate(path + "/mesh");
    for (std::size_t f = 0; f < p.features.size(); ++f) {
      const std::string fpath = path + "/features/" + std::to_string(f);
      if (const auto* plane = std::get_if<PlanarFace>(&p.features[f])) {
        if (!plane->centroid.allFinite() || !plane->normal.allFinite()) {
          throw NonFiniteError(fpath, "non-finite planar face");
        }
        if (std::abs(plane->normal.norm() - 1.0) > 1e-9) {
          throw SchemaError(fpath + "/normal", "normal is not unit length");
        }
      } else {
        const auto& cyl = std::get<CylindricalFace>(p.features[f]);
        if (!cyl.axis.point.allFinite() || !cyl.axis.direction.allFinite() ||
            !std::isfinite(cyl.radius) || !std::isfinite(cyl.extent[0]) ||
            !std::isfinite(cyl.extent[1])) {
          throw NonFiniteError(fpath, "non-finite cylindrical face");
        }
        if (std::abs(cyl.axis.direction.norm() - 1.0) > 1e-9) {
          throw SchemaError(fpath + "/axis/direction",
                            "direction is not unit length");
        }
        if (!(cyl.radius > 0.0)) {
          throw SchemaError(fpath + "/radius", "radius must be positive");
        }
        if (!(cyl.extent[1] > cyl.extent[0])) {
          throw SchemaError(fpath + "/extent", "empty extent interval");
        }
      }
    }
  }

  std::unordered_set<std::string> mate_ids;
  for (std::size_t i = 0; i < mates.size(); ++i) {
    const Mate& m = mates[i];
    const std::string path = "/mates/" + std::to_string(i);
    if (m.id.empty()) throw SchemaError(path + "/id", "empty mate id");
    if (!mate_ids.insert(m.id).second) {
      throw SchemaError(path + "/id", "duplicate mate id '" + m.id + "'");
    }
    if (m.part_a == m.part_b) {
      throw SchemaError(path, "mate connects a part to itself");
    }
    if (!part_ids.contains(m.part_a)) {
      throw SchemaError(path + "/part_a", "unknown part id '" + m.part_a + "'");
    }
    if (!part_ids.contains(m.part_b)) {
      throw SchemaError(path + "/part_b", "unknown part id '" + m.part_b + "'");
    }
    if (!m.axis.point.allFinite() || !m.axis.direction.allFinite()) {
      throw NonFiniteError(path + "/axis", "non-finite axis");
    }
  }
}

Aabb Assembly::bounding_box() const {
  Aabb box;
  bool first = true;
  for (const Part& p : parts) {
    if (p.mesh.vertices.empty()) continue;
    Aabb b = transformed(p.mesh, p.placement).bounding_box();
    if (first) {
      box = b;
      first = false;
    } else {
      box.expand(b);
    }
  }
  return box;
}

}  // namespace mateforge
