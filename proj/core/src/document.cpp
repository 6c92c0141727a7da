#include "mateforge/document.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include "mateforge/errors.hpp"

namespace mateforge::io {

using ordered_json = nlohmann::ordered_json;

namespace {

double finite_number(const ordered_json& j, const std::string& path) {
  if (!j.is_number()) {
    throw SchemaError(path, "expected a number");
  }
  double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw NonFiniteError(path, "non-finite number");
  }
  return v;
}

Eigen::Vector3d vec3(const ordered_json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) {
    throw SchemaError(path, "expected an array of 3 numbers");
  }
  Eigen::Vector3d v;
  for (int i = 0; i < 3; ++i) {
    v[i] = finite_number(j[i], path + "/" + std::to_string(i));
  }
  return v;
}

const ordered_json& field(const ordered_json& j, const char* key,
                          const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw SchemaError(path + "/" + key, "missing field");
  }
  return *it;
}

std::string string_field(const ordered_json& j, const char* key,
                         const std::string& path) {
  const ordered_json& f = field(j, key, path);
  if (!f.is_string()) {
    throw SchemaError(path + "/" + key, "expected a string");
  }
  return f.get<std::string>();
}

ordered_json vec3_json(const Eigen::Vector3d& v) {
  return ordered_json::array({v.x(), v.y(), v.z()});
}

AxisLine axis_from(const ordered_json& j, const std::string& path) {
  Eigen::Vector3d point = vec3(field(j, "point", path), path + "/point");
  Eigen::Vector3d direction =
      vec3(field(j, "direction", path), path + "/direction");
  if (direction.norm() <= 1e-9) {
    throw SchemaError(path + "/direction", "zero-length direction");
  }
  return canonicalize_line(point, direction);
}

ordered_json axis_json(const AxisLine& axis) {
  ordered_json j;
  j["point"] = vec3_json(axis.point);
  j["direction"] = vec3_json(axis.direction);
  return j;
}

RigidTransform placement_from(const ordered_json& j, const std::string& path) {
  const ordered_json& q = field(j, "quaternion", path);
  if (!q.is_array() || q.size() != 4) {
    throw SchemaError(path + "/quaternion", "expected an array of 4 numbers");
  }
  RigidTransform t;
  double w = finite_number(q[0], path + "/quaternion/0");
  double x = finite_number(q[1], path + "/quaternion/1");
  double y = finite_number(q[2], path + "/quaternion/2");
  double z = finite_number(q[3], path + "/quaternion/3");
  t.rotation = Eigen::Quaterniond(w, x, y, z);
  if (std::abs(t.rotation.norm() - 1.0) > 1e-9) {
    throw SchemaError(path + "/quaternion", "quaternion is not unit length");
  }
  t.translation = vec3(field(j, "translation", path), path + "/translation");
  return t;
}

ordered_json placement_json(const RigidTransform& t) {
  ordered_json j;
  j["quaternion"] = ordered_json::array({t.rotation.w(), t.rotation.x(),
                                         t.rotation.y(), t.rotation.z()});
  j["translation"] = vec3_json(t.translation);
  return j;
}

Feature feature_from(const ordered_json& j, const std::string& path) {
  std::string kind = string_field(j, "kind", path);
  if (kind == "planar_face") {
    PlanarFace face;
    face.centroid = vec3(field(j, "centroid", path), path + "/centroid");
    face.normal = vec3(field(j, "normal", path), path + "/normal");
    return face;
  }
  if (kind == "cylindrical_face") {
    CylindricalFace face;
    face.axis = axis_from(field(j, "axis", path), path + "/axis");
    face.radius = finite_number(field(j, "radius", path), path + "/radius");
    const ordered_json& extent = field(j, "extent", path);
    if (!extent.is_array() || extent.size() != 2) {
      throw SchemaError(path + "/extent", "expected an array of 2 numbers");
    }
    face.extent = {finite_number(extent[0], path + "/extent/0"),
                   finite_number(extent[1], path + "/extent/1")};
    return face;
  }
  throw SchemaError(path + "/kind", "unknown feature kind '" + kind + "'");
}

ordered_json feature_json(const Feature& f) {
  ordered_json j;
  if (const auto* plane = std::get_if<PlanarFace>(&f)) {
    j["kind"] = "planar_face";
    j["centroid"] = vec3_json(plane->centroid);
    j["normal"] = vec3_json(plane->normal);
  } else {
    const auto& cyl = std::get<CylindricalFace>(f);
    j["kind"] = "cylindrical_face";
    j["axis"] = axis_json(cyl.axis);
    j["radius"] = cyl.radius;
    j["extent"] = ordered_json::array({cyl.extent[0], cyl.extent[1]});
  }
  return j;
}

ordered_json parse(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError("malformed JSON document");
  }
  return j;
}

}  // namespace

Assembly assembly_from_json(const std::string& text) {
  ordered_json j = parse(text);
  if (!j.is_object()) throw SchemaError("", "expected a JSON object");

  const ordered_json& version = field(j, "schema_version", "");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
    throw SchemaError("/schema_version", "unsupported schema version");
  }

  Assembly a;
  a.id = string_field(j, "id", "");

  const ordered_json& parts = field(j, "parts", "");
  if (!parts.is_array()) throw SchemaError("/parts", "expected an array");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string path = "/parts/" + std::to_string(i);
    const ordered_json& pj = parts[i];
    if (!pj.is_object()) throw SchemaError(path, "expected an object");
    Part p;
    p.id = string_field(pj, "id", path);
    p.placement = placement_from(field(pj, "placement", path), path + "/placement");

    const ordered_json& mesh = field(pj, "mesh", path);
    const ordered_json& vertices = field(mesh, "vertices", path + "/mesh");
    if (!vertices.is_array()) {
      throw SchemaError(path + "/mesh/vertices", "expected an array");
    }
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      p.mesh.vertices.push_back(
          vec3(vertices[v], path + "/mesh/vertices/" + std::to_string(v)));
    }
    const ordered_json& triangles = field(mesh, "triangles", path + "/mesh");
    if (!triangles.is_array()) {
      throw SchemaError(path + "/mesh/triangles", "expected an array");
    }
    for (std::size_t t = 0; t < triangles.size(); ++t) {
      const ordered_json& tj = triangles[t];
      const std::string tpath = path + "/mesh/triangles/" + std::to_string(t);
      if (!tj.is_array() || tj.size() != 3) {
        throw SchemaError(tpath, "expected an array of 3 indices");
      }
      std::array<int, 3> tri;
      for (int k = 0; k < 3; ++k) {
        if (!tj[k].is_number_integer()) {
          throw SchemaError(tpath + "/" + std::to_string(k),
                            "expected an integer index");
        }
        tri[k] = tj[k].get<int>();
      }
      p.mesh.triangles.push_back(tri);
    }

    if (auto it = pj.find("features"); it != pj.end()) {
      if (!it->is_array()) {
        throw SchemaError(path + "/features", "expected an array");
      }
      for (std::size_t f = 0; f < it->size(); ++f) {
        p.features.push_back(feature_from(
            (*it)[f], path + "/features/" + std::to_string(f)));
      }
    }
    a.parts.push_back(std::move(p));
  }

  const ordered_json& mates = field(j, "mates", "");
  if (!mates.is_array()) throw SchemaError("/mates", "expected an array");
  for (std::size_t i = 0; i < mates.size(); ++i) {
    const std::string path = "/mates/" + std::to_string(i);
    const ordered_json& mj = mates[i];
    if (!mj.is_object()) throw SchemaError(path, "expected an object");
    Mate m;
    m.id = string_field(mj, "id", path);
    m.part_a = string_field(mj, "part_a", path);
    m.part_b = string_field(mj, "part_b", path);
    m.type_tag = string_field(mj, "type", path);  // unknown tags preserved
    m.axis = axis_from(field(mj, "axis", path), path + "/axis");
    if (auto it = mj.find("provenance"); it != mj.end()) {
      if (!it->is_string()) {
        throw SchemaError(path + "/provenance", "expected a string");
      }
      auto p = provenance_from_tag(it->get<std::string>());
      if (!p) {
        throw SchemaError(path + "/provenance", "unknown provenance tag");
      }
      m.provenance = *p;
    }
    a.mates.push_back(std::move(m));
  }

  if (auto it = j.find("metadata"); it != j.end()) {
    if (!it->is_object()) throw SchemaError("/metadata", "expected an object");
    for (const auto& [key, value] : it->items()) {
      if (!value.is_string()) {
        throw SchemaError("/metadata/" + key, "expected a string value");
      }
      a.metadata[key] = value.get<std::string>();
    }
  }

  a.validate();
  return a;
}

std::string assembly_to_json(const Assembly& a) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["id"] = a.id;
  j["parts"] = ordered_json::array();
  for (const Part& p : a.parts) {
    ordered_json pj;
    pj["id"] = p.id;
    pj["placement"] = placement_json(p.placement);
    ordered_json mesh;
    mesh["vertices"] = ordered_json::array();
    for (const auto& v : p.mesh.vertices) {
      mesh["vertices"].push_back(vec3_json(v));
    }
    mesh["triangles"] = ordered_json::array();
    for (const auto& t : p.mesh.triangles) {
      mesh["triangles"].push_back(ordered_json::array({t[0], t[1], t[2]}));
    }
    pj["mesh"] = std::move(mesh);
    pj["features"] = ordered_json::array();
    for (const Feature& f : p.features) {
      pj["features"].push_back(feature_json(f));
    }
    j["parts"].push_back(std::move(pj));
  }
  j["mates"] = ordered_json::array();
  for (const Mate& m : a.mates) {
    ordered_json mj;
    mj["id"] = m.id;
    mj["part_a"] = m.part_a;
    mj["part_b"] = m.part_b;
    mj["type"] = m.type_tag;
    mj["axis"] = axis_json(m.axis);
    mj["provenance"] = to_tag(m.provenance);
    j["mates"].push_back(std::move(mj));
  }
  j["metadata"] = ordered_json::object();
  for (const auto& [key, value] : a.metadata) {
    j["metadata"][key] = value;
  }
  return j.dump(2) + "\n";
}

Assembly load_assembly(const std::filesystem::path& path) {
  return assembly_from_json(read_text(path));
}

void save_assembly(const Assembly& assembly,
                   const std::filesystem::path& path) {
  write_text_atomic(path, assembly_to_json(assembly));
}

ToleranceConfig config_from_json(const std::string& text) {
  ordered_json j = parse(text);
  if (!j.is_object()) throw SchemaError("", "expected a JSON object");
  ToleranceConfig config;

  auto positive = [&](const char* key, double fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    double v = finite_number(*it, std::string("/") + key);
    if (!(v > 0.0)) {
      throw SchemaError(std::string("/") + key, "must be positive");
    }
    return v;
  };

  config.angle_tol = positive("angle_tol", config.angle_tol);
  config.dist_tol = positive("dist_tol", config.dist_tol);
  config.contact_tol_rel = positive("contact_tol_rel", config.contact_tol_rel);
  if (j.contains("contact_tol_abs")) {
    config.contact_tol_abs = positive("contact_tol_abs", 1.0);
  }
  config.penetration_tol_rel =
      positive("penetration_tol_rel", config.penetration_tol_rel);
  if (j.contains("penetration_tol_abs")) {
    config.penetration_tol_abs = positive("penetration_tol_abs", 1.0);
  }

  auto sample_list = [&](const char* key, std::vector<double> fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_array() || it->empty()) {
      throw SchemaError(std::string("/") + key, "expected a nonempty array");
    }
    std::vector<double> values;
    for (std::size_t i = 0; i < it->size(); ++i) {
      double v = finite_number((*it)[i], std::string("/") + key + "/" +
                                             std::to_string(i));
      if (!(v > 0.0)) {
        throw SchemaError(std::string("/") + key, "samples must be positive");
      }
      values.push_back(v);
    }
    return values;
  };
  config.sweep_rotations_deg =
      sample_list("sweep_rotations_deg", config.sweep_rotations_deg);
  config.sweep_translation_fracs =
      sample_list("sweep_translation_fracs", config.sweep_translation_fracs);

  if (auto it = j.find("require_mate_axis_in_candidates"); it != j.end()) {
    if (!it->is_boolean()) {
      throw SchemaError("/require_mate_axis_in_candidates", "expected a bool");
    }
    config.require_mate_axis_in_candidates = it->get<bool>();
  }
  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned() && !it->is_number_integer()) {
      throw SchemaError("/seed", "expected an integer");
    }
    config.seed = it->get<std::uint64_t>();
  }
  return config;
}

std::string config_to_json(const ToleranceConfig& config) {
  ordered_json j;
  j["angle_tol"] = config.angle_tol;
  j["dist_tol"] = config.dist_tol;
  j["contact_tol_rel"] = config.contact_tol_rel;
  j["contact_tol_abs"] =
      config.contact_tol_abs ? ordered_json(*config.contact_tol_abs)
                             : ordered_json(nullptr);
  j["penetration_tol_rel"] = config.penetration_tol_rel;
  j["penetration_tol_abs"] =
      config.penetration_tol_abs ? ordered_json(*config.penetration_tol_abs)
                                 : ordered_json(nullptr);
  j["sweep_rotations_deg"] = config.sweep_rotations_deg;
  j["sweep_translation_fracs"] = config.sweep_translation_fracs;
  j["require_mate_axis_in_candidates"] = config.require_mate_axis_in_candidates;
  j["seed"] = config.seed;
  return j.dump(2) + "\n";
}

ToleranceConfig load_config(const std::filesystem::path& path) {
  return config_from_json(read_text(path));
}

std::vector<MateAnnotations> annotations_from_json(const std::string& text) {
  ordered_json j = parse(text);
  if (!j.is_object()) throw SchemaError("", "expected a JSON object");
  const ordered_json& list = field(j, "annotations", "");
  if (!list.is_array()) throw SchemaError("/annotations", "expected an array");

  std::vector<MateAnnotations> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "/annotations/" + std::to_string(i);
    const ordered_json& aj = list[i];
    MateAnnotations a;
    a.mate_id = string_field(aj, "mate_id", path);
    const ordered_json& labels = field(aj, "labels", path);
    if (!labels.is_array() || labels.empty()) {
      throw SchemaError(path + "/labels", "expected a nonempty array");
    }
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (!labels[k].is_string()) {
        throw SchemaError(path + "/labels/" + std::to_string(k),
                          "expected a string");
      }
      auto type = mate_type_from_tag(labels[k].get<std::string>());
      if (!type) {
        throw SchemaError(path + "/labels/" + std::to_string(k),
                          "unknown mate type tag");
      }
      a.labels.push_back(*type);
    }
    if (auto it = aj.find("original"); it != aj.end()) {
      if (!it->is_string()) {
        throw SchemaError(path + "/original", "expected a string");
      }
      auto type = mate_type_from_tag(it->get<std::string>());
      if (!type) {
        throw SchemaError(path + "/original", "unknown mate type tag");
      }
      a.original = type;
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<MateAnnotations> load_annotations(
    const std::filesystem::path& path) {
  return annotations_from_json(read_text(path));
}

PredictionDocument predictions_from_json(const std::string& text) {
  ordered_json j = parse(text);
  if (!j.is_object()) throw SchemaError("", "expected a JSON object");
  PredictionDocument doc;
  doc.assembly_id = string_field(j, "assembly", "");
  const ordered_json& list = field(j, "predictions", "");
  if (!list.is_array()) throw SchemaError("/predictions", "expected an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "/predictions/" + std::to_string(i);
    const ordered_json& pj = list[i];
    PairPrediction p;
    p.part_a = string_field(pj, "part_a", path);
    p.part_b = string_field(pj, "part_b", path);
    auto type = mate_type_from_tag(string_field(pj, "type", path));
    if (!type) throw SchemaError(path + "/type", "unknown mate type tag");
    p.predicted_type = *type;
    const ordered_json& scores = field(pj, "scores", path);
    for (int k = 0; k < 4; ++k) {
      const std::string tag = to_tag(mate_type_at(k));
      p.score_per_type[k] =
          finite_number(field(scores, tag.c_str(), path + "/scores"),
                        path + "/scores/" + tag);
    }
    if (auto it = pj.find("axis"); it != pj.end() && !it->is_null()) {
      p.chosen_axis = axis_from(*it, path + "/axis");
    }
    doc.predictions.push_back(std::move(p));
  }
  return doc;
}

std::string predictions_to_json(const PredictionDocument& doc) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["assembly"] = doc.assembly_id;
  j["predictions"] = ordered_json::array();
  for (const PairPrediction& p : doc.predictions) {
    ordered_json pj;
    pj["part_a"] = p.part_a;
    pj["part_b"] = p.part_b;
    pj["type"] = to_tag(p.predicted_type);
    ordered_json scores;
    for (int k = 0; k < 4; ++k) {
      scores[to_tag(mate_type_at(k))] = p.score_per_type[k];
    }
    pj["scores"] = std::move(scores);
    pj["axis"] = p.chosen_axis ? axis_json(*p.chosen_axis)
                               : ordered_json(nullptr);
    j["predictions"].push_back(std::move(pj));
  }
  return j.dump(2) + "\n";
}

void write_text_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error("cannot open '" + tmp.string() + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      throw Error("failed writing '" + tmp.string() + "'");
    }
  }
  std::filesystem::rename(tmp, path);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string axis_to_json(const AxisLine& axis) {
  return axis_json(axis).dump();
}

std::string stats_to_json(const CorpusStats& stats) {
  ordered_json j;
  j["total"] = stats.total;
  j["kept"] = stats.kept;
  ordered_json by_stage;
  for (Stage stage :
       {Stage::MovingPart, Stage::Connectivity, Stage::CompoundMate,
        Stage::TypeWhitelist, Stage::GeometricConsistency,
        Stage::DensifyComplex}) {
    auto it = stats.rejected_by_stage.find(stage);
    by_stage[to_string(stage)] = it == stats.rejected_by_stage.end()
                                     ? std::size_t{0}
                                     : it->second;
  }
  j["rejected_by_stage"] = std::move(by_stage);
  j["densified_mates"] = stats.densified_mates;
  ordered_json histogram;
  for (MateType type : kMateTypes) {
    auto it = stats.mate_type_histogram.find(type);
    histogram[to_tag(type)] =
        it == stats.mate_type_histogram.end() ? std::size_t{0} : it->second;
  }
  j["mate_type_histogram"] = std::move(histogram);
  j["mates_total"] = stats.mates_total;
  j["mates_ambiguous"] = stats.mates_ambiguous;
  j["axis_ambiguous_fraction"] = stats.axis_ambiguous_fraction;
  return j.dump();
}

std::string outcome_to_json(const FilterOutcome& outcome) {
  ordered_json j;
  j["assembly"] = outcome.assembly_id;
  j["verdict"] = to_string(outcome.verdict);
  j["stage"] = outcome.stage ? ordered_json(to_string(*outcome.stage))
                             : ordered_json(nullptr);
  j["detail"] = outcome.detail;
  return j.dump();
}

std::string eval_report_to_json(const EvalReport& report) {
  ordered_json j;
  ordered_json counts;
  counts["ground_truth_mates"] = report.ground_truth_mates;
  counts["matched"] = report.matched;
  counts["unmatched_predictions"] = report.unmatched_predictions;
  counts["unmatched_truth"] = report.unmatched_truth;
  j["counts"] = std::move(counts);

  ordered_json metrics;
  metrics["type_accuracy"] = report.type_accuracy;
  metrics["majority_baseline_accuracy"] = report.majority_baseline_accuracy;
  metrics["lift"] = report.lift;
  metrics["axis_accuracy_overall"] = report.axis_accuracy_overall;
  metrics["axis_accuracy_ambiguous_only"] =
      report.axis_accuracy_ambiguous_only
          ? ordered_json(*report.axis_accuracy_ambiguous_only)
          : ordered_json(nullptr);
  metrics["ambiguous_fraction"] = report.ambiguous_fraction;
  ordered_json confusion = ordered_json::array();
  for (const auto& row : report.confusion_matrix) {
    confusion.push_back(ordered_json::array({row[0], row[1], row[2], row[3]}));
  }
  metrics["confusion_matrix"] = std::move(confusion);
  metrics["expert_agreement"] =
      report.expert_agreement ? ordered_json(*report.expert_agreement)
                              : ordered_json(nullptr);
  j["metrics"] = std::move(metrics);
  j["notes"] = report.notes;
  return j.dump();
}

}  // namespace mateforge::io
