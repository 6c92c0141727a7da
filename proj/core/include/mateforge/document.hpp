#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mateforge/assembly.hpp"
#include "mateforge/evaluate.hpp"
#include "mateforge/pipeline.hpp"
#include "mateforge/predict.hpp"
#include "mateforge/tolerances.hpp"

namespace mateforge::io {

// Assembly document schema v1: versioned JSON with embedded meshes and
// analytic features. Unknown mate-type tags are preserved verbatim. Numbers
// are serialized with the shortest round-trip representation and keys in a
// fixed order, so save(load(save(x))) is byte-identical to save(x).
inline constexpr int kSchemaVersion = 1;

Assembly assembly_from_json(const std::string& text);
std::string assembly_to_json(const Assembly& assembly);

Assembly load_assembly(const std::filesystem::path& path);
void save_assembly(const Assembly& assembly, const std::filesystem::path& path);

ToleranceConfig config_from_json(const std::string& text);
std::string config_to_json(const ToleranceConfig& config);
ToleranceConfig load_config(const std::filesystem::path& path);

// Expert annotation document: {"annotations":[{"mate_id","labels":[...],
// "original": "..."?}, ...]}.
std::vector<MateAnnotations> annotations_from_json(const std::string& text);
std::vector<MateAnnotations> load_annotations(const std::filesystem::path& path);

// Prediction document for one assembly.
struct PredictionDocument {
  std::string assembly_id;
  std::vector<PairPrediction> predictions;
};

PredictionDocument predictions_from_json(const std::string& text);
std::string predictions_to_json(const PredictionDocument& doc);

// Atomic write: temp file in the target directory, then rename.
void write_text_atomic(const std::filesystem::path& path,
                       const std::string& content);
std::string read_text(const std::filesystem::path& path);

// Stable-order JSON fragments used by report writers.
std::string axis_to_json(const AxisLine& axis);
std::string stats_to_json(const CorpusStats& stats);
std::string outcome_to_json(const FilterOutcome& outcome);
std::string eval_report_to_json(const EvalReport& report);

}  // namespace mateforge::io
