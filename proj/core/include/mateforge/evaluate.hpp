#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mateforge/ambiguity.hpp"
#include "mateforge/assembly.hpp"
#include "mateforge/candidates.hpp"
#include "mateforge/predict.hpp"

namespace mateforge {

// One prediction for a ground-truth mate, matched by unordered part pair.
struct PairPrediction {
  std::string part_a;
  std::string part_b;
  MateType predicted_type = MateType::Fasten;
  std::array<double, 4> score_per_type{};
  std::optional<AxisLine> chosen_axis;
};

struct EvalReport {
  std::size_t ground_truth_mates = 0;
  std::size_t matched = 0;
  std::size_t unmatched_predictions = 0;
  std::size_t unmatched_truth = 0;

  double type_accuracy = 0.0;
  double majority_baseline_accuracy = 0.0;
  double lift = 0.0;  // type_accuracy - majority_baseline_accuracy

  double axis_accuracy_overall = 0.0;
  std::optional<double> axis_accuracy_ambiguous_only;
  double ambiguous_fraction = 0.0;

  // Rows: ground truth, columns: prediction; fixed type order.
  std::array<std::array<std::size_t, 4>, 4> confusion_matrix{};

  std::optional<double> expert_agreement;

  std::vector<std::string> notes;  // unmatched pairs, missing axes, ...
};

// Scores predictions against ground-truth mates. Axis correctness follows
// the per-type equivalence rules (axis_equivalent_for_type); the ambiguity
// stats come from axis_ambiguity over `candidates`. Mates whose tag is not
// one of the four supported types are skipped with a note.
EvalReport evaluate(const std::vector<PairPrediction>& predictions,
                    const Assembly& ground_truth,
                    const CandidateAxisSet& candidates,
                    const ToleranceConfig& tol);

// Corpus-level variant: pools matched pairs across assemblies so accuracy,
// baseline, and lift are per-mate over the whole corpus.
EvalReport evaluate_corpus(
    const std::vector<std::pair<std::vector<PairPrediction>,
                                const Assembly*>>& runs,
    const ToleranceConfig& tol);

// Expert annotations for one mate.
struct MateAnnotations {
  std::string mate_id;
  std::vector<MateType> labels;
  std::optional<MateType> original;
};

struct ConsensusStats {
  std::size_t total_mates = 0;
  std::size_t comparable = 0;      // >= 2 annotations
  std::size_t with_consensus = 0;  // strict majority exists
  double consensus_fraction = 0.0; // with_consensus / comparable
  // Among consensus mates with an original label: agreement rate.
  std::optional<double> agreement_with_original;
};

struct ConsensusResult {
  // Aligned with the input; empty when no strict majority or < 2 labels.
  std::vector<std::optional<MateType>> labels;
  ConsensusStats stats;
};

ConsensusResult consensus_labels(const std::vector<MateAnnotations>& annotations);

}  // namespace mateforge
