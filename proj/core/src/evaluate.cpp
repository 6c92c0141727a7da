#include "mateforge/evaluate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mateforge/errors.hpp"

namespace mateforge {

namespace {

struct MatchedPair {
  const Mate* truth = nullptr;
  const PairPrediction* prediction = nullptr;
  const Assembly* assembly = nullptr;
};

EvalReport evaluate_matched(const std::vector<MatchedPair>& matched,
                            std::size_t ground_truth_mates,
                            std::size_t unmatched_predictions,
                            std::size_t unmatched_truth,
                            const std::map<const Assembly*,
                                           CandidateAxisSet>& candidates,
                            const ToleranceConfig& tol,
                            std::vector<std::string> notes) {
  EvalReport report;
  report.ground_truth_mates = ground_truth_mates;
  report.matched = matched.size();
  report.unmatched_predictions = unmatched_predictions;
  report.unmatched_truth = unmatched_truth;
  report.notes = std::move(notes);
  if (matched.empty()) return report;

  std::vector<MateType> truth_labels;
  std::size_t type_correct = 0;
  std::size_t axis_correct = 0;
  std::size_t axis_total = 0;
  std::size_t ambiguous = 0;
  std::size_t ambiguous_axis_correct = 0;

  for (const MatchedPair& m : matched) {
    MateType truth_type = *m.truth->mate_type();
    truth_labels.push_back(truth_type);
    report.confusion_matrix[mate_type_index(truth_type)]
                           [mate_type_index(m.prediction->predicted_type)] += 1;
    if (m.prediction->predicted_type == truth_type) type_correct += 1;

    if (m.prediction->chosen_axis) {
      axis_total += 1;
      bool correct = axis_equivalent_for_type(
          truth_type, m.truth->axis, *m.prediction->chosen_axis, tol);
      AxisAmbiguity amb =
          axis_ambiguity(*m.assembly, *m.truth, candidates.at(m.assembly), tol);
      if (correct) axis_correct += 1;
      if (amb.ambiguous) {
        ambiguous += 1;
        if (correct) ambiguous_axis_correct += 1;
      }
    }
  }

  const double n = static_cast<double>(matched.size());
  report.type_accuracy = static_cast<double>(type_correct) / n;

  MateType majority = predict_majority(truth_labels);
  std::size_t majority_count = 0;
  for (MateType t : truth_labels) {
    if (t == majority) majority_count += 1;
  }
  report.majority_baseline_accuracy = static_cast<double>(majority_count) / n;
  report.lift = report.type_accuracy - report.majority_baseline_accuracy;

  if (axis_total > 0) {
    report.axis_accuracy_overall =
        static_cast<double>(axis_correct) / static_cast<double>(axis_total);
    report.ambiguous_fraction =
        static_cast<double>(ambiguous) / static_cast<double>(axis_total);
    if (ambiguous > 0) {
      report.axis_accuracy_ambiguous_only =
          static_cast<double>(ambiguous_axis_correct) /
          static_cast<double>(ambiguous);
    }
  }
  return report;
}

}  // namespace

EvalReport evaluate(const std::vector<PairPrediction>& predictions,
                    const Assembly& ground_truth,
                    const CandidateAxisSet& candidates,
                    const ToleranceConfig& tol) {
  // Same matching as evaluate_corpus, with the supplied candidate set.
  std::map<const Assembly*, CandidateAxisSet> cache;
  cache.emplace(&ground_truth, candidates);

  std::vector<MatchedPair> matched;
  std::vector<std::string> notes;
  std::size_t truth_count = 0;
  std::size_t unmatched_predictions = 0;
  std::size_t unmatched_truth = 0;

  std::map<std::pair<std::string, std::string>, const Mate*> by_pair;
  for (const Mate& m : ground_truth.mates) {
    truth_count += 1;
    if (!m.mate_type()) {
      notes.push_back("skipped mate '" + m.id + "' with type '" + m.type_tag +
                      "'");
      continue;
    }
    by_pair[Assembly::pair_key(m.part_a, m.part_b)] = &m;
  }
  std::set<std::pair<std::string, std::string>> used;
  for (const PairPrediction& p : predictions) {
    auto key = Assembly::pair_key(p.part_a, p.part_b);
    auto it = by_pair.find(key);
    if (it == by_pair.end()) {
      unmatched_predictions += 1;
      notes.push_back("prediction for unmated pair (" + key.first + ", " +
                      key.second + ")");
      continue;
    }
    matched.push_back({it->second, &p, &ground_truth});
    used.insert(key);
  }
  for (const auto& [key, mate] : by_pair) {
    if (!used.contains(key)) {
      unmatched_truth += 1;
      notes.push_back("no prediction for pair (" + key.first + ", " +
                      key.second + ")");
    }
  }
  return evaluate_matched(matched, truth_count, unmatched_predictions,
                          unmatched_truth, cache, tol, std::move(notes));
}

EvalReport evaluate_corpus(
    const std::vector<std::pair<std::vector<PairPrediction>,
                                const Assembly*>>& runs,
    const ToleranceConfig& tol) {
  std::vector<MatchedPair> matched;
  std::vector<std::string> notes;
  std::size_t truth_count = 0;
  std::size_t unmatched_predictions = 0;
  std::size_t unmatched_truth = 0;
  std::map<const Assembly*, CandidateAxisSet> cache;

  for (const auto& [predictions, assembly] : runs) {
    cache.emplace(assembly, extract_candidates(*assembly, tol));
    std::map<std::pair<std::string, std::string>, const Mate*> by_pair;
    for (const Mate& m : assembly->mates) {
      truth_count += 1;
      if (!m.mate_type()) {
        notes.push_back(assembly->id + ": skipped mate '" + m.id +
                        "' with type '" + m.type_tag + "'");
        continue;
      }
      by_pair[Assembly::pair_key(m.part_a, m.part_b)] = &m;
    }
    std::set<std::pair<std::string, std::string>> used;
    for (const PairPrediction& p : predictions) {
      auto key = Assembly::pair_key(p.part_a, p.part_b);
      auto it = by_pair.find(key);
      if (it == by_pair.end()) {
        unmatched_predictions += 1;
        notes.push_back(assembly->id + ": prediction for unmated pair (" +
                        key.first + ", " + key.second + ")");
        continue;
      }
      matched.push_back({it->second, &p, assembly});
      used.insert(key);
    }
    for (const auto& [key, mate] : by_pair) {
      if (!used.contains(key)) {
        unmatched_truth += 1;
        notes.push_back(assembly->id + ": no prediction for pair (" +
                        key.first + ", " + key.second + ")");
      }
    }
  }
  return evaluate_matched(matched, truth_count, unmatched_predictions,
                          unmatched_truth, cache, tol, std::move(notes));
}

ConsensusResult consensus_labels(
    const std::vector<MateAnnotations>& annotations) {
  ConsensusResult result;
  result.labels.resize(annotations.size());
  result.stats.total_mates = annotations.size();

  std::size_t consensus_with_original = 0;
  std::size_t agree_with_original = 0;

  for (std::size_t i = 0; i < annotations.size(); ++i) {
    const MateAnnotations& a = annotations[i];
    if (a.labels.size() < 2) continue;  // not comparable
    result.stats.comparable += 1;

    std::array<std::size_t, 4> counts{};
    for (MateType t : a.labels) counts[mate_type_index(t)] += 1;
    int best = 0;
    for (int k = 1; k < 4; ++k) {
      if (counts[k] > counts[best]) best = k;
    }
    // Strict majority: the winner must outnumber all others combined.
    if (2 * counts[best] > a.labels.size()) {
      result.labels[i] = mate_type_at(best);
      result.stats.with_consensus += 1;
      if (a.original) {
        consensus_with_original += 1;
        if (*a.original == mate_type_at(best)) agree_with_original += 1;
      }
    }
  }

  if (result.stats.comparable > 0) {
    result.stats.consensus_fraction =
        static_cast<double>(result.stats.with_consensus) /
        static_cast<double>(result.stats.comparable);
  }
  if (consensus_with_original > 0) {
    result.stats.agreement_with_original =
        static_cast<double>(agree_with_original) /
        static_cast<double>(consensus_with_original);
  }
  return result;
}

}  // namespace mateforge
