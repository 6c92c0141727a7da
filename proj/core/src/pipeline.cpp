#include "mateforge/pipeline.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <thread>

#include "mateforge/ambiguity.hpp"
#include "mateforge/contact.hpp"
#include "mateforge/errors.hpp"
#include "mateforge/motion.hpp"

namespace mateforge {

std::string to_string(Stage stage) {
  switch (stage) {
    case Stage::MovingPart: return "moving_part";
    case Stage::Connectivity: return "connectivity";
    case Stage::CompoundMate: return "compound_mate";
    case Stage::TypeWhitelist: return "type_whitelist";
    case Stage::GeometricConsistency: return "geometric_consistency";
    case Stage::DensifyComplex: return "densify_complex";
  }
  return "densify_complex";
}

std::string to_string(Verdict verdict) {
  return verdict == Verdict::Kept ? "kept" : "rejected";
}

namespace {

FilterOutcome kept(const Assembly& a, std::string detail = {}) {
  return {a.id, Verdict::Kept, std::nullopt, std::move(detail)};
}

FilterOutcome rejected(const Assembly& a, Stage stage, std::string detail) {
  return {a.id, Verdict::Rejected, stage, std::move(detail)};
}

}  // namespace

FilterOutcome filter_moving_part(const Assembly& a) {
  for (const Mate& m : a.mates) {
    if (m.type_tag != to_tag(MateType::Fasten)) {
      return kept(a);
    }
  }
  return rejected(a, Stage::MovingPart, "no mate allows motion");
}

FilterOutcome filter_connectivity(const Assembly& a) {
  if (a.parts.size() <= 1) return kept(a);
  std::map<std::string, int> index;
  for (const Part& p : a.parts) {
    index.emplace(p.id, static_cast<int>(index.size()));
  }
  std::vector<std::vector<int>> adjacency(a.parts.size());
  for (const Mate& m : a.mates) {
    int u = index.at(m.part_a);
    int v = index.at(m.part_b);
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  std::vector<char> seen(a.parts.size(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  std::size_t visited = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adjacency[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        visited += 1;
        queue.push_back(v);
      }
    }
  }
  if (visited != a.parts.size()) {
    return rejected(a, Stage::Connectivity,
                    std::to_string(a.parts.size() - visited) +
                        " part(s) outside the mated component");
  }
  return kept(a);
}

FilterOutcome filter_compound(const Assembly& a) {
  std::map<std::pair<std::string, std::string>, std::size_t> counts;
  for (const Mate& m : a.mates) {
    counts[Assembly::pair_key(m.part_a, m.part_b)] += 1;
  }
  for (const auto& [pair, count] : counts) {
    if (count >= 2) {
      return rejected(a, Stage::CompoundMate,
                      "pair (" + pair.first + ", " + pair.second + ") has " +
                          std::to_string(count) + " mates");
    }
  }
  return kept(a);
}

FilterOutcome filter_type_whitelist(const Assembly& a) {
  for (const Mate& m : a.mates) {
    if (!m.mate_type()) {
      return rejected(a, Stage::TypeWhitelist,
                      "mate '" + m.id + "' has type '" + m.type_tag + "'");
    }
  }
  return kept(a);
}

FilterOutcome filter_geometric_consistency(const Assembly& a,
                                           const CandidateAxisSet& candidates,
                                           const ToleranceConfig& tol) {
  const double contact_tol = tol.contact_tol(a.bounding_box().diagonal());
  for (const Mate& m : a.mates) {
    const Part& pa = a.part(m.part_a);
    const Part& pb = a.part(m.part_b);
    ContactReport contact = min_distance(pa, pb, contact_tol);
    if (!contact.in_contact) {
      return rejected(a, Stage::GeometricConsistency,
                      "mate '" + m.id + "' spans a gap of " +
                          std::to_string(contact.min_distance));
    }
    if (tol.require_mate_axis_in_candidates) {
      bool on_candidate = false;
      for (const AxisLine& shared : shared_axes(pa, pb, candidates, tol)) {
        if (lines_coincident(shared, m.axis, tol)) {
          on_candidate = true;
          break;
        }
      }
      if (!on_candidate) {
        return rejected(a, Stage::GeometricConsistency,
                        "mate '" + m.id +
                            "' axis matches no shared candidate axis");
      }
    }
  }
  return kept(a);
}

DensifyResult densify(const Assembly& a, const CandidateAxisSet& candidates,
                      const ToleranceConfig& tol) {
  const double contact_tol = tol.contact_tol(a.bounding_box().diagonal());

  std::set<std::pair<std::string, std::string>> mated;
  for (const Mate& m : a.mates) {
    mated.insert(Assembly::pair_key(m.part_a, m.part_b));
  }

  std::vector<std::string> part_ids;
  for (const Part& p : a.parts) part_ids.push_back(p.id);
  std::sort(part_ids.begin(), part_ids.end());

  DensifyResult result{a, kept(a), 0};
  std::size_t serial = 0;

  for (std::size_t i = 0; i < part_ids.size(); ++i) {
    for (std::size_t j = i + 1; j < part_ids.size(); ++j) {
      auto key = Assembly::pair_key(part_ids[i], part_ids[j]);
      if (mated.contains(key)) continue;
      const Part& pa = a.part(key.first);
      const Part& pb = a.part(key.second);
      if (!min_distance(pa, pb, contact_tol).in_contact) continue;
      std::vector<AxisLine> shared = shared_axes(pa, pb, candidates, tol);
      if (shared.empty()) continue;

      // Qualifying pair: derive its motion from the original mate graph.
      MotionGroup motion = relative_motion(a, key.first, key.second, tol);
      auto type = group_to_mate_type(motion);
      if (!type) {
        result.outcome = rejected(
            a, Stage::DensifyComplex,
            "pair (" + key.first + ", " + key.second +
                ") derives a non-simple motion");
        return result;
      }

      AxisLine axis;
      std::string note;
      switch (*type) {
        case MateType::Fasten:
          axis = shared.front();
          break;
        case MateType::Slider: {
          // Only direction matters; pick the first shared axis with it.
          bool found = false;
          for (const AxisLine& s : shared) {
            if (directions_parallel(s.direction, motion.direction(), tol)) {
              axis = s;
              found = true;
              break;
            }
          }
          if (!found) {
            axis = canonicalize_line(Eigen::Vector3d::Zero(),
                                     motion.direction());
            note = "no shared axis parallel to derived direction";
          }
          break;
        }
        case MateType::Revolute:
        case MateType::Cylindrical: {
          // Snap to the nearest coincident shared axis; keep the derived
          // line when none coincides.
          bool found = false;
          double best = 0.0;
          for (const AxisLine& s : shared) {
            if (!lines_coincident(s, motion.axis(), tol)) continue;
            double d = line_line_distance(s, motion.axis());
            if (!found || d < best) {
              axis = s;
              best = d;
              found = true;
            }
          }
          if (!found) {
            axis = motion.axis();
            note = "derived axis coincides with no shared axis";
          }
          break;
        }
      }

      Mate mate = Mate::make("densified_" + std::to_string(serial++) + "_" +
                                 key.first + "_" + key.second,
                             key.first, key.second, *type, axis,
                             Provenance::Densified);
      result.assembly.mates.push_back(mate);
      result.added_mates += 1;
      if (!note.empty()) {
        result.outcome.detail += (result.outcome.detail.empty() ? "" : "; ") +
                                 mate.id + ": " + note;
      }
    }
  }

  if (result.outcome.detail.empty()) {
    result.outcome.detail =
        "added " + std::to_string(result.added_mates) + " mate(s)";
  }
  return result;
}

void CorpusStats::merge(const CorpusStats& o) {
  total += o.total;
  kept += o.kept;
  for (const auto& [stage, count] : o.rejected_by_stage) {
    rejected_by_stage[stage] += count;
  }
  densified_mates += o.densified_mates;
  for (const auto& [type, count] : o.mate_type_histogram) {
    mate_type_histogram[type] += count;
  }
  mates_total += o.mates_total;
  mates_ambiguous += o.mates_ambiguous;
  axis_ambiguous_fraction =
      mates_total == 0
          ? 0.0
          : static_cast<double>(mates_ambiguous) / static_cast<double>(mates_total);
}

AssemblyOutcome process_assembly(const Assembly& a,
                                 const ToleranceConfig& tol) {
  AssemblyOutcome out;
  out.stats.total = 1;

  auto reject = [&](FilterOutcome outcome) {
    out.outcome = std::move(outcome);
    out.stats.rejected_by_stage[*out.outcome.stage] += 1;
  };

  FilterOutcome outcome = filter_moving_part(a);
  if (outcome.verdict == Verdict::Rejected) {
    reject(outcome);
    return out;
  }
  outcome = filter_connectivity(a);
  if (outcome.verdict == Verdict::Rejected) {
    reject(outcome);
    return out;
  }
  outcome = filter_compound(a);
  if (outcome.verdict == Verdict::Rejected) {
    reject(outcome);
    return out;
  }
  outcome = filter_type_whitelist(a);
  if (outcome.verdict == Verdict::Rejected) {
    reject(outcome);
    return out;
  }

  CandidateAxisSet candidates = extract_candidates(a, tol);
  outcome = filter_geometric_consistency(a, candidates, tol);
  if (outcome.verdict == Verdict::Rejected) {
    reject(outcome);
    return out;
  }

  DensifyResult densified = densify(a, candidates, tol);
  if (densified.outcome.verdict == Verdict::Rejected) {
    reject(densified.outcome);
    return out;
  }

  out.kept = densified.assembly;
  out.outcome = densified.outcome;
  out.stats.kept = 1;
  out.stats.densified_mates = densified.added_mates;
  for (const Mate& m : out.kept->mates) {
    auto type = m.mate_type();
    if (type) out.stats.mate_type_histogram[*type] += 1;
    out.stats.mates_total += 1;
    if (axis_ambiguity(*out.kept, m, candidates, tol).ambiguous) {
      out.stats.mates_ambiguous += 1;
    }
  }
  out.stats.axis_ambiguous_fraction =
      out.stats.mates_total == 0
          ? 0.0
          : static_cast<double>(out.stats.mates_ambiguous) /
                static_cast<double>(out.stats.mates_total);
  return out;
}

PipelineResult run_pipeline(const std::vector<Assembly>& corpus,
                            const ToleranceConfig& tol, int jobs) {
  std::vector<AssemblyOutcome> outcomes(corpus.size());

  jobs = std::max(1, jobs);
  if (jobs == 1 || corpus.size() <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      outcomes[i] = process_assembly(corpus[i], tol);
    }
  } else {
    std::vector<std::thread> workers;
    std::size_t stride =
        (corpus.size() + static_cast<std::size_t>(jobs) - 1) /
        static_cast<std::size_t>(jobs);
    for (int w = 0; w < jobs; ++w) {
      std::size_t begin = static_cast<std::size_t>(w) * stride;
      std::size_t end = std::min(corpus.size(), begin + stride);
      if (begin >= end) break;
      workers.emplace_back([&, begin, end] {
        for (std::size_t i = begin; i < end; ++i) {
          outcomes[i] = process_assembly(corpus[i], tol);
        }
      });
    }
    for (auto& t : workers) t.join();
  }

  // Fold in id order so the result is independent of input order and jobs.
  std::vector<std::size_t> order(corpus.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    if (corpus[l].id != corpus[r].id) return corpus[l].id < corpus[r].id;
    return l < r;
  });

  PipelineResult result;
  for (std::size_t i : order) {
    AssemblyOutcome& out = outcomes[i];
    result.stats.merge(out.stats);
    result.outcomes.push_back(out.outcome);
    if (out.kept) result.kept.push_back(std::move(*out.kept));
  }
  return result;
}

}  // namespace mateforge
