#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mateforge/assembly.hpp"
#include "mateforge/candidates.hpp"
#include "mateforge/tolerances.hpp"

namespace mateforge {

enum class Verdict { Kept, Rejected };

// Pipeline stages, evaluated in this order.
enum class Stage {
  MovingPart,
  Connectivity,
  CompoundMate,
  TypeWhitelist,
  GeometricConsistency,
  DensifyComplex,
};

std::string to_string(Stage stage);
std::string to_string(Verdict verdict);

struct FilterOutcome {
  std::string assembly_id;
  Verdict verdict = Verdict::Kept;
  // For rejections, the first failing stage; empty for kept assemblies.
  std::optional<Stage> stage;
  std::string detail;
};

// Kept iff at least one mate's tag is not "fasten".
FilterOutcome filter_moving_part(const Assembly& a);
// Kept iff the mate graph spans all parts in one connected component.
FilterOutcome filter_connectivity(const Assembly& a);
// Rejected iff any unordered part pair carries two or more mates.
FilterOutcome filter_compound(const Assembly& a);
// Rejected iff any mate's tag is outside the four supported types.
FilterOutcome filter_type_whitelist(const Assembly& a);
// Rejected iff a mated pair is out of contact, or (unless relaxed in the
// config) a mate axis coincides with no shared candidate axis.
FilterOutcome filter_geometric_consistency(const Assembly& a,
                                           const CandidateAxisSet& candidates,
                                           const ToleranceConfig& tol);

struct DensifyResult {
  Assembly assembly;
  FilterOutcome outcome;
  std::size_t added_mates = 0;
};

// Adds one mate for every unmated part pair that is in contact and shares a
// candidate axis, typed by the relative motion the existing mates allow.
// Rejects the assembly when any such pair's motion is Complex. New-mate
// axes snap to the nearest coincident shared axis.
DensifyResult densify(const Assembly& a, const CandidateAxisSet& candidates,
                      const ToleranceConfig& tol);

struct CorpusStats {
  std::size_t total = 0;
  std::size_t kept = 0;
  std::map<Stage, std::size_t> rejected_by_stage;
  std::size_t densified_mates = 0;
  std::map<MateType, std::size_t> mate_type_histogram;  // kept, post-densify
  std::size_t mates_total = 0;
  std::size_t mates_ambiguous = 0;
  double axis_ambiguous_fraction = 0.0;

  // Associative, commutative fold so corpus accumulation is order-free.
  void merge(const CorpusStats& o);
};

struct PipelineResult {
  std::vector<Assembly> kept;  // densified, sorted by assembly id
  CorpusStats stats;
  std::vector<FilterOutcome> outcomes;  // sorted by assembly id
};

struct AssemblyOutcome {
  std::optional<Assembly> kept;  // densified assembly when kept
  FilterOutcome outcome;
  CorpusStats stats;  // single-assembly contribution
};

// All stages on one assembly, in order.
AssemblyOutcome process_assembly(const Assembly& a, const ToleranceConfig& tol);

// The full corpus, optionally with a worker pool. Results are deterministic
// and independent of `jobs` and of input order (up to assembly ids).
PipelineResult run_pipeline(const std::vector<Assembly>& corpus,
                            const ToleranceConfig& tol, int jobs = 1);

}  // namespace mateforge
