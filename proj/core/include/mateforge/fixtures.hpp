#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mateforge/assembly.hpp"

namespace mateforge::fixtures {

using Params = std::map<std::string, double>;

// Deterministic synthetic assemblies with known ground-truth mates and known
// pipeline verdicts:
//   telescope      kept; densification adds exactly one revolute
//   hinge_flanged  kept; revolute archetype (flanges block sliding)
//   shaft_hole     kept; cylindrical archetype (free turn and slide)
//   keyed_slider   kept; slider archetype (square section blocks rotation)
//   press_fit      rejected: MovingPart (all fastens; no motion possible)
//   floating_pair  rejected: GeometricConsistency (mated across a gap)
//   compound_pair  rejected: CompoundMate (two mates on one pair)
//   disconnected   rejected: Connectivity (stray unmated part)
//   planar_tagged  rejected: TypeWhitelist (carries a "planar" mate)
//   skew_loop      rejected: DensifyComplex (closing pair motion not simple)
// Throws GeometryError for unknown names.
Assembly generate_fixture(const std::string& name, const Params& params = {},
                          std::uint64_t seed = 0);

// All fixture names in the order above.
const std::vector<std::string>& fixture_names();

}  // namespace mateforge::fixtures
