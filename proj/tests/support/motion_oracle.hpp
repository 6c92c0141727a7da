#pragma once

#include <utility>
#include <vector>

#include "mateforge/motion.hpp"
#include "mateforge/transform.hpp"
#include "random_gen.hpp"

// Transform-sampling oracle for the motion-group algebra. Everything here is
// independent of the compose/intersect tables it validates: it only draws
// concrete rigid motions from groups and classifies the results.
namespace testsupport {

// A random element of the group. Angles are uniform in [-pi/2, pi/2] with
// |angle| < 10 * angle_tol excluded; translations uniform in [-10, 10] model
// units with |t| < 0.1 excluded.
mateforge::RigidTransform sample_element(const mateforge::MotionGroup& g,
                                         Rng& rng,
                                         const mateforge::ToleranceConfig& tol);

// Membership of a concrete motion in a group, decided by screw decomposition.
bool group_contains(const mateforge::MotionGroup& g,
                    const mateforge::RigidTransform& t,
                    const mateforge::ToleranceConfig& tol);

// Classification of {a1 * a2 : ai sampled from gi} over `samples` draws.
mateforge::MotionGroup oracle_compose(const mateforge::MotionGroup& g1,
                                      const mateforge::MotionGroup& g2,
                                      Rng& rng, int samples,
                                      const mateforge::ToleranceConfig& tol);

// Classification of the elements of g1 (sampled per DOF stratum) that are
// also members of g2. Complex arguments are handled by sampling the other
// side, since everything belongs to Complex.
mateforge::MotionGroup oracle_intersect(const mateforge::MotionGroup& g1,
                                        const mateforge::MotionGroup& g2,
                                        Rng& rng, int samples,
                                        const mateforge::ToleranceConfig& tol);

// Random variant with randomized-but-separated axis geometry: per pair, the
// second axis is drawn coincident, parallel-offset, intersecting, or skew,
// with offsets/angles at least 10x the tolerances so every trial is decisive.
// Near-tolerance behavior is covered by dedicated boundary tests.
std::pair<mateforge::MotionGroup, mateforge::MotionGroup> random_group_pair(
    Rng& rng, const mateforge::ToleranceConfig& tol);

}  // namespace testsupport
