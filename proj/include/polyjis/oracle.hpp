#pragma once

#include <cstdint>
#include <optional>

#include "polyjis/matching.hpp"

namespace polyjis {

/// Recipe for a polygon with exact f-fold rotational symmetry: f rotated
/// copies of the motif, optionally distorted by a group element afterwards.
struct FixtureSpec {
    int fold = 1;
    std::vector<Point2> motif;
    std::optional<GroupElement> group_distortion;
};

/// Ground-truth equivalence by exhaustive search over all 2k relabelings:
/// recover g from the anchor correspondence, verify the full residual at
/// tol * diameter(P), return the best verifying candidate. Never consults
/// signatures. Conventions match equivalence_test (g maps relabeled Q onto P).
MatchResult brute_force_equivalent(GroupId group, const Polygon& P, const Polygon& Q, double tol);

/// Rejection-samples vertex sequences in the unit box until the group's
/// polygon domain holds with margin (collinearity margin 10x). Deterministic
/// in seed.
Polygon random_polygon(int k, std::uint64_t seed, GroupId group);

Polygon make_symmetric_polygon(const FixtureSpec& spec);

/// Displaces every coordinate by an independent uniform draw from
/// [-eps, eps]; deterministic in seed. Throws if the result fails the basic
/// polygon checks.
Polygon perturb(const Polygon& P, double eps, std::uint64_t seed);

}  // namespace polyjis
