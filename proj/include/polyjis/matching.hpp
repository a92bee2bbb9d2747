#pragma once

#include <optional>
#include <vector>

#include "polyjis/groups.hpp"
#include "polyjis/signatures.hpp"

namespace polyjis {

/// Verdict of an equivalence test. When matched,
/// apply(g, hk_apply(h, Q.vertices)) aligns with P within residual.
struct MatchResult {
    bool matched = false;
    HkElement h;
    GroupElement g;
    double residual = 0.0;
};

enum class AxisType { vertex, edge_midpoint };

/// Line given by a point and a unit direction. Reported axes normalize the
/// direction into the upper half-plane and place the point at the foot of the
/// perpendicular from the polygon centroid.
struct Line {
    Point2 point;
    Point2 direction;
};

/// Orientation-reversing self-equivalence: the relabeling (shift, reversed)
/// whose recovered g has det(m) = -1. g maps the relabeled polygon onto the
/// original. axis_type reflects the relabeling's fixed structure: vertex when
/// some vertex is fixed, edge_midpoint otherwise.
struct ReflectionMatch {
    int shift = 0;
    AxisType axis_type = AxisType::vertex;
    GroupElement g;
    double residual = 0.0;
    std::optional<Line> axis;  // filled for E2
};

struct SymmetryReport {
    int folds = 1;
    std::vector<int> rotation_shifts;
    std::vector<ReflectionMatch> reflection_matches;
};

/// Piece-to-piece equivalence. Indices are 1-based; apply(g, piece of P)
/// aligns with the piece of Q within residual. When reversed, the Q piece runs
/// backwards from start_q.
struct PartialMatch {
    int start_p = 1;
    int start_q = 1;
    int length = 0;
    bool reversed = false;
    GroupElement g;
    double residual = 0.0;
};

/// All shifts c with a == hk_apply((c, false), b) componentwise within tol.
/// tol == 0 runs the linear-time doubled-sequence search on exact values;
/// tol > 0 compares all shifts directly.
std::vector<int> cyclic_match(const Signature& a, const Signature& b, double tol);

/// Linear-time variant: components are quantized to integer multiples of
/// quantum (quantum == 0 compares raw values) and matched exactly. Exact for
/// exactly-representable inputs only.
std::vector<int> cyclic_match_quantized(const Signature& a, const Signature& b, double quantum);

/// Signature match against both traversal directions of Q, then transform
/// recovery from the anchor correspondence and a residual check at
/// tol * diameter(P). Returns the first verified candidate (smallest shift,
/// forward before reversed).
MatchResult equivalence_test(GroupId group, const Polygon& P, const Polygon& Q, double tol);

/// Exhaustive variant: every verified candidate in tie-break order.
std::vector<MatchResult> equivalence_candidates(GroupId group, const Polygon& P, const Polygon& Q,
                                                double tol);

/// k divided by the smallest cyclic period of the signature points (within
/// componentwise tol).
int rotational_folds(const Signature& sig, double tol);

/// Orientation-reversing self-matches; group must be E2 or SKA2.
std::vector<ReflectionMatch> reflection_self_matches(GroupId group, const Polygon& P, double tol);

/// Fixed lines of the verified E2 reflection self-matches. The caller is
/// responsible for the polygon being simple.
std::vector<Line> reflection_axes_e2(const Polygon& P, double tol);

SymmetryReport symmetry_report(GroupId group, const Polygon& P, double tol);

/// All maximal runs of >= min_len consecutive vertices where the anchor
/// invariants at the run start and all interior window invariants agree
/// within tol, each verified by transform recovery and a residual check.
std::vector<PartialMatch> partial_match(GroupId group, const Polygon& P, const Polygon& Q,
                                        int min_len, double tol);

/// Equivalence of open chains (equal length, no relabeling freedom): anchor
/// and window invariants within tol, then recovery and residual check.
MatchResult open_equivalence_test(GroupId group, std::span<const Point2> p,
                                  std::span<const Point2> q, double tol);

/// All points x whose window invariant over (prefix, x) equals sp within
/// 1e-9 relative. Unique for E2/SA2/SKA2/SIM2 on their domains; SE2 yields up
/// to two. Throws DegenerateAnchor or EmptySolution.
std::vector<Point2> reconstruct_next(GroupId group, std::span<const Point2> prefix,
                                     SignaturePoint sp);

}  // namespace polyjis
