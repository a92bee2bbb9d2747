#pragma once

#include <span>
#include <vector>

#include "polyjis/geom.hpp"

namespace polyjis {

struct SignaturePoint {
    double c1 = 0.0;
    double c2 = 0.0;

    friend bool operator==(SignaturePoint a, SignaturePoint b) = default;
};

enum class Direction { forward, reversed };

/// Cyclic joint-invariant signature: one point per window start.
struct Signature {
    GroupId group = GroupId::SE2;
    Direction direction = Direction::forward;
    std::vector<SignaturePoint> points;

    int size() const { return static_cast<int>(points.size()); }
};

/// Signature of an open chain: the complete fundamental invariants of the
/// first n-1 points plus the k-n+1 in-order window invariants.
struct OpenSignature {
    GroupId group = GroupId::SE2;
    std::vector<double> anchor;
    std::vector<SignaturePoint> points;
};

// Window invariants. SEJIS admits degenerate windows; the families with sign
// factors or divisions reject windows outside their domain.

/// c1 = |p3-p2|, c2 = det[p3-p1, p2-p1]/2.
SignaturePoint sejis_window(Point2 p1, Point2 p2, Point2 p3);

/// c1 = |p4-p3|, c2 = sign(D123*D234)*|p4-p2|; throws CollinearTriple when
/// either triangle degenerates.
SignaturePoint ejis_window(Point2 p1, Point2 p2, Point2 p3, Point2 p4);

/// c1 = a234, c2 = a124 (signed_area3 convention).
SignaturePoint sajis_window(Point2 p1, Point2 p2, Point2 p3, Point2 p4);

/// c1 = sign(a123*a234)*|a234|, c2 = sign(a123*a124)*|a124|; throws
/// CollinearTriple when a123 vanishes.
SignaturePoint skajis_window(Point2 p1, Point2 p2, Point2 p3, Point2 p4);

/// c1 = a123/|p2-p1|^2, c2 = (p2-p1).(p3-p1)/|p2-p1|^2; throws
/// DuplicateConsecutiveVertices when p1 and p2 coincide.
SignaturePoint simjis_window(Point2 p1, Point2 p2, Point2 p3);

/// Group-generic window invariant; pts.size() must equal window_size(group).
SignaturePoint window_invariant(GroupId group, std::span<const Point2> pts);

/// Full cyclic signature. Point r comes from the window starting at vertex r.
/// direction == reversed computes the signature of the reversed vertex
/// sequence (order reversal is not a group motion). Window domain violations
/// raise the window error annotated with the 1-based window start.
Signature signature(GroupId group, const Polygon& P, Direction direction = Direction::forward);

/// Complete fundamental invariants of an anchor (the first n-1 points of a
/// window): SE2 -> {|p2-p1|}; E2 -> the three pairwise distances;
/// SA2 -> {a123}; SKA2 -> {|a123|}; SIM2 -> {} (the similarity group acts
/// transitively on distinct pairs, so no two-point invariant exists).
std::vector<double> anchor_invariants(GroupId group, std::span<const Point2> pts);

OpenSignature open_signature(GroupId group, std::span<const Point2> chain);
OpenSignature open_signature(GroupId group, const std::vector<Point2>& chain);

/// Guaranteed bound 2*sqrt(2)*eps on the first SEJIS component under
/// per-coordinate perturbations of magnitude at most eps.
double noise_tolerance_se2(double eps);

}  // namespace polyjis
