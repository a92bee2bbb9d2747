#include "polyjis/oracle.hpp"

#include <cmath>
#include <numbers>

#include "polyjis/rng.hpp"

namespace polyjis {

namespace {

constexpr int kMaxRejections = 10000;

bool collinear_with_margin(Point2 p, Point2 q, Point2 r, double margin) {
    return std::abs(signed_area3(p, q, r)) <= margin * collinear_tolerance(p, q, r);
}

// Rotation entries snapped to exact {-1, 0, 1} so fixtures built from integer
// motifs with folds 1, 2 or 4 stay exactly periodic.
Mat2 snapped_rotation(double theta) {
    Mat2 m = Mat2::rotation(theta);
    auto snap = [](double& v) {
        for (double target : {-1.0, 0.0, 1.0})
            if (std::abs(v - target) < 1e-15) v = target;
    };
    snap(m.m00);
    snap(m.m01);
    snap(m.m10);
    snap(m.m11);
    return m;
}

}  // namespace

MatchResult brute_force_equivalent(GroupId group, const Polygon& P, const Polygon& Q, double tol) {
    MatchResult best;
    if (P.size() != Q.size()) return best;
    const int k = P.size();
    const std::size_t na = static_cast<std::size_t>(anchor_size(group));
    const double limit = tol * std::max(1e-300, P.diameter());

    for (const HkElement& h : hk_all(k)) {
        const std::vector<Point2> relabeled = hk_apply(h, Q.vertices);
        auto g = try_recover(group, std::span<const Point2>(relabeled).subspan(0, na),
                             std::span<const Point2>(P.vertices).subspan(0, na),
                             std::max(1e-9, tol));
        if (!g) continue;
        const double r = residual(*g, std::span<const Point2>(relabeled),
                                  std::span<const Point2>(P.vertices));
        if (r > limit) continue;
        if (!best.matched || r < best.residual) best = {true, h, *g, r};
    }
    return best;
}

Polygon random_polygon(int k, std::uint64_t seed, GroupId group) {
    if (k < window_size(group)) throw TooFewVertices(k, window_size(group));
    Rng rng(seed);
    const bool needs_triples =
        group == GroupId::E2 || group == GroupId::SA2 || group == GroupId::SKA2;

    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        std::vector<Point2> pts(static_cast<std::size_t>(k));
        for (Point2& p : pts) p = {rng.uniform01(), rng.uniform01()};

        auto at = [&](int i) { return pts[static_cast<std::size_t>(((i % k) + k) % k)]; };
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) ok = !coincident(at(i), at(i + 1));
        if (ok && needs_triples)
            for (int i = 0; i < k && ok; ++i)
                ok = !collinear_with_margin(at(i), at(i + 1), at(i + 2), 10.0);
        if (ok) return Polygon(std::move(pts));
    }
    throw SamplingFailure(kMaxRejections);
}

Polygon make_symmetric_polygon(const FixtureSpec& spec) {
    if (spec.fold < 1 || spec.motif.empty()) throw Error("fixture needs fold >= 1 and a motif");
    std::vector<Point2> pts;
    pts.reserve(spec.motif.size() * static_cast<std::size_t>(spec.fold));
    for (int j = 0; j < spec.fold; ++j) {
        const Mat2 rot = snapped_rotation(2.0 * std::numbers::pi * j / spec.fold);
        for (const Point2& m : spec.motif) pts.push_back(rot.apply(m));
    }
    if (spec.group_distortion)
        for (Point2& p : pts) p = apply(*spec.group_distortion, p);
    return validate_polygon(pts, GroupId::SE2);
}

Polygon perturb(const Polygon& P, double eps, std::uint64_t seed) {
    if (eps < 0.0) throw Error("perturb: eps must be nonnegative");
    Rng rng(seed);
    std::vector<Point2> pts = P.vertices;
    for (Point2& p : pts) {
        p.x += rng.uniform(-eps, eps);
        p.y += rng.uniform(-eps, eps);
    }
    return validate_polygon(pts, GroupId::SE2);
}

}  // namespace polyjis
