#include <cmath>

#include "polyjis/matching.hpp"

namespace polyjis {

namespace {

// Non-negative clamp for discriminants that should vanish in the tangent case.
double clamp_disc(double disc, double scale) {
    if (disc < 0.0 && disc > -1e-12 * std::max(1.0, scale)) return 0.0;
    return disc;
}

// Solve wedge(a, x) = ra, wedge(b, x) = rb for x; wedge(a, b) != 0.
Point2 solve_wedge_system(Point2 a, double ra, Point2 b, double rb) {
    const double det = a.x * b.y - a.y * b.x;
    return {(b.x * ra - a.x * rb) / det, (b.y * ra - a.y * rb) / det};
}

std::vector<Point2> se2_candidates(std::span<const Point2> p, SignaturePoint sp) {
    // |x - p2| = c1 and (x - p1) ^ (p2 - p1) = 2*c2: a circle and a line
    // parallel to the anchor edge.
    const Point2 u = p[1] - p[0];
    const double len2 = dot(u, u);
    const Point2 uperp{-u.y, u.x};
    const double beta = -2.0 * sp.c2 / len2;
    const double disc = clamp_disc(sp.c1 * sp.c1 / len2 - beta * beta,
                                   sp.c1 * sp.c1 / len2 + beta * beta);
    if (disc < 0.0) return {};
    const double root = std::sqrt(disc);
    const Point2 base = p[0] + beta * uperp;
    if (root == 0.0) return {base + 1.0 * u};
    return {base + (1.0 + root) * u, base + (1.0 - root) * u};
}

std::vector<Point2> e2_candidates(std::span<const Point2> p, SignaturePoint sp) {
    // Circles around p3 (radius c1) and p2 (radius |c2|); the sign factor in
    // the invariant picks the side afterwards.
    const Point2 A = p[2], B = p[1];
    const Point2 dvec = A - B;
    const double d = norm(dvec);
    const double r1 = sp.c1, r2 = std::abs(sp.c2);
    const double a = (d * d + r2 * r2 - r1 * r1) / (2.0 * d);
    const double h2 = clamp_disc(r2 * r2 - a * a, r2 * r2 + a * a);
    if (h2 < 0.0) return {};
    const double h = std::sqrt(h2);
    const Point2 e{dvec.x / d, dvec.y / d};
    const Point2 eperp{-e.y, e.x};
    const Point2 foot = B + a * e;
    if (h == 0.0) return {foot};
    return {foot + h * eperp, foot - h * eperp};
}

std::vector<Point2> sa2_like_candidates(std::span<const Point2> p, double c1, double c2) {
    // a234 = c1 and a124 = c2 are linear in the unknown fourth point.
    const Point2 a = p[2] - p[1];
    const Point2 b = p[1] - p[0];
    const double ra = wedge(a, p[2]) - 2.0 * c1;
    const double rb = wedge(b, p[1]) - 2.0 * c2;
    return {solve_wedge_system(a, ra, b, rb)};
}

std::vector<Point2> sim2_candidates(std::span<const Point2> p, SignaturePoint sp) {
    // Frame decomposition along the anchor edge and its perpendicular.
    const Point2 u = p[1] - p[0];
    const Point2 uperp{-u.y, u.x};
    return {p[0] + sp.c2 * u - 2.0 * sp.c1 * uperp};
}

}  // namespace

std::vector<Point2> reconstruct_next(GroupId group, std::span<const Point2> prefix,
                                     SignaturePoint sp) {
    const std::size_t na = static_cast<std::size_t>(anchor_size(group));
    if (prefix.size() != na) throw LengthMismatch(prefix.size(), na);
    if (na == 2) {
        if (coincident(prefix[0], prefix[1])) throw DegenerateAnchor("coincident anchor points");
    } else {
        if (collinear(prefix[0], prefix[1], prefix[2]))
            throw DegenerateAnchor("collinear anchor triple");
    }

    std::vector<Point2> candidates;
    switch (group) {
        case GroupId::SE2: candidates = se2_candidates(prefix, sp); break;
        case GroupId::E2: candidates = e2_candidates(prefix, sp); break;
        case GroupId::SA2: candidates = sa2_like_candidates(prefix, sp.c1, sp.c2); break;
        case GroupId::SKA2: {
            const double s = signed_area3(prefix[0], prefix[1], prefix[2]) > 0.0 ? 1.0 : -1.0;
            candidates = sa2_like_candidates(prefix, s * sp.c1, s * sp.c2);
            break;
        }
        case GroupId::SIM2: candidates = sim2_candidates(prefix, sp); break;
    }

    const double vtol = 1e-9 * std::max({1.0, std::abs(sp.c1), std::abs(sp.c2)});
    std::vector<Point2> out;
    std::vector<Point2> window(prefix.begin(), prefix.end());
    window.push_back({});
    for (const Point2& x : candidates) {
        window.back() = x;
        SignaturePoint got;
        try {
            got = window_invariant(group, window);
        } catch (const Error&) {
            continue;
        }
        if (std::abs(got.c1 - sp.c1) > vtol || std::abs(got.c2 - sp.c2) > vtol) continue;
        bool dup = false;
        for (const Point2& y : out) dup = dup || coincident(x, y);
        if (!dup) out.push_back(x);
    }
    if (out.empty()) throw EmptySolution();
    return out;
}

}  // namespace polyjis
