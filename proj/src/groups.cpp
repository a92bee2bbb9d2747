#include "polyjis/groups.hpp"

#include <cmath>
#include <numbers>

#include "polyjis/rng.hpp"

namespace polyjis {

namespace {

double max_abs(std::initializer_list<double> xs) {
    double m = 0.0;
    for (double x : xs) m = std::max(m, std::abs(x));
    return m;
}

double matrix_scale(const Mat2& m) { return std::max(1.0, max_abs({m.m00, m.m01, m.m10, m.m11})); }

bool orthonormal_within(const Mat2& m, double tol) {
    const double c0 = m.m00 * m.m00 + m.m10 * m.m10;
    const double c1 = m.m01 * m.m01 + m.m11 * m.m11;
    const double cross = m.m00 * m.m01 + m.m10 * m.m11;
    return std::abs(c0 - 1.0) <= tol && std::abs(c1 - 1.0) <= tol && std::abs(cross) <= tol;
}

double span_scale(std::span<const Point2> a, std::span<const Point2> b) {
    double m = 1.0;
    for (const Point2& p : a) m = std::max({m, std::abs(p.x), std::abs(p.y)});
    for (const Point2& p : b) m = std::max({m, std::abs(p.x), std::abs(p.y)});
    return m;
}

// Orthogonal map with the requested determinant sign sending direction u to
// direction w (both nonzero).
Mat2 aligning_orthogonal(Point2 u, Point2 w, bool reflect) {
    if (reflect) u.y = -u.y;  // pre-reflect across the x-axis
    const double theta = std::atan2(w.y, w.x) - std::atan2(u.y, u.x);
    Mat2 r = Mat2::rotation(theta);
    if (!reflect) return r;
    return r * Mat2{1.0, 0.0, 0.0, -1.0};
}

enum class RecoverFail { none, degenerate, no_transform, bad_size };

struct RecoverError {
    RecoverFail kind = RecoverFail::none;
    const char* msg = "";
};

std::optional<GroupElement> recover_impl(GroupId group, std::span<const Point2> src,
                                         std::span<const Point2> dst, double rel_tol,
                                         RecoverError* err) {
    auto fail = [&](RecoverFail kind, const char* msg) -> std::optional<GroupElement> {
        if (err) *err = {kind, msg};
        return std::nullopt;
    };
    auto degenerate = [&](const char* msg) { return fail(RecoverFail::degenerate, msg); };
    auto no_transform = [&](const char* msg) { return fail(RecoverFail::no_transform, msg); };

    const std::size_t want = static_cast<std::size_t>(anchor_size(group));
    if (src.size() != want || dst.size() != want)
        return fail(RecoverFail::bad_size, "wrong correspondence size");

    const double scale = span_scale(src, dst);
    const double tol = rel_tol * scale;

    if (group == GroupId::SE2 || group == GroupId::SIM2) {
        const Point2 u = src[1] - src[0];
        const Point2 w = dst[1] - dst[0];
        const double lu = norm(u), lw = norm(w);
        if (lu <= coincident_tolerance(src[0], src[1])) return degenerate("coincident source anchor");
        double lambda = 1.0;
        if (group == GroupId::SE2) {
            if (std::abs(lu - lw) > tol) return no_transform("anchor distances differ");
        } else {
            if (lw <= tol) return no_transform("coincident destination anchor");
            lambda = lw / lu;
        }
        const double theta = std::atan2(w.y, w.x) - std::atan2(u.y, u.x);
        Mat2 r = Mat2::rotation(theta);
        Mat2 m{lambda * r.m00, lambda * r.m01, lambda * r.m10, lambda * r.m11};
        Point2 v = dst[0] - m.apply(src[0]);
        return GroupElement{group, m, v};
    }

    // Three-point anchors from here on; require a non-degenerate source triangle.
    const Point2 e1 = src[1] - src[0];
    const Point2 e2 = src[2] - src[0];
    if (collinear(src[0], src[1], src[2])) return degenerate("collinear source anchor");

    if (group == GroupId::E2) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (std::abs(dist(src[i], src[j]) - dist(dst[i], dst[j])) > tol)
                    return no_transform("anchor distances differ");
        // Both orientations can pass on noisy data; keep the better fit.
        std::optional<GroupElement> best;
        double best_err = 10.0 * tol;
        for (bool reflect : {false, true}) {
            Mat2 m = aligning_orthogonal(e1, dst[1] - dst[0], reflect);
            Point2 v = dst[0] - m.apply(src[0]);
            const double err = dist(m.apply(src[2]) + v, dst[2]);
            if (err <= best_err) {
                best = GroupElement{group, m, v};
                best_err = err;
            }
        }
        if (best) return *best;
        return no_transform("no orthogonal map fits the third point");
    }

    // SA2 / SKA2: m [e1 e2] = [f1 f2], then v from the first point.
    const Point2 f1 = dst[1] - dst[0];
    const Point2 f2 = dst[2] - dst[0];
    const double d = wedge(e1, e2);
    Mat2 m{(f1.x * e2.y - f2.x * e1.y) / d, (f2.x * e1.x - f1.x * e2.x) / d,
           (f1.y * e2.y - f2.y * e1.y) / d, (f2.y * e1.x - f1.y * e2.x) / d};
    const double det = m.det();
    const double det_tol = std::max(1e-6, rel_tol);
    if (group == GroupId::SA2) {
        if (std::abs(det - 1.0) > det_tol) return no_transform("determinant is not +1");
    } else {
        if (std::abs(std::abs(det) - 1.0) > det_tol) return no_transform("determinant is not +-1");
    }
    // Renormalize so validate_element holds exactly despite rounding.
    const double s = 1.0 / std::sqrt(std::abs(det));
    m = {m.m00 * s, m.m01 * s, m.m10 * s, m.m11 * s};
    Point2 v = dst[0] - m.apply(src[0]);
    return GroupElement{group, m, v};
}

}  // namespace

Mat2 Mat2::rotation(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c, -s, s, c};
}

Mat2 Mat2::inverse() const {
    const double d = det();
    return {m11 / d, -m01 / d, -m10 / d, m00 / d};
}

Point2 apply(const GroupElement& g, Point2 p) { return g.m.apply(p) + g.v; }

Polygon apply(const GroupElement& g, const Polygon& p) {
    Polygon out;
    out.vertices.reserve(p.vertices.size());
    for (const Point2& q : p.vertices) out.vertices.push_back(apply(g, q));
    return out;
}

std::vector<Point2> apply(const GroupElement& g, std::span<const Point2> pts) {
    std::vector<Point2> out;
    out.reserve(pts.size());
    for (const Point2& q : pts) out.push_back(apply(g, q));
    return out;
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
    if (a.group != b.group) throw GroupMismatch();
    return {a.group, a.m * b.m, a.m.apply(b.v) + a.v};
}

GroupElement inverse(const GroupElement& g) {
    Mat2 mi = g.m.inverse();
    Point2 vi = mi.apply(g.v);
    return {g.group, mi, {-vi.x, -vi.y}};
}

bool validate_element(const GroupElement& g, double tol) {
    const Mat2& m = g.m;
    for (double x : {m.m00, m.m01, m.m10, m.m11, g.v.x, g.v.y})
        if (!std::isfinite(x)) return false;
    const double det = m.det();
    switch (g.group) {
        case GroupId::SE2:
            return orthonormal_within(m, tol) && std::abs(det - 1.0) <= tol;
        case GroupId::E2:
            return orthonormal_within(m, tol) && std::abs(std::abs(det) - 1.0) <= tol;
        case GroupId::SA2:
            return std::abs(det - 1.0) <= tol;
        case GroupId::SKA2:
            return std::abs(std::abs(det) - 1.0) <= tol;
        case GroupId::SIM2: {
            const double s = matrix_scale(m);
            return det > 0.0 && std::abs(m.m00 - m.m11) <= tol * s &&
                   std::abs(m.m01 + m.m10) <= tol * s;
        }
    }
    return false;
}

GroupElement random_element(GroupId group, std::uint64_t seed, double translation_range,
                            double scale_range) {
    Rng rng(seed);
    const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    Mat2 m = Mat2::rotation(theta);

    switch (group) {
        case GroupId::SE2: break;
        case GroupId::E2:
            if (rng.coin()) m = m * Mat2{1.0, 0.0, 0.0, -1.0};
            break;
        case GroupId::SIM2: {
            const double l = std::log(scale_range);
            const double lambda = std::exp(rng.uniform(-l, l));
            m = {lambda * m.m00, lambda * m.m01, lambda * m.m10, lambda * m.m11};
            break;
        }
        case GroupId::SA2:
        case GroupId::SKA2: {
            const double s = std::max(0.0, scale_range - 1.0);
            const Mat2 shx{1.0, rng.uniform(-s, s), 0.0, 1.0};
            const Mat2 shy{1.0, 0.0, rng.uniform(-s, s), 1.0};
            m = shx * shy * m;
            const double norm = 1.0 / std::sqrt(std::abs(m.det()));
            m = {m.m00 * norm, m.m01 * norm, m.m10 * norm, m.m11 * norm};
            if (group == GroupId::SKA2 && rng.coin()) m = m * Mat2{1.0, 0.0, 0.0, -1.0};
            break;
        }
    }
    const double t = translation_range;
    Point2 v{rng.uniform(-t, t), rng.uniform(-t, t)};
    return {group, m, v};
}

GroupElement recover(GroupId group, std::span<const Point2> src, std::span<const Point2> dst,
                     double rel_tol) {
    RecoverError err;
    auto g = recover_impl(group, src, dst, rel_tol, &err);
    if (g) return *g;
    if (err.kind == RecoverFail::degenerate) throw DegenerateAnchor(err.msg);
    if (err.kind == RecoverFail::bad_size) throw Error(err.msg);
    throw NoExactTransform(err.msg);
}

std::optional<GroupElement> try_recover(GroupId group, std::span<const Point2> src,
                                        std::span<const Point2> dst, double rel_tol) {
    return recover_impl(group, src, dst, rel_tol, nullptr);
}

double residual(const GroupElement& g, std::span<const Point2> src, std::span<const Point2> dst) {
    if (src.size() != dst.size()) throw LengthMismatch(src.size(), dst.size());
    double r = 0.0;
    for (std::size_t i = 0; i < src.size(); ++i) r = std::max(r, dist(apply(g, src[i]), dst[i]));
    return r;
}

double residual(const GroupElement& g, const Polygon& P, const Polygon& Q) {
    return residual(g, std::span<const Point2>(P.vertices), std::span<const Point2>(Q.vertices));
}

}  // namespace polyjis
