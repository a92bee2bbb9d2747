#include "polyjis/signatures.hpp"

#include <cmath>

#include "polyjis/kernels.hpp"

#include "kernels_common.hpp"

namespace polyjis {

namespace {

using kernels::BatchFn;

BatchFn family_kernel(GroupId group) {
    const kernels::KernelTable& t = kernels::active_table();
    switch (group) {
        case GroupId::SE2: return t.sejis;
        case GroupId::E2: return t.ejis;
        case GroupId::SA2: return t.sajis;
        case GroupId::SKA2: return t.skajis;
        case GroupId::SIM2: return t.simjis;
    }
    return t.sejis;
}

// Window domain checks; `base` maps a local offset to the 1-based window
// label used in errors.
void check_windows(GroupId group, const double* x, const double* y, std::size_t count,
                   std::size_t base) {
    auto pt = [&](std::size_t i) { return Point2{x[i], y[i]}; };
    auto label = [&](std::size_t i) { return static_cast<int>(base + i) + 1; };
    switch (group) {
        case GroupId::SE2:
        case GroupId::SA2:
            return;  // total on all windows
        case GroupId::E2:
            for (std::size_t i = 0; i < count; ++i) {
                if (collinear(pt(i), pt(i + 1), pt(i + 2))) throw CollinearTriple(label(i));
                if (collinear(pt(i + 1), pt(i + 2), pt(i + 3))) throw CollinearTriple(label(i));
            }
            return;
        case GroupId::SKA2:
            for (std::size_t i = 0; i < count; ++i)
                if (collinear(pt(i), pt(i + 1), pt(i + 2))) throw CollinearTriple(label(i));
            return;
        case GroupId::SIM2:
            for (std::size_t i = 0; i < count; ++i)
                if (coincident(pt(i), pt(i + 1))) throw DuplicateConsecutiveVertices(label(i));
            return;
    }
}

// Windows are streamed through fixed-size coordinate blocks so the scratch
// stays cache-resident no matter how large the polygon is.
constexpr std::size_t kChunk = 1024;

std::vector<SignaturePoint> run_windows(GroupId group, std::span<const Point2> pts,
                                        std::size_t count, bool wrap) {
    const std::size_t pad = static_cast<std::size_t>(window_size(group)) - 1;
    const kernels::BatchFn kernel = family_kernel(group);

    std::vector<SignaturePoint> out(count);
    double x[kChunk + 3], y[kChunk + 3], c1[kChunk], c2[kChunk];

    for (std::size_t start = 0; start < count; start += kChunk) {
        const std::size_t n = std::min(kChunk, count - start);
        for (std::size_t i = 0; i < n + pad; ++i) {
            const std::size_t src = wrap ? (start + i) % pts.size() : start + i;
            x[i] = pts[src].x;
            y[i] = pts[src].y;
        }
        check_windows(group, x, y, n, start);
        kernel(x, y, n, c1, c2);
        for (std::size_t i = 0; i < n; ++i) out[start + i] = {c1[i], c2[i]};
    }
    return out;
}

}  // namespace

SignaturePoint sejis_window(Point2 p1, Point2 p2, Point2 p3) {
    const double x[3] = {p1.x, p2.x, p3.x}, y[3] = {p1.y, p2.y, p3.y};
    SignaturePoint s;
    kernels::detail::sejis_one(x, y, 0, s.c1, s.c2);
    return s;
}

SignaturePoint ejis_window(Point2 p1, Point2 p2, Point2 p3, Point2 p4) {
    if (collinear(p1, p2, p3) || collinear(p2, p3, p4)) throw CollinearTriple(1);
    const double x[4] = {p1.x, p2.x, p3.x, p4.x}, y[4] = {p1.y, p2.y, p3.y, p4.y};
    SignaturePoint s;
    kernels::detail::ejis_one(x, y, 0, s.c1, s.c2);
    return s;
}

SignaturePoint sajis_window(Point2 p1, Point2 p2, Point2 p3, Point2 p4) {
    const double x[4] = {p1.x, p2.x, p3.x, p4.x}, y[4] = {p1.y, p2.y, p3.y, p4.y};
    SignaturePoint s;
    kernels::detail::sajis_one(x, y, 0, s.c1, s.c2);
    return s;
}

SignaturePoint skajis_window(Point2 p1, Point2 p2, Point2 p3, Point2 p4) {
    if (collinear(p1, p2, p3)) throw CollinearTriple(1);
    const double x[4] = {p1.x, p2.x, p3.x, p4.x}, y[4] = {p1.y, p2.y, p3.y, p4.y};
    SignaturePoint s;
    kernels::detail::skajis_one(x, y, 0, s.c1, s.c2);
    return s;
}

SignaturePoint simjis_window(Point2 p1, Point2 p2, Point2 p3) {
    if (coincident(p1, p2)) throw DuplicateConsecutiveVertices(1);
    const double x[3] = {p1.x, p2.x, p3.x}, y[3] = {p1.y, p2.y, p3.y};
    SignaturePoint s;
    kernels::detail::simjis_one(x, y, 0, s.c1, s.c2);
    return s;
}

SignaturePoint window_invariant(GroupId group, std::span<const Point2> pts) {
    if (pts.size() != static_cast<std::size_t>(window_size(group)))
        throw LengthMismatch(pts.size(), static_cast<std::size_t>(window_size(group)));
    switch (group) {
        case GroupId::SE2: return sejis_window(pts[0], pts[1], pts[2]);
        case GroupId::E2: return ejis_window(pts[0], pts[1], pts[2], pts[3]);
        case GroupId::SA2: return sajis_window(pts[0], pts[1], pts[2], pts[3]);
        case GroupId::SKA2: return skajis_window(pts[0], pts[1], pts[2], pts[3]);
        case GroupId::SIM2: return simjis_window(pts[0], pts[1], pts[2]);
    }
    throw Error("unknown group");
}

Signature signature(GroupId group, const Polygon& P, Direction direction) {
    const int k = P.size();
    if (k < window_size(group)) throw TooFewVertices(k, window_size(group));
    Signature out;
    out.group = group;
    out.direction = direction;
    if (direction == Direction::forward) {
        out.points = run_windows(group, P.vertices, static_cast<std::size_t>(k), true);
    } else {
        std::vector<Point2> rev(P.vertices.rbegin(), P.vertices.rend());
        out.points = run_windows(group, rev, static_cast<std::size_t>(k), true);
    }
    return out;
}

std::vector<double> anchor_invariants(GroupId group, std::span<const Point2> pts) {
    if (pts.size() != static_cast<std::size_t>(anchor_size(group)))
        throw LengthMismatch(pts.size(), static_cast<std::size_t>(anchor_size(group)));
    switch (group) {
        case GroupId::SE2: return {dist(pts[0], pts[1])};
        case GroupId::E2:
            return {dist(pts[0], pts[1]), dist(pts[1], pts[2]), dist(pts[0], pts[2])};
        case GroupId::SA2: return {signed_area3(pts[0], pts[1], pts[2])};
        case GroupId::SKA2: return {std::abs(signed_area3(pts[0], pts[1], pts[2]))};
        case GroupId::SIM2: return {};
    }
    throw Error("unknown group");
}

OpenSignature open_signature(GroupId group, std::span<const Point2> chain) {
    const int n = window_size(group);
    const int k = static_cast<int>(chain.size());
    if (k < n) throw TooFewVertices(k, n);
    OpenSignature out;
    out.group = group;
    out.anchor = anchor_invariants(group, chain.subspan(0, static_cast<std::size_t>(n - 1)));
    out.points = run_windows(group, chain, static_cast<std::size_t>(k - n + 1), false);
    return out;
}

OpenSignature open_signature(GroupId group, const std::vector<Point2>& chain) {
    return open_signature(group, std::span<const Point2>(chain));
}

double noise_tolerance_se2(double eps) {
    if (eps < 0.0) throw Error("noise_tolerance_se2: eps must be nonnegative");
    return 2.0 * std::sqrt(2.0) * eps;
}

}  // namespace polyjis
