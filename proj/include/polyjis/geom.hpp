#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "polyjis/errors.hpp"

namespace polyjis {

enum class GroupId { SE2, E2, SA2, SKA2, SIM2 };

/// Number of points per signature window for a group.
constexpr int window_size(GroupId g) {
    switch (g) {
        case GroupId::SE2:
        case GroupId::SIM2: return 3;
        default: return 4;
    }
}

/// Number of correspondence points needed to recover a transform (window size - 1).
constexpr int anchor_size(GroupId g) { return window_size(g) - 1; }

const char* group_name(GroupId g);

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
    friend bool operator==(Point2 a, Point2 b) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }

/// Wedge (2-d cross) product: u.x*v.y - u.y*v.x.
inline double wedge(Point2 u, Point2 v) { return u.x * v.y - u.y * v.x; }

inline double norm(Point2 p) { return std::sqrt(p.x * p.x + p.y * p.y); }

/// Euclidean distance between two points.
inline double dist(Point2 p, Point2 q) { return norm(q - p); }

/// Signed area of the triangle spanned by the vectors zj-zi and zj-zk:
/// a_ijk = ((zj-zi) ^ (zj-zk)) / 2. This convention is shared by every
/// invariant family in the library.
inline double signed_area3(Point2 zi, Point2 zj, Point2 zk) {
    return 0.5 * wedge(zj - zi, zj - zk);
}

/// Scale-relative tolerance below which a triple counts as collinear.
inline double collinear_tolerance(Point2 p, Point2 q, Point2 r) {
    return 1e-9 * std::max(1.0, dist(p, q) * dist(q, r));
}

inline bool collinear(Point2 p, Point2 q, Point2 r) {
    return std::abs(signed_area3(p, q, r)) <= collinear_tolerance(p, q, r);
}

/// Scale-relative tolerance below which two points count as coincident.
inline double coincident_tolerance(Point2 p, Point2 q) {
    double m = std::max({1.0, std::abs(p.x), std::abs(p.y), std::abs(q.x), std::abs(q.y)});
    return 1e-12 * m;
}

inline bool coincident(Point2 p, Point2 q) { return dist(p, q) <= coincident_tolerance(p, q); }

/// Closed polygon: cyclically ordered vertex sequence, k >= 3.
/// Construction does not validate; see validate_polygon.
struct Polygon {
    std::vector<Point2> vertices;

    Polygon() = default;
    explicit Polygon(std::vector<Point2> v) : vertices(std::move(v)) {}

    int size() const { return static_cast<int>(vertices.size()); }

    /// Cyclic access, any integer index (0-based).
    Point2 at_cyclic(long i) const {
        long k = static_cast<long>(vertices.size());
        long m = ((i % k) + k) % k;
        return vertices[static_cast<std::size_t>(m)];
    }

    /// Bounding-box diagonal; the scale measure used for relative tolerances.
    double diameter() const;

    Point2 centroid() const;

    Polygon reversed() const {
        return Polygon(std::vector<Point2>(vertices.rbegin(), vertices.rend()));
    }
};

/// Element of the relabeling group H_k: an optional order reversal followed by
/// a cyclic shift. Applying (shift=c, reversed=r) to a sequence reverses it
/// first when r is set, then rotates left by c.
struct HkElement {
    int shift = 0;
    bool reversed = false;

    static HkElement identity() { return {}; }

    /// this∘other for sequences of length k (other acts first).
    HkElement compose(HkElement other, int k) const;
    HkElement inverse(int k) const;

    friend bool operator==(HkElement a, HkElement b) = default;
};

/// All 2k elements of H_k, shifts ascending, non-reversed first.
std::vector<HkElement> hk_all(int k);

template <typename T>
std::vector<T> hk_apply(HkElement h, std::span<const T> seq) {
    const long k = static_cast<long>(seq.size());
    if (h.shift < 0 || h.shift >= k) throw Error("hk_apply: shift out of range");
    std::vector<T> out(seq.size());
    for (long i = 0; i < k; ++i) {
        long j = (i + h.shift) % k;
        if (h.reversed) j = k - 1 - j;
        out[static_cast<std::size_t>(i)] = seq[static_cast<std::size_t>(j)];
    }
    return out;
}

template <typename T>
std::vector<T> hk_apply(HkElement h, const std::vector<T>& seq) {
    return hk_apply(h, std::span<const T>(seq));
}

Polygon hk_apply(HkElement h, const Polygon& p);

/// Checks the group-specific polygon domain and returns the polygon:
/// all groups need k >= window size and pairwise-distinct consecutive vertices;
/// E2/SA2/SKA2 additionally forbid collinear consecutive triples.
/// Throws TooFewVertices, DuplicateConsecutiveVertices or CollinearTriple,
/// each naming the first offending 1-based cyclic index.
Polygon validate_polygon(std::span<const Point2> vertices, GroupId group);
Polygon validate_polygon(const std::vector<Point2>& vertices, GroupId group);

bool is_valid_polygon(std::span<const Point2> vertices, GroupId group);

}  // namespace polyjis
