#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "polyjis/geom.hpp"

namespace polyjis {

/// Row-major 2x2 real matrix.
struct Mat2 {
    double m00 = 1.0, m01 = 0.0;
    double m10 = 0.0, m11 = 1.0;

    static Mat2 identity() { return {}; }
    static Mat2 rotation(double theta);

    double det() const { return m00 * m11 - m01 * m10; }

    Point2 apply(Point2 p) const { return {m00 * p.x + m01 * p.y, m10 * p.x + m11 * p.y}; }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
                a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
    }

    Mat2 inverse() const;
};

/// Affine map p -> m*p + v restricted to one of the five groups.
struct GroupElement {
    GroupId group = GroupId::SE2;
    Mat2 m;
    Point2 v;

    static GroupElement identity(GroupId g) { return {g, Mat2::identity(), {0.0, 0.0}}; }
};

Point2 apply(const GroupElement& g, Point2 p);
Polygon apply(const GroupElement& g, const Polygon& p);
std::vector<Point2> apply(const GroupElement& g, std::span<const Point2> pts);

/// apply(compose(a,b), p) == apply(a, apply(b, p)). Throws GroupMismatch.
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);

/// True iff the matrix satisfies the group's constraints within tol:
/// SE2 orthogonal det +1; E2 orthogonal det +-1; SA2 det +1; SKA2 det +-1;
/// SIM2 positive multiple of a rotation.
bool validate_element(const GroupElement& g, double tol = 1e-9);

/// Deterministic in seed. Rotation angle uniform on [0,2pi); E2/SKA2 add a
/// fair-coin reflection; SA2/SKA2 matrices are built from shear and rotation
/// factors and renormalized to unit determinant; SIM2 scale is log-uniform on
/// [1/scale_range, scale_range]. Translation uniform in the square of
/// half-width translation_range.
GroupElement random_element(GroupId group, std::uint64_t seed, double translation_range = 10.0,
                            double scale_range = 4.0);

/// Recovers the unique g in the group with apply(g, src) == dst from a minimal
/// correspondence (anchor_size(group) points). Throws DegenerateAnchor when the
/// source anchor is degenerate and NoExactTransform when no exact element fits
/// (consistency gates at rel_tol relative to the point scale; the default is
/// for exact data, matching passes its own tolerance through).
GroupElement recover(GroupId group, std::span<const Point2> src, std::span<const Point2> dst,
                     double rel_tol = 1e-9);

/// recover without exceptions; nullopt on any failure.
std::optional<GroupElement> try_recover(GroupId group, std::span<const Point2> src,
                                        std::span<const Point2> dst, double rel_tol = 1e-9);

/// max_i dist(apply(g, P_i), Q_i). Throws LengthMismatch.
double residual(const GroupElement& g, const Polygon& P, const Polygon& Q);
double residual(const GroupElement& g, std::span<const Point2> src, std::span<const Point2> dst);

}  // namespace polyjis
