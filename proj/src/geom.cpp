#include "polyjis/geom.hpp"

#include <algorithm>

namespace polyjis {

const char* group_name(GroupId g) {
    switch (g) {
        case GroupId::SE2: return "se2";
        case GroupId::E2: return "e2";
        case GroupId::SA2: return "sa2";
        case GroupId::SKA2: return "ska2";
        case GroupId::SIM2: return "sim2";
    }
    return "?";
}

double Polygon::diameter() const {
    if (vertices.empty()) return 0.0;
    double xmin = vertices[0].x, xmax = xmin, ymin = vertices[0].y, ymax = ymin;
    for (const Point2& p : vertices) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return std::hypot(xmax - xmin, ymax - ymin);
}

Point2 Polygon::centroid() const {
    Point2 c{0.0, 0.0};
    for (const Point2& p : vertices) c = c + p;
    double k = static_cast<double>(vertices.size());
    return {c.x / k, c.y / k};
}

HkElement HkElement::compose(HkElement other, int k) const {
    auto wrap = [k](int s) { return ((s % k) + k) % k; };
    if (!reversed) return {wrap(shift + other.shift), other.reversed};
    return {wrap(shift - other.shift), !other.reversed};
}

HkElement HkElement::inverse(int k) const {
    auto wrap = [k](int s) { return ((s % k) + k) % k; };
    if (reversed) return *this;
    return {wrap(-shift), false};
}

std::vector<HkElement> hk_all(int k) {
    std::vector<HkElement> out;
    out.reserve(2 * static_cast<std::size_t>(k));
    for (int rev = 0; rev < 2; ++rev)
        for (int c = 0; c < k; ++c) out.push_back({c, rev != 0});
    return out;
}

Polygon hk_apply(HkElement h, const Polygon& p) {
    return Polygon(hk_apply(h, std::span<const Point2>(p.vertices)));
}

Polygon validate_polygon(std::span<const Point2> vertices, GroupId group) {
    const int k = static_cast<int>(vertices.size());
    const int need = window_size(group);
    if (k < need) throw TooFewVertices(k, need);

    auto at = [&](int i) { return vertices[static_cast<std::size_t>(((i % k) + k) % k)]; };
    for (int i = 0; i < k; ++i)
        if (coincident(at(i), at(i + 1))) throw DuplicateConsecutiveVertices(i + 1);

    if (group == GroupId::E2 || group == GroupId::SA2 || group == GroupId::SKA2) {
        for (int i = 0; i < k; ++i)
            if (collinear(at(i), at(i + 1), at(i + 2))) throw CollinearTriple(i + 1);
    }
    return Polygon(std::vector<Point2>(vertices.begin(), vertices.end()));
}

Polygon validate_polygon(const std::vector<Point2>& vertices, GroupId group) {
    return validate_polygon(std::span<const Point2>(vertices), group);
}

bool is_valid_polygon(std::span<const Point2> vertices, GroupId group) {
    try {
        validate_polygon(vertices, group);
        return true;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace polyjis
