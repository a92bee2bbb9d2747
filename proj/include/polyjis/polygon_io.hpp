#pragma once

#include <optional>
#include <string>

#include "polyjis/signatures.hpp"

namespace polyjis {

/// On-disk polygon: {"vertices": [[x,y],...], "closed": bool?, "name": string?}.
struct PolygonDocument {
    std::vector<Point2> vertices;
    bool closed = true;
    std::optional<std::string> name;
};

/// Strict parse: unknown fields, malformed vertices, non-finite numbers and
/// fewer than 3 vertices are all rejected.
PolygonDocument parse_polygon_json(const std::string& text);
PolygonDocument parse_polygon_file(const std::string& path);

std::string polygon_json(const PolygonDocument& doc);

/// Fixed formatting for all numeric output: 9 significant digits.
std::string format_number(double v);

std::string signature_csv(const Signature& sig);
std::string signature_csv(const OpenSignature& sig);
std::string signature_json(const Signature& sig);
std::string signature_json(const OpenSignature& sig);

/// Oriented piecewise-linear signature curve: points joined by arrowed
/// segments (cyclically for closed signatures), axes autoscaled with a 5%
/// margin.
std::string signature_svg(std::span<const SignaturePoint> points, bool cyclic,
                          const std::string& title);

}  // namespace polyjis
