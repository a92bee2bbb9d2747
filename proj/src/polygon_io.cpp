#include "polyjis/polygon_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace polyjis {

namespace {

using nlohmann::json;

double parsed_number(const json& v, const char* where) {
    if (!v.is_number()) throw ParseError(std::string(where) + ": expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ParseError(std::string(where) + ": non-finite number");
    return d;
}

}  // namespace

PolygonDocument parse_polygon_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be an object");

    PolygonDocument out;
    bool saw_vertices = false;
    for (const auto& [key, value] : doc.items()) {
        if (key == "vertices") {
            if (!value.is_array()) throw ParseError("\"vertices\" must be an array");
            int idx = 0;
            for (const auto& pair : value) {
                ++idx;
                const std::string where = "vertex " + std::to_string(idx);
                if (!pair.is_array() || pair.size() != 2)
                    throw ParseError(where + ": expected [x, y]");
                out.vertices.push_back(
                    {parsed_number(pair[0], where.c_str()), parsed_number(pair[1], where.c_str())});
            }
            saw_vertices = true;
        } else if (key == "closed") {
            if (!value.is_boolean()) throw ParseError("\"closed\" must be a boolean");
            out.closed = value.get<bool>();
        } else if (key == "name") {
            if (!value.is_string()) throw ParseError("\"name\" must be a string");
            out.name = value.get<std::string>();
        } else {
            throw ParseError("unknown field \"" + key + "\"");
        }
    }
    if (!saw_vertices) throw ParseError("missing \"vertices\"");
    if (out.vertices.size() < 3) throw TooFewVertices(static_cast<int>(out.vertices.size()), 3);
    return out;
}

PolygonDocument parse_polygon_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_polygon_json(buf.str());
}

std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%#.9g", v);
    std::string s(buf);
    // %# keeps a trailing point ("4.00000000"); strip a bare trailing '.'
    // that appears for values without fractional digits in the chosen width.
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

std::string polygon_json(const PolygonDocument& doc) {
    std::ostringstream out;
    out << "{\"vertices\": [";
    for (std::size_t i = 0; i < doc.vertices.size(); ++i) {
        if (i) out << ", ";
        out << '[' << format_number(doc.vertices[i].x) << ", " << format_number(doc.vertices[i].y)
            << ']';
    }
    out << ']';
    if (!doc.closed) out << ", \"closed\": false";
    if (doc.name) out << ", \"name\": " << json(*doc.name).dump();
    out << "}\n";
    return out.str();
}

namespace {

std::string points_csv(std::span<const SignaturePoint> pts) {
    std::string out = "c1,c2\n";
    for (const SignaturePoint& p : pts)
        out += format_number(p.c1) + "," + format_number(p.c2) + "\n";
    return out;
}

std::string points_json_array(std::span<const SignaturePoint> pts) {
    std::string out = "[";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ", ";
        out += "[" + format_number(pts[i].c1) + ", " + format_number(pts[i].c2) + "]";
    }
    return out + "]";
}

}  // namespace

std::string signature_csv(const Signature& sig) { return points_csv(sig.points); }

std::string signature_csv(const OpenSignature& sig) {
    std::string out = "# anchor:";
    for (double a : sig.anchor) out += " " + format_number(a);
    out += "\n";
    return out + points_csv(sig.points);
}

std::string signature_json(const Signature& sig) {
    std::string out = "{\"group\": \"";
    out += group_name(sig.group);
    out += "\", \"direction\": \"";
    out += sig.direction == Direction::forward ? "forward" : "reversed";
    out += "\", \"points\": " + points_json_array(sig.points) + "}\n";
    return out;
}

std::string signature_json(const OpenSignature& sig) {
    std::string out = "{\"group\": \"";
    out += group_name(sig.group);
    out += "\", \"anchor\": [";
    for (std::size_t i = 0; i < sig.anchor.size(); ++i) {
        if (i) out += ", ";
        out += format_number(sig.anchor[i]);
    }
    out += "], \"points\": " + points_json_array(sig.points) + "}\n";
    return out;
}

std::string signature_svg(std::span<const SignaturePoint> points, bool cyclic,
                          const std::string& title) {
    const double W = 640.0, H = 640.0;
    double xmin = points.empty() ? 0.0 : points[0].c1, xmax = xmin;
    double ymin = points.empty() ? 0.0 : points[0].c2, ymax = ymin;
    for (const SignaturePoint& p : points) {
        xmin = std::min(xmin, p.c1);
        xmax = std::max(xmax, p.c1);
        ymin = std::min(ymin, p.c2);
        ymax = std::max(ymax, p.c2);
    }
    double spanx = xmax - xmin, spany = ymax - ymin;
    if (spanx <= 0.0) spanx = std::max(1.0, std::abs(xmin));
    if (spany <= 0.0) spany = std::max(1.0, std::abs(ymin));
    xmin -= 0.05 * spanx;
    xmax += 0.05 * spanx;
    ymin -= 0.05 * spany;
    ymax += 0.05 * spany;

    auto sx = [&](double x) { return (x - xmin) / (xmax - xmin) * W; };
    auto sy = [&](double y) { return H - (y - ymin) / (ymax - ymin) * H; };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return std::string(buf);
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n"
        << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"8\" refY=\"5\" "
           "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto\">"
           "<path d=\"M 0 1 L 8 5 L 0 9 z\" fill=\"#c0392b\"/></marker></defs>\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // light axes when the origin is inside the view
    if (xmin < 0.0 && xmax > 0.0)
        svg << "  <line x1=\"" << num(sx(0)) << "\" y1=\"0\" x2=\"" << num(sx(0)) << "\" y2=\""
            << H << "\" stroke=\"#dddddd\"/>\n";
    if (ymin < 0.0 && ymax > 0.0)
        svg << "  <line x1=\"0\" y1=\"" << num(sy(0)) << "\" x2=\"" << W << "\" y2=\""
            << num(sy(0)) << "\" stroke=\"#dddddd\"/>\n";

    const std::size_t nseg = cyclic ? points.size() : (points.empty() ? 0 : points.size() - 1);
    for (std::size_t i = 0; i < nseg; ++i) {
        const SignaturePoint& a = points[i];
        const SignaturePoint& b = points[(i + 1) % points.size()];
        svg << "  <path d=\"M " << num(sx(a.c1)) << ' ' << num(sy(a.c2)) << " L " << num(sx(b.c1))
            << ' ' << num(sy(b.c2))
            << "\" stroke=\"#2c3e50\" stroke-width=\"1.5\" fill=\"none\" "
               "marker-end=\"url(#arrow)\"/>\n";
    }
    for (const SignaturePoint& p : points)
        svg << "  <circle cx=\"" << num(sx(p.c1)) << "\" cy=\"" << num(sy(p.c2))
            << "\" r=\"3\" fill=\"#2980b9\"/>\n";
    if (!title.empty())
        svg << "  <text x=\"12\" y=\"22\" font-family=\"sans-serif\" font-size=\"14\">" << title
            << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace polyjis
