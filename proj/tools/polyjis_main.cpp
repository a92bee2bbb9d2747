#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "polyjis/matching.hpp"
#include "polyjis/oracle.hpp"
#include "polyjis/polygon_io.hpp"

namespace {

using namespace polyjis;

constexpr int kExitMatch = 0;
constexpr int kExitNoMatch = 1;
constexpr int kExitError = 2;

const std::map<std::string, GroupId> kGroups = {{"se2", GroupId::SE2},
                                                {"e2", GroupId::E2},
                                                {"sa2", GroupId::SA2},
                                                {"ska2", GroupId::SKA2},
                                                {"sim2", GroupId::SIM2}};

struct CommonOpts {
    GroupId group = GroupId::SE2;
    double tol = 1e-9;
    std::string format = "csv";
    std::string output;
};

void add_group_flag(CLI::App* cmd, GroupId& group) {
    cmd->add_option("--group", group, "group: se2|e2|sa2|ska2|sim2")
        ->required()
        ->transform(CLI::CheckedTransformer(kGroups, CLI::ignore_case));
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

std::string matrix_text(const GroupElement& g) {
    std::string s = "m = [[" + format_number(g.m.m00) + ", " + format_number(g.m.m01) + "], [" +
                    format_number(g.m.m10) + ", " + format_number(g.m.m11) + "]]";
    s += "\nv = (" + format_number(g.v.x) + ", " + format_number(g.v.y) + ")";
    return s;
}

std::string match_json(const MatchResult& m) {
    std::string s = "{\"matched\": ";
    s += m.matched ? "true" : "false";
    if (m.matched) {
        s += ", \"shift\": " + std::to_string(m.h.shift);
        s += ", \"reversed\": ";
        s += m.h.reversed ? "true" : "false";
        s += ", \"m\": [[" + format_number(m.g.m.m00) + ", " + format_number(m.g.m.m01) + "], [" +
             format_number(m.g.m.m10) + ", " + format_number(m.g.m.m11) + "]]";
        s += ", \"v\": [" + format_number(m.g.v.x) + ", " + format_number(m.g.v.y) + "]";
        s += ", \"residual\": " + format_number(m.residual);
    }
    return s + "}\n";
}

Polygon closed_polygon(const PolygonDocument& doc, GroupId group) {
    if (!doc.closed) throw Error("this command needs a closed polygon");
    return validate_polygon(doc.vertices, group);
}

int run_sign(const std::string& file, const CommonOpts& opt) {
    const PolygonDocument doc = parse_polygon_file(file);
    const std::string title = doc.name.value_or("");
    if (doc.closed) {
        const Signature sig = signature(opt.group, closed_polygon(doc, opt.group));
        if (opt.format == "csv") emit(opt.output, signature_csv(sig));
        else if (opt.format == "json") emit(opt.output, signature_json(sig));
        else emit(opt.output, signature_svg(sig.points, true, title));
    } else {
        const OpenSignature sig = open_signature(opt.group, doc.vertices);
        if (opt.format == "csv") emit(opt.output, signature_csv(sig));
        else if (opt.format == "json") emit(opt.output, signature_json(sig));
        else emit(opt.output, signature_svg(sig.points, false, title));
    }
    return kExitMatch;
}

int run_compare(const std::string& fa, const std::string& fb, const CommonOpts& opt,
                bool exhaustive) {
    const PolygonDocument da = parse_polygon_file(fa);
    const PolygonDocument db = parse_polygon_file(fb);
    if (da.closed != db.closed) throw Error("cannot compare a closed polygon with an open chain");

    std::vector<MatchResult> results;
    if (da.closed) {
        const Polygon A = closed_polygon(da, opt.group);
        const Polygon B = closed_polygon(db, opt.group);
        results = exhaustive ? equivalence_candidates(opt.group, A, B, opt.tol)
                             : std::vector<MatchResult>{equivalence_test(opt.group, A, B, opt.tol)};
        if (!exhaustive && !results.front().matched) results.clear();
        if (exhaustive && results.empty()) results.push_back({});
    } else {
        results.push_back(open_equivalence_test(opt.group, da.vertices, db.vertices, opt.tol));
        if (!results.front().matched) results.clear();
    }

    if (results.empty() || !results.front().matched) {
        if (opt.format == "json") emit(opt.output, "{\"matched\": false}\n");
        else emit(opt.output, "not equivalent\n");
        return kExitNoMatch;
    }
    std::string out;
    for (const MatchResult& m : results) {
        if (opt.format == "json") {
            out += match_json(m);
        } else {
            out += "equivalent: shift " + std::to_string(m.h.shift) +
                   (m.h.reversed ? ", reversed" : ", forward") + "\n" + matrix_text(m.g) +
                   "\nresidual = " + format_number(m.residual) + "\n";
        }
    }
    emit(opt.output, out);
    return kExitMatch;
}

// Batch mode: every unordered pair of .json polygons in a directory, in
// sorted order.
int run_compare_dir(const std::string& dir, const CommonOpts& opt) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.size() < 2) throw Error("need at least two .json files in " + dir);

    std::string out;
    bool any = false;
    for (std::size_t i = 0; i < files.size(); ++i) {
        const PolygonDocument da = parse_polygon_file(files[i].string());
        if (!da.closed) continue;
        const Polygon A = validate_polygon(da.vertices, opt.group);
        for (std::size_t j = i + 1; j < files.size(); ++j) {
            const PolygonDocument db = parse_polygon_file(files[j].string());
            if (!db.closed) continue;
            const Polygon B = validate_polygon(db.vertices, opt.group);
            const MatchResult m = equivalence_test(opt.group, A, B, opt.tol);
            any = any || m.matched;
            out += files[i].filename().string() + " " + files[j].filename().string() + ": ";
            out += m.matched ? "equivalent (residual " + format_number(m.residual) + ")\n"
                             : "not equivalent\n";
        }
    }
    emit(opt.output, out);
    return any ? kExitMatch : kExitNoMatch;
}

int run_symmetry(const std::string& file, const CommonOpts& opt) {
    const PolygonDocument doc = parse_polygon_file(file);
    const Polygon P = closed_polygon(doc, opt.group);
    const SymmetryReport rep = symmetry_report(opt.group, P, opt.tol);

    std::string out;
    if (opt.format == "json") {
        out = "{\"folds\": " + std::to_string(rep.folds) + ", \"rotation_shifts\": [";
        for (std::size_t i = 0; i < rep.rotation_shifts.size(); ++i) {
            if (i) out += ", ";
            out += std::to_string(rep.rotation_shifts[i]);
        }
        out += "], \"reflections\": [";
        for (std::size_t i = 0; i < rep.reflection_matches.size(); ++i) {
            const ReflectionMatch& rm = rep.reflection_matches[i];
            if (i) out += ", ";
            out += "{\"shift\": " + std::to_string(rm.shift) + ", \"axis_type\": \"";
            out += rm.axis_type == AxisType::vertex ? "vertex" : "edge-midpoint";
            out += "\"";
            if (rm.axis)
                out += ", \"axis_point\": [" + format_number(rm.axis->point.x) + ", " +
                       format_number(rm.axis->point.y) + "], \"axis_direction\": [" +
                       format_number(rm.axis->direction.x) + ", " +
                       format_number(rm.axis->direction.y) + "]";
            out += "}";
        }
        out += "]}\n";
    } else {
        out = "folds: " + std::to_string(rep.folds) + "\n";
        out += "rotation shifts:";
        for (int c : rep.rotation_shifts) out += " " + std::to_string(c);
        out += "\n";
        if (opt.group == GroupId::E2 || opt.group == GroupId::SKA2) {
            out += "reflections: " + std::to_string(rep.reflection_matches.size()) + "\n";
            for (const ReflectionMatch& rm : rep.reflection_matches) {
                out += "  shift " + std::to_string(rm.shift) + " (";
                out += rm.axis_type == AxisType::vertex ? "vertex" : "edge-midpoint";
                out += ")";
                if (rm.axis)
                    out += ": axis through (" + format_number(rm.axis->point.x) + ", " +
                           format_number(rm.axis->point.y) + ") direction (" +
                           format_number(rm.axis->direction.x) + ", " +
                           format_number(rm.axis->direction.y) + ")";
                out += "\n";
            }
        }
    }
    emit(opt.output, out);
    return kExitMatch;
}

int run_partial(const std::string& fa, const std::string& fb, const CommonOpts& opt,
                int min_len) {
    const PolygonDocument da = parse_polygon_file(fa);
    const PolygonDocument db = parse_polygon_file(fb);
    const Polygon A = closed_polygon(da, opt.group);
    const Polygon B = closed_polygon(db, opt.group);
    if (min_len <= 0) min_len = window_size(opt.group);
    const auto runs = partial_match(opt.group, A, B, min_len, opt.tol);

    std::string out;
    if (opt.format == "json") {
        out = "[";
        for (std::size_t i = 0; i < runs.size(); ++i) {
            const PartialMatch& r = runs[i];
            if (i) out += ", ";
            out += "{\"start_p\": " + std::to_string(r.start_p) +
                   ", \"start_q\": " + std::to_string(r.start_q) +
                   ", \"length\": " + std::to_string(r.length) + ", \"reversed\": ";
            out += r.reversed ? "true" : "false";
            out += ", \"residual\": " + format_number(r.residual) + "}";
        }
        out += "]\n";
    } else {
        out = "runs: " + std::to_string(runs.size()) + "\n";
        for (const PartialMatch& r : runs)
            out += "  p" + std::to_string(r.start_p) + " ~ q" + std::to_string(r.start_q) +
                   " length " + std::to_string(r.length) + (r.reversed ? " reversed" : "") +
                   " residual " + format_number(r.residual) + "\n";
    }
    emit(opt.output, out);
    return runs.empty() ? kExitNoMatch : kExitMatch;
}

int run_perturb(const std::string& file, const CommonOpts& opt, double eps,
                std::uint64_t seed) {
    PolygonDocument doc = parse_polygon_file(file);
    if (!doc.closed) throw Error("perturb needs a closed polygon");
    const Polygon shaken = perturb(Polygon(doc.vertices), eps, seed);
    doc.vertices = shaken.vertices;
    emit(opt.output, polygon_json(doc));
    return kExitMatch;
}

int run_oracle_check(const std::string& fa, const std::string& fb, const CommonOpts& opt) {
    const PolygonDocument da = parse_polygon_file(fa);
    const PolygonDocument db = parse_polygon_file(fb);
    const Polygon A = closed_polygon(da, opt.group);
    const Polygon B = closed_polygon(db, opt.group);
    const MatchResult fast = equivalence_test(opt.group, A, B, opt.tol);
    const MatchResult oracle = brute_force_equivalent(opt.group, A, B, opt.tol);

    std::string out = std::string("signature path: ") + (fast.matched ? "match" : "no match") +
                      "\nbrute force:    " + (oracle.matched ? "match" : "no match") + "\n";
    if (fast.matched != oracle.matched) {
        emit(opt.output, out + "DISAGREEMENT\n");
        return kExitError;
    }
    emit(opt.output, out + "verdicts agree\n");
    return fast.matched ? kExitMatch : kExitNoMatch;
}

int run_plot(const std::string& file, const CommonOpts& opt) {
    CommonOpts o = opt;
    o.format = "svg";
    return run_sign(file, o);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polygon recognition and symmetry detection via joint invariant signatures"};
    app.require_subcommand(1);

    CommonOpts opt;
    std::string file_a, file_b;
    bool exhaustive = false;
    int min_len = 0;
    double eps = 1e-3;
    std::uint64_t seed = 0;

    auto* sign = app.add_subcommand("sign", "signature of a polygon or open chain");
    sign->add_option("file", file_a)->required();
    add_group_flag(sign, opt.group);
    sign->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json", "svg"}));
    sign->add_option("-o,--output", opt.output);

    std::string dir;
    auto* compare = app.add_subcommand("compare", "test two polygons for equivalence");
    auto* dir_opt = compare->add_option("--dir", dir, "compare every pair of .json files");
    compare->add_option("file_a", file_a)->excludes(dir_opt);
    compare->add_option("file_b", file_b);
    add_group_flag(compare, opt.group);
    compare->add_option("--tol", opt.tol);
    compare->add_flag("--exhaustive", exhaustive, "report every verified relabeling");
    compare->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    compare->add_option("-o,--output", opt.output);

    auto* symmetry = app.add_subcommand("symmetry", "rotational folds and reflections");
    symmetry->add_option("file", file_a)->required();
    add_group_flag(symmetry, opt.group);
    symmetry->add_option("--tol", opt.tol);
    symmetry->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    symmetry->add_option("-o,--output", opt.output);

    auto* partial = app.add_subcommand("partial", "maximal shared pieces of two polygons");
    partial->add_option("file_a", file_a)->required();
    partial->add_option("file_b", file_b)->required();
    add_group_flag(partial, opt.group);
    partial->add_option("--tol", opt.tol);
    partial->add_option("--min-len", min_len, "minimum piece length (default: window size)");
    partial->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    partial->add_option("-o,--output", opt.output);

    auto* perturb_cmd = app.add_subcommand("perturb", "jitter vertices uniformly");
    perturb_cmd->add_option("file", file_a)->required();
    perturb_cmd->add_option("--eps", eps)->required();
    perturb_cmd->add_option("--seed", seed);
    perturb_cmd->add_option("-o,--output", opt.output);

    auto* oracle_cmd = app.add_subcommand("oracle-check",
                                          "cross-check the signature path against brute force");
    oracle_cmd->add_option("file_a", file_a)->required();
    oracle_cmd->add_option("file_b", file_b)->required();
    add_group_flag(oracle_cmd, opt.group);
    oracle_cmd->add_option("--tol", opt.tol);
    oracle_cmd->add_option("-o,--output", opt.output);

    auto* plot = app.add_subcommand("plot", "SVG signature curve");
    plot->add_option("file", file_a)->required();
    add_group_flag(plot, opt.group);
    plot->add_option("-o,--output", opt.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (sign->parsed()) return run_sign(file_a, opt);
        if (compare->parsed()) {
            if (!dir.empty()) return run_compare_dir(dir, opt);
            if (file_a.empty() || file_b.empty())
                throw Error("compare needs two files or --dir");
            return run_compare(file_a, file_b, opt, exhaustive);
        }
        if (symmetry->parsed()) {
            if (opt.format == "csv") opt.format = "text";
            return run_symmetry(file_a, opt);
        }
        if (partial->parsed()) {
            if (opt.format == "csv") opt.format = "text";
            return run_partial(file_a, file_b, opt, min_len);
        }
        if (perturb_cmd->parsed()) return run_perturb(file_a, opt, eps, seed);
        if (oracle_cmd->parsed()) return run_oracle_check(file_a, file_b, opt);
        if (plot->parsed()) return run_plot(file_a, opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
