#include "polyjis/matching.hpp"

#include <algorithm>
#include <cmath>

namespace polyjis {

namespace {

bool approx(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool points_match(const SignaturePoint& a, const SignaturePoint& b, double tol) {
    return approx(a.c1, b.c1, tol) && approx(a.c2, b.c2, tol);
}

double signature_scale(const Signature& s) {
    double m = 1.0;
    for (const SignaturePoint& p : s.points) m = std::max({m, std::abs(p.c1), std::abs(p.c2)});
    return m;
}

// Candidate gate for signature comparisons: generous relative to the largest
// component, the residual verification is what decides.
double candidate_gate(double tol, const Signature& a, const Signature& b) {
    if (tol == 0.0) return 0.0;
    return 10.0 * tol * std::max(signature_scale(a), signature_scale(b));
}

// KMP over an arbitrary element type with operator==; finds all cyclic shifts
// c in [0,k) with pattern == rotate_left(text, c).
template <typename T>
std::vector<int> cyclic_occurrences(const std::vector<T>& pattern, const std::vector<T>& text) {
    const int k = static_cast<int>(pattern.size());
    std::vector<int> out;
    if (k == 0 || text.size() != pattern.size()) return out;

    std::vector<int> fail(static_cast<std::size_t>(k), 0);
    for (int i = 1, j = 0; i < k; ++i) {
        while (j > 0 && !(pattern[i] == pattern[j])) j = fail[j - 1];
        if (pattern[i] == pattern[j]) ++j;
        fail[i] = j;
    }
    for (int i = 0, j = 0; i < 2 * k - 1; ++i) {
        const T& c = text[i % k];
        while (j > 0 && !(c == pattern[j])) j = fail[j - 1];
        if (c == pattern[j]) ++j;
        if (j == k) {
            const int start = i - k + 1;
            if (start >= 0 && start < k) out.push_back(start);
            j = fail[j - 1];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void require_comparable(const Signature& a, const Signature& b) {
    if (a.group != b.group) throw GroupMismatch();
    if (a.points.size() != b.points.size()) throw LengthMismatch(a.points.size(), b.points.size());
}

std::vector<std::pair<long long, long long>> quantize(const Signature& s, double quantum) {
    std::vector<std::pair<long long, long long>> out;
    out.reserve(s.points.size());
    for (const SignaturePoint& p : s.points) {
        auto q = [quantum](double v) {
            const double scaled = v / quantum;
            if (!(std::abs(scaled) < 9.0e18)) throw Error("quantization overflow");
            return std::llround(scaled);
        };
        out.emplace_back(q(p.c1), q(p.c2));
    }
    return out;
}

double verification_scale(const Polygon& P) { return std::max(1e-300, P.diameter()); }

double recover_tol(double tol) { return std::max(1e-9, tol); }

// Verified candidate per the MatchResult convention: g maps relabeled onto P.
std::optional<MatchResult> verify_candidate(GroupId group, const Polygon& P,
                                            std::vector<Point2> relabeled, HkElement h,
                                            double tol) {
    const std::size_t na = static_cast<std::size_t>(anchor_size(group));
    auto g = try_recover(group, std::span<const Point2>(relabeled).subspan(0, na),
                         std::span<const Point2>(P.vertices).subspan(0, na), recover_tol(tol));
    if (!g) return std::nullopt;
    const double r = residual(*g, std::span<const Point2>(relabeled),
                              std::span<const Point2>(P.vertices));
    if (r > tol * verification_scale(P)) return std::nullopt;
    return MatchResult{true, h, *g, r};
}

std::vector<MatchResult> equivalence_impl(GroupId group, const Polygon& P, const Polygon& Q,
                                          double tol, bool first_only) {
    std::vector<MatchResult> found;
    if (P.size() != Q.size()) return found;

    const Signature sp = signature(group, P);
    const Signature sqf = signature(group, Q, Direction::forward);
    const Signature sqr = signature(group, Q, Direction::reversed);

    std::vector<HkElement> candidates;
    for (int c : cyclic_match(sp, sqf, candidate_gate(tol, sp, sqf)))
        candidates.push_back({c, false});
    for (int c : cyclic_match(sp, sqr, candidate_gate(tol, sp, sqr)))
        candidates.push_back({c, true});

    for (const HkElement& h : candidates) {
        auto res = verify_candidate(group, P, hk_apply(h, Q.vertices), h, tol);
        if (res) {
            found.push_back(*res);
            if (first_only) return found;
        }
    }
    return found;
}

int fixed_vertex_count(int k, int c) {
    // Solutions of 2i = -(c+1) mod k.
    const int rhs = ((-(c + 1)) % k + k) % k;
    if (k % 2 == 1) return 1;
    return rhs % 2 == 0 ? 2 : 0;
}

Line axis_from_reflection(const GroupElement& g, Point2 centroid) {
    // g.m is orthogonal with det -1: [[cos 2t, sin 2t], [sin 2t, -cos 2t]].
    const double theta = 0.5 * std::atan2(g.m.m10, g.m.m00);
    Point2 d{std::cos(theta), std::sin(theta)};
    const Point2 n{-d.y, d.x};
    Point2 base = 0.5 * dot(g.v, n) * n;
    if (d.y < 0.0 || (d.y == 0.0 && d.x < 0.0)) d = {-d.x, -d.y};
    const Point2 foot = base + dot(centroid - base, d) * d;
    return {foot, d};
}

}  // namespace

std::vector<int> cyclic_match(const Signature& a, const Signature& b, double tol) {
    require_comparable(a, b);
    const int k = a.size();
    if (tol == 0.0) return cyclic_occurrences(a.points, b.points);

    std::vector<int> out;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            ok = points_match(a.points[static_cast<std::size_t>(i)],
                              b.points[static_cast<std::size_t>((i + c) % k)], tol);
        if (ok) out.push_back(c);
    }
    return out;
}

std::vector<int> cyclic_match_quantized(const Signature& a, const Signature& b, double quantum) {
    require_comparable(a, b);
    if (quantum == 0.0) return cyclic_occurrences(a.points, b.points);
    return cyclic_occurrences(quantize(a, quantum), quantize(b, quantum));
}

MatchResult equivalence_test(GroupId group, const Polygon& P, const Polygon& Q, double tol) {
    auto found = equivalence_impl(group, P, Q, tol, true);
    return found.empty() ? MatchResult{} : found.front();
}

std::vector<MatchResult> equivalence_candidates(GroupId group, const Polygon& P, const Polygon& Q,
                                                double tol) {
    return equivalence_impl(group, P, Q, tol, false);
}

int rotational_folds(const Signature& sig, double tol) {
    const int k = sig.size();
    for (int d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        bool period = true;
        for (int i = 0; i < k && period; ++i)
            period = points_match(sig.points[static_cast<std::size_t>(i)],
                                  sig.points[static_cast<std::size_t>((i + d) % k)], tol);
        if (period) return k / d;
    }
    return 1;
}

std::vector<ReflectionMatch> reflection_self_matches(GroupId group, const Polygon& P, double tol) {
    if (group != GroupId::E2 && group != GroupId::SKA2)
        throw Error("reflection detection needs a group with orientation-reversing elements");

    const Signature sf = signature(group, P, Direction::forward);
    const Signature sr = signature(group, P, Direction::reversed);
    const int k = P.size();
    const Point2 centroid = P.centroid();

    std::vector<ReflectionMatch> out;
    for (int c : cyclic_match(sf, sr, candidate_gate(tol, sf, sr))) {
        const HkElement h{c, true};
        auto res = verify_candidate(group, P, hk_apply(h, P.vertices), h, tol);
        if (!res || res->g.m.det() >= 0.0) continue;
        ReflectionMatch rm;
        rm.shift = c;
        rm.axis_type = fixed_vertex_count(k, c) > 0 ? AxisType::vertex : AxisType::edge_midpoint;
        rm.g = res->g;
        rm.residual = res->residual;
        if (group == GroupId::E2) rm.axis = axis_from_reflection(res->g, centroid);
        out.push_back(std::move(rm));
    }
    return out;
}

std::vector<Line> reflection_axes_e2(const Polygon& P, double tol) {
    std::vector<Line> out;
    for (const ReflectionMatch& rm : reflection_self_matches(GroupId::E2, P, tol))
        if (rm.axis) out.push_back(*rm.axis);
    return out;
}

SymmetryReport symmetry_report(GroupId group, const Polygon& P, double tol) {
    SymmetryReport report;
    const Signature sf = signature(group, P, Direction::forward);
    const double gate = candidate_gate(tol, sf, sf);
    report.folds = rotational_folds(sf, gate);
    report.rotation_shifts = cyclic_match(sf, sf, gate);
    if (group == GroupId::E2 || group == GroupId::SKA2)
        report.reflection_matches = reflection_self_matches(group, P, tol);
    return report;
}

MatchResult open_equivalence_test(GroupId group, std::span<const Point2> p,
                                  std::span<const Point2> q, double tol) {
    if (p.size() != q.size()) return {};
    const OpenSignature osp = open_signature(group, p);
    const OpenSignature osq = open_signature(group, q);

    for (std::size_t i = 0; i < osp.anchor.size(); ++i)
        if (!approx(osp.anchor[i], osq.anchor[i], tol)) return {};
    for (std::size_t i = 0; i < osp.points.size(); ++i)
        if (!points_match(osp.points[i], osq.points[i], tol)) return {};

    const std::size_t na = static_cast<std::size_t>(anchor_size(group));
    auto g = try_recover(group, q.subspan(0, na), p.subspan(0, na), recover_tol(tol));
    if (!g) return {};
    double xmin = p[0].x, xmax = xmin, ymin = p[0].y, ymax = ymin;
    for (const Point2& pt : p) {
        xmin = std::min(xmin, pt.x);
        xmax = std::max(xmax, pt.x);
        ymin = std::min(ymin, pt.y);
        ymax = std::max(ymax, pt.y);
    }
    const double scale = std::max(1.0, std::hypot(xmax - xmin, ymax - ymin));
    const double r = residual(*g, q, p);
    if (r > tol * scale) return {};
    return {true, HkElement::identity(), *g, r};
}

}  // namespace polyjis
