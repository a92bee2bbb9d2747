#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "polyjis/matching.hpp"

namespace polyjis {

namespace {

struct Run {
    long t = 0;  // start position along the diagonal
    int len = 0;
    PartialMatch match;
};

std::vector<double> cyclic_anchor(GroupId group, const Polygon& poly, int start) {
    const int na = anchor_size(group);
    std::vector<Point2> pts(static_cast<std::size_t>(na));
    for (int s = 0; s < na; ++s) pts[static_cast<std::size_t>(s)] = poly.at_cyclic(start + s);
    return anchor_invariants(group, pts);
}

std::vector<Point2> cyclic_slice(const Polygon& poly, int start, int len) {
    std::vector<Point2> pts(static_cast<std::size_t>(len));
    for (int s = 0; s < len; ++s) pts[static_cast<std::size_t>(s)] = poly.at_cyclic(start + s);
    return pts;
}

double slice_scale(std::span<const Point2> pts) {
    double xmin = pts[0].x, xmax = xmin, ymin = pts[0].y, ymax = ymin;
    for (const Point2& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return std::max(1.0, std::hypot(xmax - xmin, ymax - ymin));
}

bool anchors_agree(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

}  // namespace

std::vector<PartialMatch> partial_match(GroupId group, const Polygon& P, const Polygon& Q,
                                        int min_len, double tol) {
    const int n = window_size(group);
    if (min_len < n) throw Error("min_len below the window width");
    const int kp = P.size();
    const int kq = Q.size();
    const int cap = std::min(kp, kq);

    const auto winP = signature(group, P).points;
    std::vector<std::vector<double>> anchP(static_cast<std::size_t>(kp));
    for (int i = 0; i < kp; ++i) anchP[static_cast<std::size_t>(i)] = cyclic_anchor(group, P, i);

    std::vector<PartialMatch> results;

    for (bool rev : {false, true}) {
        const Polygon B = rev ? Q.reversed() : Q;
        const auto winB = signature(group, B).points;
        std::vector<std::vector<double>> anchB(static_cast<std::size_t>(kq));
        for (int j = 0; j < kq; ++j)
            anchB[static_cast<std::size_t>(j)] = cyclic_anchor(group, B, j);

        auto win_eq = [&](int i, int j) {
            const SignaturePoint& a = winP[static_cast<std::size_t>(i)];
            const SignaturePoint& b = winB[static_cast<std::size_t>(j)];
            return std::abs(a.c1 - b.c1) <= tol && std::abs(a.c2 - b.c2) <= tol;
        };
        auto anch_eq = [&](int i, int j) {
            return anchors_agree(anchP[static_cast<std::size_t>(i)],
                                 anchB[static_cast<std::size_t>(j)], tol);
        };

        auto verify = [&](long t, int len, int d0) -> std::optional<Run> {
            const int i0 = static_cast<int>((d0 + t) % kp);
            const int j0 = static_cast<int>(t % kq);
            const auto src = cyclic_slice(P, i0, anchor_size(group));
            const auto dst = cyclic_slice(B, j0, anchor_size(group));
            auto g = try_recover(group, src, dst, std::max(1e-9, tol));
            if (!g) return std::nullopt;
            const auto pieceP = cyclic_slice(P, i0, len);
            const auto pieceB = cyclic_slice(B, j0, len);
            const double r = residual(*g, pieceP, pieceB);
            if (r > tol * slice_scale(pieceB)) return std::nullopt;
            PartialMatch pm;
            pm.start_p = i0 + 1;
            pm.start_q = (rev ? kq - 1 - j0 : j0) + 1;
            pm.length = len;
            pm.reversed = rev;
            pm.g = *g;
            pm.residual = r;
            return Run{t, len, pm};
        };

        const long L = std::lcm(static_cast<long>(kp), static_cast<long>(kq));
        const long D = std::gcd(static_cast<long>(kp), static_cast<long>(kq));

        for (long d0 = 0; d0 < D; ++d0) {
            std::vector<char> win(static_cast<std::size_t>(L)), anch(static_cast<std::size_t>(L));
            long first_false = -1;
            for (long t = 0; t < L; ++t) {
                const int i = static_cast<int>((d0 + t) % kp);
                const int j = static_cast<int>(t % kq);
                win[static_cast<std::size_t>(t)] = win_eq(i, j) ? 1 : 0;
                anch[static_cast<std::size_t>(t)] = anch_eq(i, j) ? 1 : 0;
                if (!win[static_cast<std::size_t>(t)] && first_false < 0) first_false = t;
            }

            std::vector<Run> candidates;
            if (first_false < 0) {
                // Every window on the diagonal matches: runs are full length and
                // start at anchor-block boundaries (one canonical run when every
                // anchor agrees).
                bool all_anch = std::all_of(anch.begin(), anch.end(), [](char a) { return a; });
                if (all_anch) {
                    if (cap >= min_len)
                        if (auto r = verify(0, cap, static_cast<int>(d0))) candidates.push_back(*r);
                } else if (cap >= min_len) {
                    for (long t = 0; t < L; ++t) {
                        const bool prev = anch[static_cast<std::size_t>((t + L - 1) % L)];
                        if (anch[static_cast<std::size_t>(t)] && !prev)
                            if (auto r = verify(t, cap, static_cast<int>(d0)))
                                candidates.push_back(*r);
                    }
                }
            } else {
                // Unroll the cycle right after a failing window so every stretch
                // of matching windows is contiguous.
                const long z = first_false;
                auto pos = [&](long u) { return (z + 1 + u) % L; };
                long u = 0;
                while (u < L) {
                    if (!win[static_cast<std::size_t>(pos(u))]) {
                        ++u;
                        continue;
                    }
                    long ub = u;
                    while (ub + 1 < L && win[static_cast<std::size_t>(pos(ub + 1))]) ++ub;
                    for (long s = u; s <= ub; ++s) {
                        const long t = pos(s);
                        if (!anch[static_cast<std::size_t>(t)]) continue;
                        const int len = static_cast<int>(
                            std::min<long>(cap, ub - s + n));
                        const bool ext_left =
                            s > u && anch[static_cast<std::size_t>(pos(s - 1))] && len + 1 <= cap;
                        if (ext_left || len < min_len) continue;
                        if (auto r = verify(t, len, static_cast<int>(d0))) candidates.push_back(*r);
                    }
                    u = ub + 1;
                }
            }

            // Drop verified runs wholly contained in another verified run on
            // this diagonal (possible when an enclosing candidate failed its
            // residual check for part of its span).
            for (std::size_t a = 0; a < candidates.size(); ++a) {
                bool contained = false;
                for (std::size_t b = 0; b < candidates.size() && !contained; ++b) {
                    if (a == b) continue;
                    const Run& ra = candidates[a];
                    const Run& rb = candidates[b];
                    if (ra.len >= rb.len) continue;
                    const long off = ((ra.t - rb.t) % L + L) % L;
                    contained = off <= rb.len - ra.len;
                }
                if (!contained) results.push_back(candidates[a].match);
            }
        }
    }

    std::sort(results.begin(), results.end(), [](const PartialMatch& a, const PartialMatch& b) {
        return std::tie(a.reversed, a.start_p, a.start_q, a.length) <
               std::tie(b.reversed, b.start_p, b.start_q, b.length);
    });
    return results;
}

}  // namespace polyjis
