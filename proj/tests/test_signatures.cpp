#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "polyjis/oracle.hpp"
#include "polyjis/rng.hpp"
#include "polyjis/signatures.hpp"

using namespace polyjis;

namespace {

const std::vector<GroupId> kAll{GroupId::SE2, GroupId::E2, GroupId::SA2, GroupId::SKA2,
                                GroupId::SIM2};

void check_point(SignaturePoint got, double c1, double c2, double tol = 1e-12) {
    CHECK(got.c1 == doctest::Approx(c1).epsilon(tol));
    CHECK(got.c2 == doctest::Approx(c2).epsilon(tol));
}

double signature_scale(const Signature& s) {
    double m = 1.0;
    for (const SignaturePoint& p : s.points) m = std::max({m, std::abs(p.c1), std::abs(p.c2)});
    return m;
}

bool signatures_close(const Signature& a, const Signature& b, double tol) {
    if (a.points.size() != b.points.size()) return false;
    for (std::size_t i = 0; i < a.points.size(); ++i)
        if (std::abs(a.points[i].c1 - b.points[i].c1) > tol ||
            std::abs(a.points[i].c2 - b.points[i].c2) > tol)
            return false;
    return true;
}

}  // namespace

TEST_CASE("sejis window") {
    check_point(sejis_window({0, 0}, {1, 0}, {1, 1}), 1.0, -0.5);
    check_point(sejis_window({5, -3}, {6, -3}, {6, -2}), 1.0, -0.5);  // translated
    check_point(sejis_window({0, 0}, {1, 0}, {2, 0}), 1.0, 0.0);      // collinear allowed
}

TEST_CASE("ejis window") {
    check_point(ejis_window({0, 0}, {1, 0}, {1, 1}, {0, 1}), 1.0, std::sqrt(2.0));
    check_point(ejis_window({0, 0}, {1, 0}, {1, -1}, {0, -1}), 1.0, std::sqrt(2.0));  // mirrored
    CHECK_THROWS_AS(ejis_window({0, 0}, {1, 0}, {2, 0}, {0, 1}), CollinearTriple);
}

TEST_CASE("sajis window") {
    check_point(sajis_window({0, 0}, {1, 0}, {1, 1}, {0, 1}), -0.5, -0.5);
    // sheared by [[1,1],[0,1]]
    check_point(sajis_window({0, 0}, {1, 0}, {2, 1}, {1, 1}), -0.5, -0.5);
    check_point(sajis_window({0, 0}, {1, 0}, {1, 1}, {2, 1}), 0.5, -0.5);
}

TEST_CASE("skajis window") {
    check_point(skajis_window({0, 0}, {1, 0}, {1, 1}, {0, 1}), 0.5, 0.5);
    // reflected across the y-axis
    check_point(skajis_window({0, 0}, {-1, 0}, {-1, 1}, {0, 1}), 0.5, 0.5);
    CHECK_THROWS_AS(skajis_window({0, 0}, {1, 0}, {2, 0}, {0, 1}), CollinearTriple);
}

TEST_CASE("simjis window") {
    check_point(simjis_window({0, 0}, {1, 0}, {1, 1}), -0.5, 1.0);
    check_point(simjis_window({0, 0}, {3, 0}, {3, 3}), -0.5, 1.0);  // scaled by 3
    CHECK_THROWS_AS(simjis_window({0, 0}, {0, 0}, {1, 1}), DuplicateConsecutiveVertices);
}

TEST_CASE("cyclic signature of squares and rectangles") {
    const Polygon ccw(std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const Signature s1 = signature(GroupId::SE2, ccw);
    REQUIRE(s1.size() == 4);
    for (const SignaturePoint& p : s1.points) check_point(p, 1.0, -0.5);

    const Polygon cw(std::vector<Point2>{{0, 1}, {1, 1}, {1, 0}, {0, 0}});
    for (const SignaturePoint& p : signature(GroupId::SE2, cw).points) check_point(p, 1.0, 0.5);

    const Polygon rect(std::vector<Point2>{{0, 0}, {2, 0}, {2, 1}, {0, 1}});
    const Signature sr = signature(GroupId::SE2, rect);
    check_point(sr.points[0], 1.0, -1.0);
    check_point(sr.points[1], 2.0, -1.0);
    check_point(sr.points[2], 1.0, -1.0);
    check_point(sr.points[3], 2.0, -1.0);
}

TEST_CASE("signature point r equals the window invariant at vertex r") {
    for (GroupId g : kAll) {
        const Polygon P = random_polygon(9, 5150, g);
        const Signature s = signature(g, P);
        const int n = window_size(g);
        for (int r = 0; r < P.size(); ++r) {
            std::vector<Point2> win(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) win[static_cast<std::size_t>(j)] = P.at_cyclic(r + j);
            const SignaturePoint direct = window_invariant(g, win);
            CHECK(s.points[static_cast<std::size_t>(r)].c1 == direct.c1);
            CHECK(s.points[static_cast<std::size_t>(r)].c2 == direct.c2);
        }
    }
}

TEST_CASE("signatures are invariant under their group") {
    for (GroupId g : kAll) {
        CAPTURE(group_name(g));
        const Polygon P = random_polygon(8, 77, g);
        const Signature base = signature(g, P);
        int reflections = 0;
        for (std::uint64_t t = 0; t < 100; ++t) {
            const GroupElement e = random_element(g, 500 + t, 5.0, 2.0);
            if (e.m.det() < 0.0) ++reflections;
            const Signature moved = signature(g, apply(e, P));
            const double tol = 1e-9 * std::max(signature_scale(base), signature_scale(moved));
            CHECK(signatures_close(base, moved, tol));
        }
        if (g == GroupId::E2 || g == GroupId::SKA2) CHECK(reflections > 10);
    }
}

TEST_CASE("chiral signatures change under reflection") {
    // scalene, chirally asymmetric inputs
    const GroupElement mirror{GroupId::E2, {1, 0, 0, -1}, {0, 0}};
    {
        const Polygon tri(std::vector<Point2>{{0, 0}, {2, 0}, {0.5, 0.8}});
        const Signature a = signature(GroupId::SE2, tri);
        const Signature b = signature(GroupId::SE2, apply(mirror, tri));
        CHECK_FALSE(signatures_close(a, b, 1e-6));
        const Signature sa = signature(GroupId::SIM2, tri);
        const Signature sb = signature(GroupId::SIM2, apply(mirror, tri));
        CHECK_FALSE(signatures_close(sa, sb, 1e-6));
    }
    {
        const Polygon quad(std::vector<Point2>{{0, 0}, {2, 0}, {2.3, 1.1}, {-0.4, 0.9}});
        const Signature a = signature(GroupId::SA2, quad);
        const Signature b = signature(GroupId::SA2, apply(mirror, quad));
        CHECK_FALSE(signatures_close(a, b, 1e-6));
    }
}

TEST_CASE("signature commutes with cyclic relabelings") {
    for (GroupId g : kAll) {
        const Polygon P = random_polygon(7, 4242, g);
        const Signature base = signature(g, P);
        for (int c = 0; c < P.size(); ++c) {
            const HkElement h{c, false};
            const Signature shifted = signature(g, hk_apply(h, P));
            const auto expected = hk_apply(h, base.points);
            REQUIRE(shifted.points.size() == expected.size());
            for (std::size_t i = 0; i < expected.size(); ++i) {
                CHECK(shifted.points[i].c1 == expected[i].c1);
                CHECK(shifted.points[i].c2 == expected[i].c2);
            }
        }
    }
}

TEST_CASE("first-component noise bound") {
    Rng rng(31);
    const double eps = 1e-3;
    const Polygon P = random_polygon(8, 8080, GroupId::SE2);
    const Signature clean = signature(GroupId::SE2, P);
    const double bound = noise_tolerance_se2(eps);
    for (std::uint64_t t = 0; t < 1000; ++t) {
        const Polygon noisy = perturb(P, eps, t + 1);
        const Signature s = signature(GroupId::SE2, noisy);
        for (std::size_t i = 0; i < s.points.size(); ++i)
            CHECK(std::abs(s.points[i].c1 - clean.points[i].c1) <= bound);
    }
    (void)rng;
}

TEST_CASE("noise_tolerance_se2 values") {
    CHECK(noise_tolerance_se2(0.0) == 0.0);
    CHECK(noise_tolerance_se2(0.01) == doctest::Approx(0.0282842712));
    CHECK(noise_tolerance_se2(1.0) == doctest::Approx(2.8284271247));
    CHECK_THROWS_AS(noise_tolerance_se2(-1.0), Error);
}

TEST_CASE("open signature") {
    const std::vector<Point2> chain{{0, 0}, {1, 0}, {1, 1}};
    const OpenSignature os = open_signature(GroupId::SE2, chain);
    REQUIRE(os.anchor.size() == 1);
    CHECK(os.anchor[0] == doctest::Approx(1.0));
    REQUIRE(os.points.size() == 1);
    check_point(os.points[0], 1.0, -0.5);

    // invariance under a rigid motion
    const GroupElement g = random_element(GroupId::SE2, 3);
    const auto moved = apply(g, std::span<const Point2>(chain));
    const OpenSignature os2 = open_signature(GroupId::SE2, moved);
    CHECK(os2.anchor[0] == doctest::Approx(os.anchor[0]));
    CHECK(os2.points[0].c1 == doctest::Approx(os.points[0].c1));
    CHECK(os2.points[0].c2 == doctest::Approx(os.points[0].c2));

    CHECK_THROWS_AS(open_signature(GroupId::SE2, std::vector<Point2>{{0, 0}, {1, 0}}),
                    TooFewVertices);
}

TEST_CASE("open signature window count and anchor shapes") {
    for (GroupId g : kAll) {
        for (int k = window_size(g); k <= 9; ++k) {
            const Polygon P = random_polygon(k, 100 + static_cast<std::uint64_t>(k), g);
            const OpenSignature os = open_signature(g, P.vertices);
            CHECK(static_cast<int>(os.points.size()) == k - window_size(g) + 1);
            switch (g) {
                case GroupId::SE2: CHECK(os.anchor.size() == 1); break;
                case GroupId::E2: CHECK(os.anchor.size() == 3); break;
                case GroupId::SA2: CHECK(os.anchor.size() == 1); break;
                case GroupId::SKA2: CHECK(os.anchor.size() == 1); break;
                case GroupId::SIM2: CHECK(os.anchor.size() == 0); break;
            }
        }
    }
}

TEST_CASE("signature propagates window errors with the window index") {
    // 0-based vertices 2,3,4 collinear: the first failing SKA2 window starts
    // at vertex 3 in 1-based labels
    const std::vector<Point2> pts{{0, 0}, {1, 0}, {1, 1}, {1.5, 1.5}, {2, 2}, {0, 3}};
    try {
        signature(GroupId::SKA2, Polygon(pts));
        FAIL("expected CollinearTriple");
    } catch (const CollinearTriple& e) {
        CHECK(e.index == 3);
    }
}
