#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vgcheck/tropical.hpp"

using namespace vgc;
using namespace vgc::tropical;

TEST_CASE("V is balanced; a weight change breaks it") {
    TropCurve v = make_V();
    CHECK(v.vertices.size() == 1);
    CHECK(v.edges.size() == 4);
    CHECK(check_balancing(v));
    v.edges[0].weight = 2;
    CHECK_FALSE(check_balancing(v));
}

TEST_CASE("V(1;1) endpoints") {
    TropCurve c = make_V_smoothed(1, Rat(1));
    REQUIRE(c.vertices.size() == 2);
    CHECK(c.vertices[0] == Vec3{Rat(0), rat(1, 2), rat(1, 2)});
    CHECK(c.vertices[1] == Vec3{Rat(0), rat(-1, 2), rat(-1, 2)});
    // exactly one bounded edge, in direction (0,-1,-1)
    int bounded = 0;
    for (const auto& e : c.edges)
        if (e.to) {
            ++bounded;
            CHECK(e.direction == IVec3{Int(0), Int(-1), Int(-1)});
        }
    CHECK(bounded == 1);
}

TEST_CASE("all smoothings are balanced for random rational eps") {
    std::mt19937_64 rng(7121);
    std::uniform_int_distribution<long> num(1, 30), den(1, 9);
    for (int i = 1; i <= 3; ++i) {
        for (int t = 0; t < 10; ++t) {
            Rat eps = rat(num(rng), den(rng));
            TropCurve c = make_V_smoothed(i, eps);
            CHECK(c.vertices.size() == 2);
            CHECK(c.edges.size() == 5);
            CHECK(check_balancing(c));
        }
    }
}

TEST_CASE("eps = 0 and bad index are rejected") {
    CHECK_THROWS_AS(make_V_smoothed(1, Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(make_V_smoothed(0, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(make_V_smoothed(4, Rat(1)), std::invalid_argument);
}

TEST_CASE("tropicalization type of the limit line") {
    auto line = dwork::build_van_geemen_line(dwork::degenerate_params(false));
    auto type = tropicalization_type(dwork::boundary_intersections(line));
    REQUIRE(type.size() == 4);
    // sums to zero (balancing)
    IVec3 sum{Int(0), Int(0), Int(0)};
    for (const auto& d : type)
        for (int k = 0; k < 3; ++k) sum[k] += d[k];
    CHECK(sum == IVec3{Int(0), Int(0), Int(0)});
    // matches V's ray directions up to one global sign
    std::vector<IVec3> v_dirs;
    for (const auto& e : make_V().edges) v_dirs.push_back(e.direction);
    CHECK(same_directions_up_to_global_sign(type, v_dirs));
    // but not on the nose: the type is {-e1,-e2,-e3,(1,1,1)}
    std::vector<IVec3> expect = {{Int(-1), Int(0), Int(0)},
                                 {Int(0), Int(-1), Int(0)},
                                 {Int(0), Int(0), Int(-1)},
                                 {Int(1), Int(1), Int(1)}};
    auto sorted = [](std::vector<IVec3> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(type) == sorted(expect));
}

TEST_CASE("tropicalization type does not depend on the root choice") {
    // Both cube roots give lines hitting the same four hyperplanes, so the
    // direction multiset is identical (the moduli agree for every embedding).
    auto t1 = tropicalization_type(dwork::boundary_intersections(
        dwork::build_van_geemen_line(dwork::degenerate_params(false))));
    auto t2 = tropicalization_type(dwork::boundary_intersections(
        dwork::build_van_geemen_line(dwork::degenerate_params(true))));
    auto sorted = [](std::vector<IVec3> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(t1) == sorted(t2));
}

TEST_CASE("non-generic boundary data is rejected") {
    auto line = dwork::build_van_geemen_line(dwork::degenerate_params(false));
    auto pts = dwork::boundary_intersections(line);
    auto missing = pts;
    missing.pop_back();
    CHECK_THROWS_AS(tropicalization_type(missing), std::invalid_argument);
    auto repeated = pts;
    repeated[3] = repeated[2];
    CHECK_THROWS_AS(tropicalization_type(repeated), std::invalid_argument);
}

TEST_CASE("conormal membership") {
    // |u1| = |u2|, u3 in [1, oo): leg 3 of the base Lagrangian
    ConormalPoint p1({rat(2), rat(2), rat(1)}, {rat(0), rat(0), rat(0)});
    CHECK(conormal_member(p1, 3, false));
    CHECK(conormal_member(p1, 3, true));
    CHECK_FALSE(conormal_member(p1, 1, false));  // |u2| != |u3|

    // argument 2 pi/5 on the distinguished coordinate: cover only
    ConormalPoint p2({rat(2), rat(2), rat(3)}, {rat(0), rat(0), rat(1, 5)});
    CHECK(conormal_member(p2, 3, true));
    CHECK_FALSE(conormal_member(p2, 3, false));

    // u = (1/2, 1/2, 1/2), product argument 0: leg 4
    ConormalPoint p3({rat(1, 2), rat(1, 2), rat(1, 2)}, {rat(1, 3), rat(1, 3), rat(1, 3)});
    CHECK(conormal_member(p3, 4, false));
    // product modulus > 1 fails leg 4
    ConormalPoint p4({rat(2), rat(2), rat(2)}, {rat(0), rat(0), rat(0)});
    CHECK_FALSE(conormal_member(p4, 4, false));
    // modulus below 1 on the leg coordinate fails legs 1..3
    ConormalPoint p5({rat(1, 2), rat(1), rat(1)}, {rat(0), rat(0), rat(0)});
    CHECK_FALSE(conormal_member(p5, 1, false));
}

TEST_CASE("conormal argument reduction") {
    // turns reduce mod 1: 6/5 == 1/5
    ConormalPoint p({rat(2), rat(2), rat(3)}, {rat(0), rat(0), rat(6, 5)});
    CHECK(conormal_member(p, 3, true));
    CHECK_FALSE(conormal_member(p, 3, false));
    CHECK_THROWS_AS(ConormalPoint({rat(0), rat(1), rat(1)}, {rat(0), rat(0), rat(0)}),
                    std::invalid_argument);
}

TEST_CASE("curve JSON round trip") {
    for (const TropCurve& c : {make_V(), make_V_smoothed(2, rat(3, 7))}) {
        TropCurve back = curve_from_json(curve_to_json(c));
        REQUIRE(back.vertices.size() == c.vertices.size());
        REQUIRE(back.edges.size() == c.edges.size());
        CHECK(check_balancing(back));
        for (size_t i = 0; i < c.edges.size(); ++i) {
            CHECK(back.edges[i].direction == c.edges[i].direction);
            CHECK(back.edges[i].weight == c.edges[i].weight);
        }
    }
}
