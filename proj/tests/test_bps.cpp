#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "vgcheck/bps.hpp"
#include "vgcheck/dilog.hpp"

using namespace vgc;
using namespace vgc::bps;

TEST_CASE("the character: formula forces the case values") {
    CHECK(chi(1) == 1);
    CHECK(chi(2) == -1);
    CHECK(chi(3) == 0);
    CHECK(chi(-1) == -1);
    CHECK(chi(0) == 0);
    for (long k = 0; k <= 50; ++k) CHECK(chi_by_formula(k) == Quad(Rat(chi(k))));
    // (omega - omega^2)/sqrt(-3) = 1 and (omega^2 - omega)/sqrt(-3) = -1
    CHECK(chi_by_formula(1) == Quad::one());
    CHECK(chi_by_formula(2) == -Quad::one());
}

TEST_CASE("the character is completely multiplicative") {
    for (long m = 1; m <= 1000; ++m)
        for (long n = 1; m * n <= 1000; ++n) CHECK(chi(m * n) == chi(m) * chi(n));
}

TEST_CASE("expand on a single degree") {
    // n = {1: x}: nTilde_1 = x, nTilde_2 = -x/4, nTilde_3 = 0, nTilde_4 = x/16
    Quad x(rat(5, 7), rat(1, 3));
    Table n{{1, x}};
    Table nt = expand(n, 4);
    CHECK(nt[1] == x);
    CHECK(nt[2] == Quad(rat(-1, 4)) * x);
    CHECK(nt.find(3) == nt.end());
    CHECK(nt[4] == Quad(rat(1, 16)) * x);
    CHECK(expand({}, 8).empty());
}

TEST_CASE("inversion of the tabulated values") {
    Table nt = tabulated_n_tilde();
    Table n = invert(nt, 4);
    // d = 1 forces n_1 = nTilde_1
    CHECK(n[1] == nt[1]);
    // n_2 = nTilde_2 + n_1/4 = (22296410000/3) sqrt(-3)
    CHECK(n[2] == Quad(Rat(0), rat_str("22296410000", "3")));
    // n_3 = nTilde_3 (chi(3) = 0)
    CHECK(n[3] == nt[3]);
    // n_4 = nTilde_4 + n_2/4 - n_1/16
    CHECK(n[4] == Quad(Rat(0), rat_str("660275805921911450000", "27")));
    for (const auto& [d, v] : n) {
        CHECK(ring_member(v));
        CHECK(ring_member(Quad(rat(1, 2)) * v));  // twice the halved table
    }
    CHECK(expand(n, 4) == nt);
}

TEST_CASE("ring membership") {
    CHECK(ring_member(Quad(Rat(0), Rat(280000))));
    CHECK(ring_member(Quad(Rat(0), rat_str("22296410000", "3"))));
    CHECK(ring_member(Quad()));  // zero
    CHECK_FALSE(ring_member(Quad(Rat(0), rat(1, 2))));   // denominator 2
    CHECK_FALSE(ring_member(Quad(Rat(1), Rat(3))));      // rational part
    CHECK(ring_member(Quad(Rat(0), rat(7, 27))));
}

TEST_CASE("invert and expand are mutually inverse on random tables") {
    std::mt19937_64 rng(90125);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        Table t;
        for (long d = 1; d <= 12; ++d) {
            if (rng() % 3 == 0) continue;
            Quad v(rat(num(rng), den(rng)), rat(num(rng), den(rng)));
            if (!v.is_zero()) t[d] = v;  // tables store no explicit zeros
        }
        CHECK(invert(expand(t, 12), 12) == t);
        CHECK(expand(invert(t, 12), 12) == t);
    }
}

TEST_CASE("tables reject nonpositive degrees") {
    Table bad{{0, Quad::one()}};
    CHECK_THROWS_AS(expand(bad, 4), std::invalid_argument);
    CHECK_THROWS_AS(invert(bad, 4), std::invalid_argument);
}

TEST_CASE("L(2; chi) partial sums") {
    double v10 = dirichlet_l2(1e-10);
    CHECK(std::abs(v10 - 0.7813024128964863) <= 1e-10);
    // cross-check against the Clausen route
    CHECK(std::abs(v10 - dilog::l2chi_via_dilog()) <= 1e-9);
    // a weaker tolerance still lands within itself
    double v2 = dirichlet_l2(1e-2);
    CHECK(std::abs(v2 - v10) <= 1e-2);
    CHECK_THROWS_AS(dirichlet_l2(0.0), std::invalid_argument);
}
