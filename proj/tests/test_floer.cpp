#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "vgcheck/floer_ss.hpp"

using namespace vgc;
using namespace vgc::floer;

namespace {
const std::string kDataPath = std::string(VGCHECK_DATA_DIR) + "/floer_incidence.json";
}

TEST_CASE("E2 dimensions from the summand data") {
    GradedDims e2 = build_e2(cochain_summands());
    // direct summation oracle: (deg -1..4) = (5, 15, 22, 22, 15, 5)
    std::array<long, 6> want = {5, 15, 22, 22, 15, 5};
    for (int p = -1; p <= 4; ++p) CHECK(e2.at(p) == want[p + 1]);
    CHECK(e2.euler() == 0);
}

TEST_CASE("empty spec gives zeros; build_e2 is additive") {
    CHECK(build_e2({}).dim.empty());
    // only the five H*(T^2)[+1] summands: (5, 10, 5) at degrees -1, 0, 1
    GradedDims tori = build_e2({{"H*(T^2)[+1]", {1, 2, 1}, 1, 5}});
    CHECK(tori.at(-1) == 5);
    CHECK(tori.at(0) == 10);
    CHECK(tori.at(1) == 5);
    // additivity under concatenation
    auto spec = cochain_summands();
    GradedDims whole = build_e2(spec);
    std::vector<Summand> head(spec.begin(), spec.begin() + 2), tail(spec.begin() + 2, spec.end());
    GradedDims sum = build_e2(head);
    for (const auto& [p, d] : build_e2(tail).dim) sum.add(p, d);
    CHECK(sum == whole);
}

TEST_CASE("Morse counts match the critical point data") {
    // 2 index 0, 6 index 1, 4 index 2; the relative complex is its dual
    auto spec = cochain_summands();
    REQUIRE(spec.size() == 5);
    CHECK(spec[3].betti == std::vector<long>{2, 6, 4});
    CHECK(spec[4].betti == std::vector<long>{0, 4, 6, 2});
}

TEST_CASE("shipped incidence data validates") {
    IncidenceFile file = load_incidence(kDataPath);
    GradedDims e2 = build_e2(file.summands);
    ValidationResult v = validate(file.diff, e2);
    for (const auto& p : v.problems) MESSAGE(p);
    CHECK(v.ok);
    CHECK(rank(file.diff.d1) == 10);
    CHECK(rank(file.diff.d2) == 8);
    CHECK(rank(file.diff.d3) == 4);
    CHECK((file.diff.d2 * file.diff.d1).is_zero());
    CHECK((file.diff.d3 * file.diff.d2).is_zero());
}

TEST_CASE("cohomology ranks") {
    IncidenceFile file = load_incidence(kDataPath);
    GradedDims e2 = build_e2(file.summands);
    GradedDims h = cohomology_ranks(e2, file.diff);
    std::array<long, 6> want = {1, 3, 4, 4, 3, 1};
    for (int p = -1; p <= 4; ++p) CHECK(h.at(p) == want[p + 1]);
    // alternating sum preserved: 5-15+22-22+15-5 = 0 = 1-3+4-4+3-1
    CHECK(h.euler() == 0);
    CHECK(e2.euler() == 0);
    // never exceeds the page dimensions
    for (const auto& [p, d] : h.dim) CHECK(d <= e2.at(p));
}

TEST_CASE("zero differentials leave the page unchanged") {
    GradedDims e2 = build_e2(cochain_summands());
    DiffData zero;
    zero.d1 = IntMatrix(22, 22);
    zero.d2 = IntMatrix(15, 22);
    zero.d3 = IntMatrix(5, 15);
    CHECK(cohomology_ranks(e2, zero) == e2);
}

TEST_CASE("inconsistent ranks are rejected") {
    GradedDims tiny;
    tiny.add(1, 1);
    tiny.add(2, 1);
    DiffData too_big;
    too_big.d1 = IntMatrix::from_rows({{1}});
    too_big.d2 = IntMatrix::from_rows({{1}});  // would leave -1 at degree 2
    too_big.d3 = IntMatrix(0, 0);
    CHECK_THROWS_AS(cohomology_ranks(tiny, too_big), std::invalid_argument);
}

TEST_CASE("rank mismatches are reported with their degree") {
    IncidenceFile file = load_incidence(kDataPath);
    GradedDims e2 = build_e2(file.summands);
    DiffData broken = file.diff;
    broken.d3 = IntMatrix(5, 15);  // rank 0, expected 4
    ValidationResult v = validate(broken, e2);
    CHECK_FALSE(v.ok);
    REQUIRE(!v.problems.empty());
    CHECK(v.problems[0].find("d3") != std::string::npos);
    CHECK(v.problems[0].find("degree 3") != std::string::npos);
}

TEST_CASE("poincare duality") {
    GradedDims h;
    int p = -1;
    for (long d : {1, 3, 4, 4, 3, 1}) h.add(p++, d);
    CHECK(poincare_check(h, 3));
    h.add(4, 1);  // (1,3,4,4,3,2)
    CHECK_FALSE(poincare_check(h, 3));
    CHECK(poincare_check(GradedDims{}, 3));
}

TEST_CASE("corrupt data file is reported by name") {
    std::string path = "/tmp/vgcheck_corrupt_incidence.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    try {
        load_incidence(path);
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find(path) != std::string::npos);
    }
    CHECK_THROWS_AS(load_incidence("/nonexistent/file.json"), std::runtime_error);
}
