#pragma once

#include <map>
#include <string>
#include <vector>

#include "vgcheck/int_matrix.hpp"

namespace vgc {
namespace floer {

// Dimensions of a finitely supported graded vector space.
struct GradedDims {
    std::map<int, long> dim;

    long at(int degree) const {
        auto it = dim.find(degree);
        return it == dim.end() ? 0 : it->second;
    }
    void add(int degree, long d) {
        if (d == 0) return;
        dim[degree] += d;
        if (dim[degree] == 0) dim.erase(degree);
    }
    long euler() const {
        long e = 0;
        for (const auto& [p, d] : dim) e += (p % 2 == 0 ? d : -d);
        return e;
    }
    friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

// One graded summand of the Floer cochain space: Betti numbers b[i] at
// native degree i, contributing b[i] at degree i - shift (so shift +1 puts
// native degree 0 into degree -1). multiplicity repeats the summand.
struct Summand {
    std::string name;
    std::vector<long> betti;
    int shift = 0;
    int multiplicity = 1;
};

// Degreewise sums of shifted Betti numbers.
GradedDims build_e2(const std::vector<Summand>& spec);

// The cochain summands of the quotient Lagrangian: H*(L) with Betti vector
// (1,9,9,1), five copies of H*(T^2) = (1,2,1) shifted by +1 and five by -2,
// the Morse complex (2,6,4) shifted by -1, and the relative Morse complex
// (4,6,2) at native degrees 1..3 shifted by +1. Yields degreewise dims
// (5,15,22,22,15,5) on degrees -1..4.
std::vector<Summand> cochain_summands();

// The differentials on the collapsed page, realized as integer matrices:
// d1: degree 1 -> 2, d2: degree 2 -> 3, d3: degree 3 -> 4.
// The degree -1 and 0 differentials mirror d3 and d2 (the complex is
// self-dual), so these three matrices determine every rank.
struct DiffData {
    IntMatrix d1, d2, d3;
    int expected_rank_d1 = 10;
    int expected_rank_d2 = 8;
    int expected_rank_d3 = 4;
};

// Parses the incidence JSON {summands:[...], d1:[[...]], d2:[[...]],
// d3:[[...]], expected_ranks:{...}}. Throws std::runtime_error naming the
// file on parse or shape errors.
struct IncidenceFile {
    std::vector<Summand> summands;
    DiffData diff;
};
IncidenceFile load_incidence(const std::string& path);

// Checks matrix shapes against e2, d(p+1) o d(p) = 0, and the stated ranks;
// any failure is a data bug and is reported with the offending degree.
struct ValidationResult {
    bool ok = true;
    std::vector<std::string> problems;
};
ValidationResult validate(const DiffData& d, const GradedDims& e2);

// dim H^p = dim E2^p - rank(out of p) - rank(into p), with the degree -1
// and 0 ranks supplied by the duals of d3 and d2. Throws on a negative
// dimension. For the shipped data the result is (1,3,4,4,3,1) on -1..4.
GradedDims cohomology_ranks(const GradedDims& e2, const DiffData& d);

// dim H^p == dim H^{top_deg - p} across the support.
bool poincare_check(const GradedDims& h, int top_deg = 3);

}  // namespace floer
}  // namespace vgc
