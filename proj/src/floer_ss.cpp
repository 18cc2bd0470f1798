#include "vgcheck/floer_ss.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace vgc {
namespace floer {

GradedDims build_e2(const std::vector<Summand>& spec) {
    GradedDims out;
    for (const Summand& s : spec) {
        if (s.multiplicity < 1) throw std::invalid_argument("summand multiplicity must be >= 1");
        for (size_t i = 0; i < s.betti.size(); ++i) {
            if (s.betti[i] < 0) throw std::invalid_argument("negative Betti number");
            out.add(static_cast<int>(i) - s.shift, s.betti[i] * s.multiplicity);
        }
    }
    return out;
}

std::vector<Summand> cochain_summands() {
    return {
        {"H*(L)", {1, 9, 9, 1}, 0, 1},
        {"H*(T^2)[+1]", {1, 2, 1}, 1, 5},
        {"H*(T^2)[-2]", {1, 2, 1}, -2, 5},
        {"CM*(L')[-1]", {2, 6, 4}, -1, 1},
        {"CM*(L',dL')[+1]", {0, 4, 6, 2}, 1, 1},
    };
}

namespace {

IntMatrix parse_matrix(const nlohmann::json& j, const std::string& path, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array())
        throw std::runtime_error(path + ": missing matrix \"" + key + "\"");
    const auto& rows = j[key];
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != c)
            throw std::runtime_error(path + ": ragged rows in \"" + key + "\"");
        for (int k = 0; k < c; ++k) m(i, k) = rows[i][k].get<long>();
    }
    return m;
}

}  // namespace

IncidenceFile load_incidence(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open incidence data file");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": malformed JSON (" + e.what() + ")");
    }
    IncidenceFile out;
    if (!j.contains("summands") || !j["summands"].is_array())
        throw std::runtime_error(path + ": missing \"summands\"");
    for (const auto& s : j["summands"]) {
        Summand sm;
        sm.name = s.value("name", "");
        sm.shift = s.value("shift", 0);
        sm.multiplicity = s.value("multiplicity", 1);
        for (const auto& b : s.at("betti")) sm.betti.push_back(b.get<long>());
        out.summands.push_back(std::move(sm));
    }
    out.diff.d1 = parse_matrix(j, path, "d1");
    out.diff.d2 = parse_matrix(j, path, "d2");
    out.diff.d3 = parse_matrix(j, path, "d3");
    if (j.contains("expected_ranks")) {
        out.diff.expected_rank_d1 = j["expected_ranks"].value("d1", 10);
        out.diff.expected_rank_d2 = j["expected_ranks"].value("d2", 8);
        out.diff.expected_rank_d3 = j["expected_ranks"].value("d3", 4);
    }
    return out;
}

ValidationResult validate(const DiffData& d, const GradedDims& e2) {
    ValidationResult v;
    auto problem = [&v](const std::string& msg) {
        v.ok = false;
        v.problems.push_back(msg);
    };
    struct Entry {
        const IntMatrix* m;
        int from_deg;
        int expected_rank;
        const char* name;
    };
    const Entry entries[] = {{&d.d1, 1, d.expected_rank_d1, "d1"},
                             {&d.d2, 2, d.expected_rank_d2, "d2"},
                             {&d.d3, 3, d.expected_rank_d3, "d3"}};
    for (const auto& e : entries) {
        if (e.m->cols != e2.at(e.from_deg) || e.m->rows != e2.at(e.from_deg + 1)) {
            problem(std::string(e.name) + ": shape does not match the page dimensions at degree " +
                    std::to_string(e.from_deg));
            continue;
        }
        int r = rank(*e.m);
        if (r != e.expected_rank)
            problem(std::string(e.name) + ": rank " + std::to_string(r) + " != expected " +
                    std::to_string(e.expected_rank) + " at degree " + std::to_string(e.from_deg));
    }
    if (v.ok) {
        if (!(d.d2 * d.d1).is_zero()) problem("d2 o d1 != 0 (degrees 1 -> 3)");
        if (!(d.d3 * d.d2).is_zero()) problem("d3 o d2 != 0 (degrees 2 -> 4)");
    }
    return v;
}

GradedDims cohomology_ranks(const GradedDims& e2, const DiffData& d) {
    long r1 = rank(d.d1), r2 = rank(d.d2), r3 = rank(d.d3);
    // rank of the differential leaving degree p; degrees -1 and 0 mirror
    // degrees 3 and 2 through the duality of the complex.
    std::map<int, long> out_rank = {{-1, r3}, {0, r2}, {1, r1}, {2, r2}, {3, r3}, {4, 0}};
    GradedDims h;
    for (const auto& [p, dim] : e2.dim) {
        long ro = out_rank.count(p) ? out_rank[p] : 0;
        long ri = out_rank.count(p - 1) ? out_rank[p - 1] : 0;
        long hp = dim - ro - ri;
        if (hp < 0)
            throw std::invalid_argument("inconsistent ranks: negative dimension at degree " +
                                        std::to_string(p));
        h.add(p, hp);
    }
    if (h.euler() != e2.euler())
        throw std::invalid_argument("rank data does not preserve the Euler characteristic");
    return h;
}

bool poincare_check(const GradedDims& h, int top_deg) {
    for (const auto& [p, dim] : h.dim)
        if (dim != h.at(top_deg - p)) return false;
    return true;
}

}  // namespace floer
}  // namespace vgc
