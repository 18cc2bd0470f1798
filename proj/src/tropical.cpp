#include "vgcheck/tropical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace vgc {
namespace tropical {

namespace {

Int gcd3(const IVec3& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

bool is_zero(const IVec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

}  // namespace

IVec3 primitive(const IVec3& v) {
    if (is_zero(v)) throw std::invalid_argument("zero vector has no primitive direction");
    Int g = gcd3(v);
    return {v[0] / g, v[1] / g, v[2] / g};
}

bool check_balancing(const TropCurve& c) {
    std::vector<IVec3> sums(c.vertices.size(), IVec3{Int(0), Int(0), Int(0)});
    for (const Edge& e : c.edges) {
        if (e.from < 0 || e.from >= static_cast<int>(c.vertices.size())) return false;
        if (e.weight <= 0) return false;
        if (is_zero(e.direction) || gcd3(e.direction) != 1) return false;
        if (e.to) {
            if (*e.to < 0 || *e.to >= static_cast<int>(c.vertices.size())) return false;
            // direction must be the primitive vector of (to - from): the
            // difference is a positive rational multiple of it.
            const Vec3& a = c.vertices[e.from];
            const Vec3& b = c.vertices[*e.to];
            Rat lambda;  // b - a = lambda * direction
            bool have = false;
            for (int k = 0; k < 3; ++k) {
                Rat diff = b[k] - a[k];
                if (e.direction[k] == 0) {
                    if (diff != 0) return false;
                } else {
                    Rat l = diff / Rat(e.direction[k]);
                    if (have && l != lambda) return false;
                    lambda = l;
                    have = true;
                }
            }
            if (!have || lambda <= 0) return false;
        }
        for (int k = 0; k < 3; ++k) {
            sums[e.from][k] += e.weight * e.direction[k];
            if (e.to) sums[*e.to][k] -= e.weight * e.direction[k];
        }
    }
    return std::all_of(sums.begin(), sums.end(), [](const IVec3& s) { return is_zero(s); });
}

TropCurve make_V() {
    TropCurve c;
    c.vertices.push_back({Rat(0), Rat(0), Rat(0)});
    auto ray = [&](long x, long y, long z) {
        Edge e;
        e.from = 0;
        e.direction = {Int(x), Int(y), Int(z)};
        e.weight = 1;
        c.edges.push_back(e);
    };
    ray(1, 0, 0);
    ray(0, 1, 0);
    ray(0, 0, 1);
    ray(-1, -1, -1);
    return c;
}

TropCurve make_V_smoothed(int i, const Rat& eps) {
    if (i < 1 || i > 3) throw std::invalid_argument("smoothing index must be 1, 2 or 3");
    if (eps <= 0) throw std::invalid_argument("smoothing parameter must be positive");
    // Build V(1; eps) and cyclically permute coordinates for i = 2, 3.
    // rot maps axis k to axis (k + i - 1) mod 3.
    auto rot = [&](int k) { return (k + i - 1) % 3; };
    Rat h = eps / 2;

    Vec3 vplus{}, vminus{};
    vplus[rot(1)] = h;
    vplus[rot(2)] = h;
    vminus[rot(1)] = -h;
    vminus[rot(2)] = -h;

    TropCurve c;
    c.vertices.push_back(vplus);   // vertex 0
    c.vertices.push_back(vminus);  // vertex 1

    auto dir = [&](long d0, long d1, long d2) {
        IVec3 v{};
        v[rot(0)] = d0;
        v[rot(1)] = d1;
        v[rot(2)] = d2;
        return v;
    };
    auto leg = [&](int from, IVec3 d) {
        Edge e;
        e.from = from;
        e.direction = d;
        c.edges.push_back(e);
    };
    leg(0, dir(0, 1, 0));    // (0, t + eps/2, eps/2)
    leg(0, dir(0, 0, 1));    // (0, eps/2, t + eps/2)
    Edge bounded;            // (0, -t + eps/2, -t + eps/2), t in [0, eps]
    bounded.from = 0;
    bounded.to = 1;
    bounded.direction = dir(0, -1, -1);
    c.edges.push_back(bounded);
    leg(1, dir(1, 0, 0));    // (t, -eps/2, -eps/2)
    leg(1, dir(-1, -1, -1)); // (-t, -t - eps/2, -t - eps/2)
    return c;
}

std::vector<IVec3> tropicalization_type(
    const std::vector<std::pair<int, dwork::ProjPoint>>& boundary) {
    if (boundary.size() != 4)
        throw std::invalid_argument("expected four boundary points (one per hyperplane)");
    std::map<int, int> seen;
    for (const auto& [h, pt] : boundary) {
        if (h < 1 || h > 4) throw std::invalid_argument("hyperplane index out of range");
        if (++seen[h] > 1) throw std::invalid_argument("repeated hyperplane: non-transverse data");
        // Transversality: the point must not lie on a second coordinate
        // hyperplane of P^3.
        int zeros = 0;
        for (int j = 0; j < 4; ++j)
            if (pt.x[j].is_zero()) ++zeros;
        if (zeros != 1) throw std::invalid_argument("non-transverse boundary point");
    }
    std::vector<IVec3> dirs;
    for (const auto& [h, pt] : boundary) {
        if (h <= 3) {
            IVec3 d{Int(0), Int(0), Int(0)};
            d[h - 1] = -1;
            dirs.push_back(d);
        } else {
            dirs.push_back({Int(1), Int(1), Int(1)});
        }
    }
    return dirs;
}

bool same_directions_up_to_global_sign(std::vector<IVec3> a, std::vector<IVec3> b) {
    if (a.size() != b.size()) return false;
    auto sorted = [](std::vector<IVec3> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    auto negated = [](std::vector<IVec3> v) {
        for (auto& d : v)
            for (auto& x : d) x = -x;
        return v;
    };
    return sorted(a) == sorted(b) || sorted(negated(a)) == sorted(b);
}

ConormalPoint::ConormalPoint(std::array<Rat, 3> mod, std::array<Rat, 3> arg)
    : modulus(std::move(mod)), turns(std::move(arg)) {
    for (const auto& m : modulus)
        if (m <= 0) throw std::invalid_argument("moduli must be positive");
    for (auto& t : turns) {
        // reduce mod 1 into [0, 1)
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
        t -= Rat(fl);
    }
}

std::string curve_to_json(const TropCurve& c) {
    using Json = nlohmann::ordered_json;
    auto rat_value = [](const Rat& r) -> Json {
        if (r.get_den() == 1 && mpz_fits_slong_p(r.get_num_mpz_t()))
            return r.get_num().get_si();
        return r.get_str();
    };
    Json vertices = Json::array();
    for (const auto& v : c.vertices) vertices.push_back({rat_value(v[0]), rat_value(v[1]), rat_value(v[2])});
    Json edges = Json::array();
    for (const auto& e : c.edges) {
        Json je{{"from", e.from}};
        if (e.to)
            je["to"] = *e.to;
        else
            je["rayDir"] = {static_cast<long>(e.direction[0].get_si()),
                            static_cast<long>(e.direction[1].get_si()),
                            static_cast<long>(e.direction[2].get_si())};
        je["weight"] = e.weight;
        edges.push_back(je);
    }
    return Json{{"vertices", vertices}, {"edges", edges}}.dump(1);
}

TropCurve curve_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    auto parse_rat = [](const nlohmann::json& v) -> Rat {
        if (v.is_number_integer()) return Rat(v.get<long>());
        if (v.is_string()) {
            Rat r(v.get<std::string>());
            r.canonicalize();
            return r;
        }
        throw std::invalid_argument("coordinate must be an integer or rational string");
    };
    TropCurve c;
    for (const auto& v : j.at("vertices")) {
        if (v.size() != 3) throw std::invalid_argument("vertices must have 3 coordinates");
        c.vertices.push_back({parse_rat(v[0]), parse_rat(v[1]), parse_rat(v[2])});
    }
    for (const auto& je : j.at("edges")) {
        Edge e;
        e.from = je.at("from").get<int>();
        e.weight = je.value("weight", 1L);
        if (je.contains("to")) {
            e.to = je["to"].get<int>();
            if (e.from < 0 || *e.to < 0 || e.from >= static_cast<int>(c.vertices.size()) ||
                *e.to >= static_cast<int>(c.vertices.size()))
                throw std::invalid_argument("edge endpoint out of range");
            // direction: primitive vector of the endpoint difference
            IVec3 diff;
            bool zero = true;
            for (int k = 0; k < 3; ++k) {
                Rat d = c.vertices[*e.to][k] - c.vertices[e.from][k];
                zero = zero && d == 0;
            }
            if (zero) throw std::invalid_argument("bounded edge with equal endpoints");
            // scale the rational difference to a primitive integer vector
            Int lcm_den = 1;
            for (int k = 0; k < 3; ++k) {
                Rat d = c.vertices[*e.to][k] - c.vertices[e.from][k];
                lcm_den = lcm(lcm_den, d.get_den());
            }
            for (int k = 0; k < 3; ++k) {
                Rat d = (c.vertices[*e.to][k] - c.vertices[e.from][k]) * Rat(lcm_den);
                diff[k] = d.get_num();
            }
            e.direction = primitive(diff);
        } else {
            const auto& rd = je.at("rayDir");
            if (rd.size() != 3) throw std::invalid_argument("rayDir must have 3 entries");
            e.direction = {Int(rd[0].get<long>()), Int(rd[1].get<long>()), Int(rd[2].get<long>())};
        }
        c.edges.push_back(e);
    }
    return c;
}

bool conormal_member(const ConormalPoint& p, int leg, bool cover) {
    if (leg < 1 || leg > 4) throw std::invalid_argument("leg index must be 1..4");
    // cover = true admits arguments 2 pi m/5: turn in {0, 1/5, ..., 4/5}.
    auto turn_ok = [&](const Rat& t) {
        if (!cover) return t == 0;
        Rat five_t = 5 * t;
        return five_t.get_den() == 1;
    };
    if (leg <= 3) {
        int j = leg % 3, k = (leg + 1) % 3;      // the other two coordinates
        int i = leg - 1;                         // the leg coordinate
        return p.modulus[j] == p.modulus[k] && p.modulus[i] >= 1 && turn_ok(p.turns[i]);
    }
    if (!(p.modulus[0] == p.modulus[1] && p.modulus[1] == p.modulus[2])) return false;
    Rat prod = p.modulus[0] * p.modulus[1] * p.modulus[2];
    Rat total_turn = p.turns[0] + p.turns[1] + p.turns[2];
    // reduce the turn sum mod 1
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), total_turn.get_num_mpz_t(), total_turn.get_den_mpz_t());
    total_turn -= Rat(fl);
    return prod <= 1 && turn_ok(total_turn);
}

}  // namespace tropical
}  // namespace vgc
