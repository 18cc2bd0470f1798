#include "vgcheck/dwork.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace vgc {
namespace dwork {

namespace {

// Degree-d binary form in (s, t) with coefficients in a ring R:
// coeffs[k] multiplies s^k t^{d-k}.
template <class R>
std::vector<R> form_mul(const std::vector<R>& f, const std::vector<R>& g) {
    std::vector<R> out(f.size() + g.size() - 1, R{});
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) out[i + j] = out[i + j] + f[i] * g[j];
    return out;
}

// Elements of Q(omega)[a, b] / (a^5 + b^5 - 27), normal form b-degree <= 4.
struct ABPoly {
    std::map<std::pair<int, int>, Quad> m;  // (deg_a, deg_b) -> coeff

    static ABPoly scalar(const Quad& q) {
        ABPoly p;
        if (!q.is_zero()) p.m[{0, 0}] = q;
        return p;
    }
    static ABPoly mono(const Quad& q, int i, int j) {
        ABPoly p;
        if (!q.is_zero()) p.m[{i, j}] = q;
        return p;
    }
    bool is_zero() const { return m.empty(); }

    void add_term(int i, int j, const Quad& q) {
        if (q.is_zero()) return;
        // reduce b^5 -> 27 - a^5
        if (j >= 5) {
            add_term(i, j - 5, Quad(Rat(27)) * q);
            add_term(i + 5, j - 5, -q);
            return;
        }
        auto it = m.find({i, j});
        if (it == m.end())
            m[{i, j}] = q;
        else {
            it->second += q;
            if (it->second.is_zero()) m.erase(it);
        }
    }

    friend ABPoly operator+(const ABPoly& x, const ABPoly& y) {
        ABPoly r = x;
        for (const auto& [k, v] : y.m) r.add_term(k.first, k.second, v);
        return r;
    }
    friend ABPoly operator-(const ABPoly& x, const ABPoly& y) {
        ABPoly r = x;
        for (const auto& [k, v] : y.m) r.add_term(k.first, k.second, -v);
        return r;
    }
    friend ABPoly operator*(const ABPoly& x, const ABPoly& y) {
        ABPoly r;
        for (const auto& [k1, v1] : x.m)
            for (const auto& [k2, v2] : y.m)
                r.add_term(k1.first + k2.first, k1.second + k2.second, v1 * v2);
        return r;
    }
};

template <class R>
bool all_zero(const std::vector<R>& form) {
    for (const auto& c : form)
        if (!c.is_zero()) return false;
    return true;
}

Tower scale(const Tower& t, const Quad& s) { return s * t; }
ABPoly scale(const ABPoly& p, const Quad& s) { return ABPoly::scalar(s) * p; }

// The Dwork quintic form applied to the line s p + t q, coefficients in R.
// Returns the six coefficients of the degree-5 binary form
//   prod_j x_j - (z5/5) sum_j x_j^5, with z5 the ring element for z^{1/5}.
template <class R>
std::vector<R> dwork_form_on_line(const std::array<R, 5>& p, const std::array<R, 5>& q,
                                  const R& z5, const Quad& one_fifth) {
    std::vector<R> prod{p[0], q[0]};
    for (int j = 1; j < 5; ++j) prod = form_mul(prod, std::vector<R>{p[j], q[j]});
    std::vector<R> psum(6, R{});
    for (int j = 0; j < 5; ++j) {
        std::vector<R> f{p[j], q[j]};
        std::vector<R> f5 = f;
        for (int i = 1; i < 5; ++i) f5 = form_mul(f5, f);
        for (int k = 0; k < 6; ++k) psum[k] = psum[k] + f5[k];
    }
    std::vector<R> out(6, R{});
    for (int k = 0; k < 6; ++k) out[k] = prod[k] - scale(z5 * psum[k], one_fifth);
    return out;
}

std::array<Tower, 5> span_point_p(const Quad& omega, const Tower& a, const Tower& b) {
    Quad third = Quad(rat(1, 3));
    Quad c1 = Quad::one() - omega;
    return {Tower::one(), Tower::zero(), Tower(-omega), third * c1 * a, third * c1 * b};
}
std::array<Tower, 5> span_point_q(const Quad& omega, const Tower& a, const Tower& b) {
    Quad third = Quad(rat(1, 3));
    Quad om2 = omega * omega;
    Quad c2 = Quad::one() - om2;
    return {Tower::zero(), Tower::one(), Tower(-om2), third * c2 * a, third * c2 * b};
}

// Gaussian-elimination rank of a small matrix over the tower field.
int tower_rank(std::vector<std::array<Tower, 4>> rows) {
    int r = 0;
    for (int c = 0; c < 4 && r < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (!rows[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        Tower d = rows[r][c].inv();
        for (int k = 0; k < 4; ++k) rows[r][k] = rows[r][k] * d;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Tower f = rows[i][c];
            for (int k = 0; k < 4; ++k) rows[i][k] = rows[i][k] - f * rows[r][k];
        }
        ++r;
    }
    return r;
}

}  // namespace

bool proj_equal(const ProjPoint& p, const ProjPoint& q) {
    if (!p.is_valid() || !q.is_valid()) throw std::invalid_argument("invalid projective point");
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (p.x[i] * q.x[j] != p.x[j] * q.x[i]) return false;
    return true;
}

std::array<Tower, 10> plucker(const ParamLine& line) {
    std::array<Tower, 10> pl;
    int k = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pl[k++] = line.p.x[i] * line.q.x[j] - line.p.x[j] * line.q.x[i];
    return pl;
}

bool same_line(const ParamLine& l1, const ParamLine& l2) {
    auto a = plucker(l1), b = plucker(l2);
    int piv = -1;
    for (int i = 0; i < 10; ++i)
        if (!a[i].is_zero()) {
            piv = i;
            break;
        }
    if (piv < 0) throw std::invalid_argument("degenerate line (zero Plucker vector)");
    if (b[piv].is_zero()) return false;
    for (int i = 0; i < 10; ++i)
        if (a[i] * b[piv] != b[i] * a[piv]) return false;
    return true;
}

bool DworkParams::valid() const {
    if (Quad::one() + omega + omega * omega != Quad::zero()) return false;
    return tower_pow(a, 5) + tower_pow(b, 5) == Tower(Rat(27));
}

DworkParams degenerate_params(bool use_omega_sq) {
    DworkParams p;
    p.omega = use_omega_sq ? Quad::omega_sq() : Quad::omega();
    p.a = Tower::gen_a();
    p.b = Tower::zero();
    return p;
}

ParamLine build_van_geemen_line(const DworkParams& params) {
    if (!params.valid())
        throw std::invalid_argument("van Geemen line undefined: constraints "
                                    "1+omega+omega^2 = 0, a^5+b^5 = 27 not satisfied");
    ParamLine l;
    l.p.x = span_point_p(params.omega, params.a, params.b);
    l.q.x = span_point_q(params.omega, params.a, params.b);
    return l;
}

bool verify_on_dwork(const ParamLine& line, const DworkParams& params) {
    Tower z5 = params.z_fifth_root();
    auto form = dwork_form_on_line<Tower>(line.p.x, line.q.x, z5, Quad(rat(1, 5)));
    return all_zero(form);
}

bool verify_on_dwork_generic(const Quad& omega) {
    if (Quad::one() + omega + omega * omega != Quad::zero()) return false;
    Quad third(rat(1, 3));
    Quad om2 = omega * omega;
    std::array<ABPoly, 5> p = {
        ABPoly::scalar(Quad::one()), ABPoly::scalar(Quad::zero()), ABPoly::scalar(-omega),
        ABPoly::mono(third * (Quad::one() - omega), 1, 0),
        ABPoly::mono(third * (Quad::one() - omega), 0, 1)};
    std::array<ABPoly, 5> q = {
        ABPoly::scalar(Quad::zero()), ABPoly::scalar(Quad::one()), ABPoly::scalar(-om2),
        ABPoly::mono(third * (Quad::one() - om2), 1, 0),
        ABPoly::mono(third * (Quad::one() - om2), 0, 1)};
    ABPoly z5 = ABPoly::mono(Quad(rat(1, 6)), 1, 1);  // z^{1/5} = a b / 6
    auto form = dwork_form_on_line<ABPoly>(p, q, z5, Quad(rat(1, 5)));
    return all_zero(form);
}

OrbitSizes orbit_sizes(const ParamLine& line) {
    OrbitSizes out;
    auto pl = plucker(line);

    // ---- (Z/5)^3 orbit.
    // Scaling coordinate i by zeta^{k_i} multiplies pl_{ij} by zeta^{k_i+k_j}.
    // zeta is not in the tower field, so g L = h L iff (k_i + k_j) differs
    // from (k'_i + k'_j) by a constant on the Plucker support. Canonical key:
    // the exponent function on the support, shifted so its first value is 0.
    std::vector<std::pair<int, int>> support;  // (i, j) pairs with pl != 0
    {
        int idx = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j, ++idx)
                if (!pl[idx].is_zero()) support.push_back({i, j});
    }
    if (support.empty()) throw std::invalid_argument("degenerate line (zero Plucker vector)");

    auto g5_key = [&](const std::array<int, 5>& k) {
        std::vector<int> key;
        key.reserve(support.size());
        int base = (k[support[0].first] + k[support[0].second]) % 5;
        for (auto [i, j] : support) key.push_back(((k[i] + k[j] - base) % 5 + 5) % 5);
        return key;
    };
    // Breadth-first closure under three generators of
    // {k in (Z/5)^5 : sum k = 0}/diagonal, using representatives with k_4 = 0.
    const std::array<std::array<int, 5>, 3> gens = {{{1, 0, 0, 4, 0}, {0, 1, 0, 4, 0}, {0, 0, 1, 4, 0}}};
    std::set<std::vector<int>> seen;
    std::vector<std::array<int, 5>> frontier{{0, 0, 0, 0, 0}};
    seen.insert(g5_key(frontier[0]));
    while (!frontier.empty()) {
        std::vector<std::array<int, 5>> next;
        for (const auto& k : frontier)
            for (const auto& g : gens) {
                std::array<int, 5> k2;
                for (int i = 0; i < 5; ++i) k2[i] = (k[i] + g[i]) % 5;
                if (seen.insert(g5_key(k2)).second) next.push_back(k2);
            }
        frontier = std::move(next);
    }
    out.g5_orbit = static_cast<int>(seen.size());

    // ---- S_5 orbit: breadth-first closure under adjacent transpositions,
    // with lines keyed by their Plucker vector normalized so the first
    // nonzero entry is 1.
    auto canon = [&](const ParamLine& l) {
        auto v = plucker(l);
        int piv = -1;
        for (int i = 0; i < 10; ++i)
            if (!v[i].is_zero()) {
                piv = i;
                break;
            }
        Tower d = v[piv].inv();
        std::string key;
        for (int i = 0; i < 10; ++i) key += to_string(v[i] * d) + ";";
        return key;
    };
    auto permute = [](const ParamLine& l, int i) {  // swap coordinates i, i+1
        ParamLine r = l;
        std::swap(r.p.x[i], r.p.x[i + 1]);
        std::swap(r.q.x[i], r.q.x[i + 1]);
        return r;
    };
    std::set<std::string> orbit;
    std::vector<ParamLine> front{line};
    std::string k0 = canon(line);
    orbit.insert(k0);
    while (!front.empty()) {
        std::vector<ParamLine> next;
        for (const auto& l : front)
            for (int i = 0; i < 4; ++i) {
                ParamLine l2 = permute(l, i);
                if (orbit.insert(canon(l2)).second) next.push_back(l2);
            }
        front = std::move(next);
    }
    out.s5_orbit = static_cast<int>(orbit.size());
    out.s5_stabilizer = 120 / out.s5_orbit;
    out.lower_bound = static_cast<long>(out.g5_orbit) * out.s5_orbit;
    return out;
}

std::vector<std::pair<int, ProjPoint>> boundary_intersections(const ParamLine& line) {
    if (!line.p.x[4].is_zero() || !line.q.x[4].is_zero())
        throw std::invalid_argument("boundary intersections require the b = 0 line in {x5 = 0}");
    std::vector<std::pair<int, ProjPoint>> out;
    for (int i = 0; i < 4; ++i) {
        const Tower& pi = line.p.x[i];
        const Tower& qi = line.q.x[i];
        if (pi.is_zero() && qi.is_zero())
            throw std::invalid_argument("line contained in coordinate hyperplane x" +
                                        std::to_string(i + 1) + " = 0");
        // s p + t q with (s, t) = (q_i, -p_i) kills coordinate i.
        ProjPoint pt;
        for (int j = 0; j < 5; ++j) pt.x[j] = qi * line.p.x[j] - pi * line.q.x[j];
        if (!pt.is_valid()) throw std::invalid_argument("degenerate line");
        out.push_back({i + 1, pt});
    }
    for (size_t s = 0; s < out.size(); ++s)
        for (size_t t = s + 1; t < out.size(); ++t)
            if (proj_equal(out[s].second, out[t].second))
                throw std::invalid_argument("non-transverse boundary intersection");
    return out;
}

bool verify_limit_equations(const DworkParams& params) {
    if (!params.b.is_zero() || tower_pow(params.a, 5) != Tower(Rat(27))) return false;
    ParamLine line = build_van_geemen_line(params);

    Quad om = params.omega, om2 = params.omega * params.omega;
    Tower c1 = Quad(rat(-1, 3)) * (Quad::one() - om) * params.a;   // -(a/3)(1-omega)
    Tower c2 = Quad(rat(-1, 3)) * (Quad::one() - om2) * params.a;  // -(a/3)(1-omega^2)
    Tower one = Tower::one(), zero = Tower::zero();
    // Homogenized forms on {x5 = 0}, coefficients for (x1, x2, x3, x4):
    //   f1: c1 x2 + c2 x3 + x4,  f2: c1 x1 + c2 x2 + x4,  f3: c2 x1 + c1 x3 + x4.
    std::vector<std::array<Tower, 4>> forms = {{zero, c1, c2, one},
                                               {c1, c2, zero, one},
                                               {c2, zero, c1, one}};
    for (const auto& f : forms)
        for (const ProjPoint* pt : {&line.p, &line.q}) {
            Tower v = zero;
            for (int j = 0; j < 4; ++j) v += f[j] * pt->x[j];
            if (!v.is_zero()) return false;
        }
    // The forms must span the full 2-dimensional space of linear forms
    // vanishing on the line, i.e. have rank exactly 2.
    return tower_rank(forms) == 2;
}

}  // namespace dwork
}  // namespace vgc
