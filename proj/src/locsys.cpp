#include "vgcheck/locsys.hpp"

#include <numeric>
#include <stdexcept>

namespace vgc {
namespace locsys {

namespace {

Tower sign_tower(int s) { return s >= 0 ? Tower::one() : -Tower::one(); }

}  // namespace

Tower lambda_monomial(const std::array<Tower, 5>& mu, int i) {
    switch (i) {
        case 0: return mu[1].inv() * mu[4].inv();
        case 1: return sign_tower(kLongitudeSign[1]) * (mu[0].inv() * mu[2]);
        case 2: return sign_tower(kLongitudeSign[2]) * (mu[1] * mu[3].inv());
        case 3: return sign_tower(kLongitudeSign[3]) * (mu[2].inv() * mu[4]);
        case 4: return sign_tower(kLongitudeSign[4]) * (mu[0].inv() * mu[3]);
        default: throw std::invalid_argument("holonomy index out of range");
    }
}

bool HolonomyTuple::consistent(std::string* why) const {
    for (int i = 0; i < 5; ++i) {
        if (mu[i].is_zero() || lambda[i].is_zero()) {
            if (why) *why = "zero holonomy at index " + std::to_string(i);
            return false;
        }
    }
    for (int i = 0; i < 5; ++i)
        if (lambda[i] != lambda_monomial(mu, i)) {
            if (why) *why = "lambda_" + std::to_string(i) + " does not match its longitude monomial";
            return false;
        }
    return true;
}

ObstructionResidues residues(const HolonomyTuple& h) {
    for (int i = 0; i < 5; ++i)
        if (h.mu[i].is_zero() || h.lambda[i].is_zero())
            throw std::domain_error("zero holonomy");
    const Tower one = Tower::one();
    ObstructionResidues out;
    out.r[0] = one + h.mu[0].inv() + h.mu[0].inv() * h.lambda[0].inv();
    out.r[1] = -one - tower_pow(h.mu[1], 5) + tower_pow(h.lambda[1], -5);
    out.r[2] = -one - tower_pow(h.mu[2], -5) - tower_pow(h.lambda[2], 5);
    out.r[3] = -one - tower_pow(h.mu[3], -5) + tower_pow(h.lambda[3], 5);
    out.r[4] = -one + tower_pow(h.mu[4], 5) + tower_pow(h.mu[4], 5) * tower_pow(h.lambda[4], 5);
    return out;
}

HolonomyTuple van_geemen_tuple(bool use_omega_sq, const Tower& a) {
    if (tower_pow(a, 5) != Tower(Rat(27)))
        throw std::invalid_argument("van Geemen tuple requires a^5 = 27");
    Quad w = use_omega_sq ? Quad::omega_sq() : Quad::omega();
    Quad w2 = w * w;
    Tower third_a = Quad(rat(1, 3)) * a;

    HolonomyTuple h;
    h.mu[0] = Tower(w);
    h.mu[1] = Tower(-w);
    h.mu[2] = ((Quad::one() - w2) * third_a).inv();
    h.mu[3] = Tower(-w).inv();
    h.mu[4] = Tower(-w2).inv();
    for (int i = 0; i < 5; ++i) h.lambda[i] = lambda_monomial(h.mu, i);
    return h;
}

ExtendResult extend_point(const Tower& mu0, const Tower& lambda0,
                          const std::vector<Tower>& root_pool) {
    ExtendResult out;
    if (mu0.is_zero() || lambda0.is_zero()) throw std::domain_error("zero holonomy");
    const Tower one = Tower::one();
    if (!(one + mu0.inv() + mu0.inv() * lambda0.inv()).is_zero())
        throw std::invalid_argument("(mu_0, lambda_0) is not on the pair of pants r0 = 0");

    Tower c = -tower_pow(mu0, 5) - tower_pow(lambda0, -5);
    if (c.is_zero()) {
        out.diagnostics.push_back("degenerate point: the lambda_4 equation has no solutions");
        return out;
    }
    for (const Tower& l4 : root_pool) {
        if (l4.is_zero()) continue;
        Tower x = tower_pow(l4, 5);
        if (!(c * x * x + c * x + one).is_zero()) continue;  // lambda_4^5 candidates
        if ((one + x).is_zero()) {
            out.diagnostics.push_back("candidate lambda_4 with 1 + lambda_4^5 = 0 skipped");
            continue;
        }
        Tower mu4_5 = (one + x).inv();
        for (const Tower& m4 : root_pool) {
            if (m4.is_zero() || tower_pow(m4, 5) != mu4_5) continue;
            HolonomyTuple h;
            h.mu[0] = mu0;
            h.mu[4] = m4;
            h.mu[3] = -(mu0 * l4);            // lambda_4 = -mu_0^{-1} mu_3
            h.mu[1] = (lambda0 * m4).inv();   // lambda_0 = mu_1^{-1} mu_4^{-1}
            Tower l1_inv5 = one + tower_pow(h.mu[1], 5);
            if (l1_inv5.is_zero()) {
                out.diagnostics.push_back("candidate with lambda_1^{-5} = 0 skipped");
                continue;
            }
            for (const Tower& l1 : root_pool) {
                if (l1.is_zero() || tower_pow(l1, -5) != l1_inv5) continue;
                h.mu[2] = mu0 * l1;  // lambda_1 = mu_0^{-1} mu_2
                for (int i = 0; i < 5; ++i) h.lambda[i] = lambda_monomial(h.mu, i);
                if (residues(h).all_zero() && h.consistent())
                    out.tuples.push_back(h);
                else
                    out.diagnostics.push_back("candidate failed residue self-check");
            }
        }
    }
    return out;
}

std::vector<Tower> van_geemen_root_pool() {
    std::vector<Tower> pool;
    auto push_unique = [&pool](const Tower& v) {
        for (const Tower& u : pool)
            if (u == v) return;
        pool.push_back(v);
    };
    Tower a3 = Quad(rat(1, 3)) * Tower::gen_a();
    std::vector<Tower> bases = {Tower::one(), (Quad::one() - Quad::omega()) * a3,
                                (Quad::one() - Quad::omega_sq()) * a3};
    for (const Tower& b : bases)
        for (int i = 0; i < 3; ++i)
            for (int sign = 0; sign < 2; ++sign) {
                Tower v = Tower(quad_pow(Quad::omega(), i)) * b;
                if (sign) v = -v;
                push_unique(v);
                push_unique(v.inv());
            }
    return pool;
}

long riemann_hurwitz_genus(long degree, int punctures,
                           const std::vector<std::vector<long>>& cycles) {
    if (degree < 1) throw std::invalid_argument("degree must be positive");
    if (punctures != static_cast<int>(cycles.size()))
        throw std::invalid_argument("puncture count does not match cycle data");
    long total_cycles = 0;
    for (const auto& per_puncture : cycles) {
        long sum = std::accumulate(per_puncture.begin(), per_puncture.end(), 0L);
        if (sum != degree)
            throw std::invalid_argument("cycle lengths over a puncture must sum to the degree");
        for (long len : per_puncture)
            if (len < 1) throw std::invalid_argument("cycle lengths must be positive");
        total_cycles += static_cast<long>(per_puncture.size());
    }
    // chi of the punctured cover = degree * chi(punctured base);
    // filling the punctures adds one per cycle: 2 - 2g = chi_open + #cycles.
    long chi_open = degree * (2 - punctures);
    long two_minus_2g = chi_open + total_cycles;
    if ((two_minus_2g % 2) != 0) throw std::invalid_argument("inconsistent cycle data: odd Euler characteristic");
    return (2 - two_minus_2g) / 2;
}

}  // namespace locsys
}  // namespace vgc
