#include "vgcheck/bps.hpp"

#include <cmath>
#include <stdexcept>

namespace vgc {
namespace bps {

int chi(long k) {
    long r = ((k % 3) + 3) % 3;
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

Quad chi_by_formula(long k) {
    long r = ((k % 3) + 3) % 3;
    Quad wk = quad_pow(Quad::omega(), r);
    Quad w2k = quad_pow(Quad::omega(), (2 * r) % 3);
    return (wk - w2k) / Quad::sqrt_minus3();
}

Table expand(const Table& n, long order) {
    for (const auto& [d, v] : n)
        if (d < 1) throw std::invalid_argument("table degrees must be >= 1");
    Table out;
    for (long big_d = 1; big_d <= order; ++big_d) {
        Quad acc;
        for (long k = 1; k <= big_d; ++k) {
            if (big_d % k != 0 || chi(k) == 0) continue;
            auto it = n.find(big_d / k);
            if (it == n.end()) continue;
            acc += Quad(rat(chi(k)) / rat(k * k)) * it->second;
        }
        if (!acc.is_zero()) out[big_d] = acc;
    }
    return out;
}

Table invert(const Table& n_tilde, long order) {
    for (const auto& [d, v] : n_tilde)
        if (d < 1) throw std::invalid_argument("table degrees must be >= 1");
    Table n;
    for (long big_d = 1; big_d <= order; ++big_d) {
        Quad acc;
        if (auto it = n_tilde.find(big_d); it != n_tilde.end()) acc = it->second;
        for (long k = 2; k <= big_d; ++k) {
            if (big_d % k != 0 || chi(k) == 0) continue;
            if (auto it = n.find(big_d / k); it != n.end())
                acc -= Quad(rat(chi(k)) / rat(k * k)) * it->second;
        }
        if (!acc.is_zero()) n[big_d] = acc;
    }
    return n;
}

bool ring_member(const Quad& x) {
    return x.x == 0 && denominator_is_power_of_3(x.y);
}

Table tabulated_n_tilde() {
    Table t;
    t[1] = Quad(Rat(0), rat_str("280000"));
    t[2] = Quad(Rat(0), rat_str("22296200000", "3"));
    t[3] = Quad(Rat(0), rat_str("10031895589000000", "27"));
    t[4] = Quad(Rat(0), rat_str("660275805871745000000", "27"));
    return t;
}

double dirichlet_l2(double tolerance) {
    if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
    // Smallest M with 1/(2(3M+1)^2) + 3/(3M+1)^3 <= tolerance.
    long m = 0;
    auto tail = [](long mm) {
        long double b = 3.0L * mm + 1.0L;
        return 1.0L / (2.0L * b * b) + 3.0L / (b * b * b);
    };
    while (tail(m) > tolerance) m = m < 8 ? m + 1 : m + m / 4;
    // Sum blocks from the far end for a stable, deterministic result.
    long double acc = 0.0L;
    for (long i = m - 1; i >= 0; --i) {
        long double k1 = 3.0L * i + 1.0L, k2 = 3.0L * i + 2.0L;
        acc += 1.0L / (k1 * k1) - 1.0L / (k2 * k2);
    }
    return static_cast<double>(acc);
}

}  // namespace bps
}  // namespace vgc
