#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vgc {

// Exact rational arithmetic. mpq_class keeps values canonical
// (gcd-reduced, positive denominator), which is exactly the invariant
// we need, so we use it directly rather than wrapping it.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_str(const std::string& num, const std::string& den = "1") {
    Rat q{Int(num), Int(den)};
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
    q.canonicalize();
    return q;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("0^negative");
        return rat_pow(Rat(1) / base, -e);
    }
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// True iff the (canonical) denominator of q is a power of 3.
inline bool denominator_is_power_of_3(const Rat& q) {
    Int d = q.get_den();
    while (d % 3 == 0) d /= 3;
    return d == 1;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace vgc
