#pragma once

#include <array>
#include <string>
#include <vector>

#include "vgcheck/tower.hpp"

namespace vgc {
namespace locsys {

// Rank-1 local systems on the doubled chain-link Lagrangian, encoded by the
// meridian holonomies mu_0..mu_4 and longitude holonomies lambda_0..lambda_4.
//
// The longitude relations force lambda_i to be a monomial in the mu_i up to
// a sign fixed by the spin structure on each neck. With the sign vector
// (+, +, -, -, -) the displayed teardrop-cancellation equations hold
// verbatim and the van Geemen solutions satisfy all five:
//   lambda_0 =  mu_1^{-1} mu_4^{-1}
//   lambda_1 =  mu_0^{-1} mu_2
//   lambda_2 = -mu_1 mu_3^{-1}
//   lambda_3 = -mu_2^{-1} mu_4
//   lambda_4 = -mu_0^{-1} mu_3
struct HolonomyTuple {
    std::array<Tower, 5> mu;
    std::array<Tower, 5> lambda;

    // Checks all holonomies nonzero and the five signed monomial relations.
    bool consistent(std::string* why = nullptr) const;
};

inline constexpr std::array<int, 5> kLongitudeSign = {1, 1, -1, -1, -1};

// The signed monomial value of lambda_i implied by the mu's.
Tower lambda_monomial(const std::array<Tower, 5>& mu, int i);

// Left-hand sides of the five teardrop-cancellation equations:
//   r0 = 1 + mu_0^{-1} + mu_0^{-1} lambda_0^{-1}
//   r1 = -1 - mu_1^5 + lambda_1^{-5}
//   r2 = -1 - mu_2^{-5} - lambda_2^5
//   r3 = -1 - mu_3^{-5} + lambda_3^5
//   r4 = -1 + mu_4^5 + mu_4^5 lambda_4^5
// The tuple is locally unobstructed iff all five vanish.
struct ObstructionResidues {
    std::array<Tower, 5> r;
    bool all_zero() const {
        for (const auto& x : r)
            if (!x.is_zero()) return false;
        return true;
    }
};
ObstructionResidues residues(const HolonomyTuple& h);

// The unobstructed local systems attached to the van Geemen lines:
//   mu_0 = omega, mu_1 = -omega, mu_2^{-1} = (a/3)(1 - omega^2),
//   mu_3^{-1} = -omega, mu_4^{-1} = -omega^2,
// lambda's from the signed monomial relations (in particular
// lambda_1^{-1} = -(a/3)(1-omega), lambda_2 = -omega^2,
// lambda_3 = -(a/3)(1-omega), lambda_4 = omega).
// use_omega_sq swaps omega and omega^2. Requires a^5 = 27.
HolonomyTuple van_geemen_tuple(bool use_omega_sq, const Tower& a);

// Extends a pair-of-pants point (mu_0, lambda_0) with r0 = 0 to full
// unobstructed tuples. lambda_4^5 solves the quadratic
//   c x^2 + c x + 1 = 0  with  c = -mu_0^5 - lambda_0^{-5}
// (equivalently 1/(1+x) - 1/x = c), after which mu_3 = -mu_0 lambda_4 and
// mu_1 = (lambda_0 mu_4)^{-1} are exact and only mu_4 and lambda_1 require
// fifth roots, drawn from root_pool. Degenerate candidates (1 + x = 0 or a
// vanishing denominator) are skipped with a diagnostic. Every returned
// tuple has residues identically zero.
struct ExtendResult {
    std::vector<HolonomyTuple> tuples;
    std::vector<std::string> diagnostics;
};
ExtendResult extend_point(const Tower& mu0, const Tower& lambda0,
                          const std::vector<Tower>& root_pool);

// The pool of fifth-root candidates appearing in van Geemen tuples:
// +-omega^i and +-omega^i (a/3)(1 - omega^j), with inverses.
std::vector<Tower> van_geemen_root_pool();

// Euler-characteristic genus count for an unramified degree-d cover of a
// sphere with p punctures, where puncture i splits into cycles[i] parts:
//   chi_open = d (2 - p),  2 - 2g = chi_open + sum #cycles.
// cycles[i] lists the cycle lengths over puncture i and must sum to d;
// punctures must equal cycles.size(). Throws on inconsistent data.
long riemann_hurwitz_genus(long degree, int punctures,
                           const std::vector<std::vector<long>>& cycles);

}  // namespace locsys
}  // namespace vgc
