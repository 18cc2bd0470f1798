#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "vgcheck/tower.hpp"

namespace vgc {
namespace dwork {

// Points and lines in P^4 with coordinates in the tower field
// Q(omega)[a]/(a^5 - 27). z is never a number here: z^{1/5} is the
// symbol a*b/6, so every containment identity is polynomial in a, b, omega
// and is checked exactly.

struct ProjPoint {
    std::array<Tower, 5> x;
    bool is_valid() const {
        for (const auto& c : x)
            if (!c.is_zero()) return true;
        return false;
    }
};

// Projective equality via the 2x2 minors pattern p_i q_j - p_j q_i = 0.
bool proj_equal(const ProjPoint& p, const ProjPoint& q);

struct ParamLine {
    ProjPoint p, q;  // the line {s p + t q}
};

// Plucker coordinates pl_{ij} = p_i q_j - p_j q_i for i < j, 10 entries.
std::array<Tower, 10> plucker(const ParamLine& line);

// Two parametrized lines span the same projective line iff their Plucker
// vectors are proportional.
bool same_line(const ParamLine& l1, const ParamLine& l2);

struct DworkParams {
    Quad omega;   // a primitive cube root of unity
    Tower a;      // with a^5 + b^5 = 27
    Tower b;
    // Checks 1 + omega + omega^2 = 0 and a^5 + b^5 = 27.
    bool valid() const;
    Tower z_fifth_root() const { return Quad(rat(1, 6)) * (a * b); }
};

// Parameters with b = 0, a the tower generator (a^5 = 27); root selects
// omega (false) or omega^2 (true). Nontrivial numeric (a, b) pairs do not
// exist inside this tower (rational points on c1^5 + c2^5 = 1 are trivial),
// so the generic containment check keeps b symbolic instead; see
// verify_on_dwork_generic.
DworkParams degenerate_params(bool use_omega_sq = false);

// The line cut out by
//   x1 + omega x2 + omega^2 x3 = 0,
//   x4 = (a/3)(x1 + x2 + x3),
//   x5 = (b/3)(x1 + x2 + x3),
// spanned by its x1 = s, x2 = t parametrization.
ParamLine build_van_geemen_line(const DworkParams& params);

// Substitutes s p + t q into prod x_j - (z^{1/5}/5) sum x_j^5 with
// z^{1/5} = a b/6 and checks all six coefficients of the degree-5 binary
// form vanish exactly.
bool verify_on_dwork(const ParamLine& line, const DworkParams& params);

// Same check with b left symbolic: works in Q(omega)[a,b]/(a^5 + b^5 - 27)
// by treating the line coefficients as bivariate polynomials and reducing
// modulo the relation. Verifies the containment for every complex (a, b)
// with a^5 + b^5 = 27 at once.
bool verify_on_dwork_generic(const Quad& omega);

struct OrbitSizes {
    int g5_orbit = 0;      // under (Z/5)^3
    int s5_orbit = 0;      // under coordinate permutations
    int s5_stabilizer = 0; // order of the S_5 stabilizer
    long lower_bound = 0;  // g5_orbit * s5_orbit
    long virtual_count = 2875;
};

// Orbit of the line under (Z/5)^3 (coordinate scaling by fifth roots of
// unity with exponent sum 0 mod 5, modulo the diagonal) and under S_5.
// Fifth roots of unity are not in the tower field; scaled lines are
// tracked as (Plucker support pattern, exponent offsets), which separates
// orbits exactly. Breadth-first closure under generators.
OrbitSizes orbit_sizes(const ParamLine& line);

// For the b = 0 line inside {x5 = 0} = P^3: intersection points with the
// four coordinate hyperplanes x_i = 0 (i = 1..4 indexing x1..x4).
// Throws if the line lies inside a coordinate hyperplane.
std::vector<std::pair<int, ProjPoint>> boundary_intersections(const ParamLine& line);

// Checks that the three specialized affine forms
//   -(a/3)(1-omega)   u2 - (a/3)(1-omega^2) u3 + 1 = 0
//   -(a/3)(1-omega)   u1 - (a/3)(1-omega^2) u2 + 1 = 0
//   -(a/3)(1-omega^2) u1 - (a/3)(1-omega)   u3 + 1 = 0
// (omega and omega^2 swapped for the other root) cut out the same very
// affine line (u_i = x_i/x4) as the projective b = 0 van Geemen line.
bool verify_limit_equations(const DworkParams& params);

}  // namespace dwork
}  // namespace vgc
