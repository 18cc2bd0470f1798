#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "vgcheck/dwork.hpp"
#include "vgcheck/rational.hpp"

namespace vgc {
namespace tropical {

using Vec3 = std::array<Rat, 3>;
using IVec3 = std::array<Int, 3>;

// Weighted tropical curve in R^3 (rational vertices, primitive integer
// edge directions). Bounded edges join two vertices; legs are rays.
struct Edge {
    int from = -1;                 // vertex index
    std::optional<int> to;         // vertex index, or empty for a ray
    IVec3 direction{};             // primitive; for bounded edges, the
                                   // primitive vector of (to - from)
    long weight = 1;
};

struct TropCurve {
    std::vector<Vec3> vertices;
    std::vector<Edge> edges;
};

// Balancing: at every vertex the weighted outgoing directions sum to zero.
// Bounded edges count at both endpoints, with the direction negated at the
// far end. Also validates primitivity and the bounded-edge direction
// invariant; returns false on any violation.
bool check_balancing(const TropCurve& c);

IVec3 primitive(const IVec3& v);

// The 4-valent genus-0 curve with one vertex at the origin and rays
// e1, e2, e3, -(1,1,1), all weight 1.
TropCurve make_V();

// The trivalent smoothing V(i; eps), i in {1,2,3}: two vertices joined by a
// bounded edge of lattice length eps. For i = 1 the vertices are
// (0, eps/2, eps/2) and (0, -eps/2, -eps/2); i = 2, 3 are cyclic
// permutations. Throws unless eps > 0.
TropCurve make_V_smoothed(int i, const Rat& eps);

// Tropicalization type of a b = 0 van Geemen limit line from its toric
// boundary data: the puncture on {x_i = 0} (i = 1,2,3) contributes -e_i and
// the puncture on the homogenizing hyperplane {x4 = 0} contributes (1,1,1).
// Throws unless the intersection data lists four distinct transversal
// points, one per hyperplane.
std::vector<IVec3> tropicalization_type(
    const std::vector<std::pair<int, dwork::ProjPoint>>& boundary);

// True iff the two direction multisets agree up to one global sign.
bool same_directions_up_to_global_sign(std::vector<IVec3> a, std::vector<IVec3> b);

// A point of (C*)^3 in polar form: exact positive rational moduli and
// arguments that are rational multiples of 2*pi (stored mod 1).
struct ConormalPoint {
    std::array<Rat, 3> modulus;
    std::array<Rat, 3> turns;  // argument / (2 pi), reduced mod 1

    ConormalPoint(std::array<Rat, 3> mod, std::array<Rat, 3> arg);
};

// Membership in the periodized conormal of leg 1..4 of V. For legs 1..3 the
// conditions are |u_j| = |u_k| ({j,k} the other two coordinates) and
// u_leg in [1, oo); for leg 4 they are |u_1| = |u_2| = |u_3| and
// u_1 u_2 u_3 in (0, 1]. With cover = true the relevant argument is only
// required to be a multiple of 2 pi/5, matching the 5-fold lift.
bool conormal_member(const ConormalPoint& p, int leg, bool cover);

// JSON schema {vertices:[[x,y,z]...], edges:[{from,to|rayDir,weight}...]};
// coordinates are rational strings ("1/2") or integers.
std::string curve_to_json(const TropCurve& c);
TropCurve curve_from_json(const std::string& text);

}  // namespace tropical
}  // namespace vgc
