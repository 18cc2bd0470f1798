#pragma once

#include <map>

#include "vgcheck/quad.hpp"

namespace vgc {
namespace bps {

// The nontrivial Dirichlet character of order 3 (conductor 3), defined by
// chi(k) = (omega^k - omega^{2k}) / sqrt(-3). The defining formula evaluates
// to -1 at k = 2 mod 3; some case-table renderings of it list "2" instead,
// which we record as an erratum in the report layer (the formula wins).
int chi(long k);

// Same value computed from the defining formula in exact Q(omega) arithmetic;
// used to pin down the case table.
Quad chi_by_formula(long k);

// BPS-style table: degree -> coefficient of sqrt(-3) would be the usual
// presentation, but we keep whole Quad values so nothing is assumed about
// the shape of the inputs.
using Table = std::map<long, Quad>;

// Multiple-cover resummation: nTilde_D = sum_{k | D} chi(k)/k^2 * n_{D/k},
// for all D <= order.
Table expand(const Table& n, long order);

// Triangular inversion of expand:
// n_D = nTilde_D - sum_{k | D, k > 1} chi(k)/k^2 * n_{D/k}.
Table invert(const Table& n_tilde, long order);

// True iff x = sqrt(-3) * r with r rational and denominator a power of 3,
// i.e. x lies in sqrt(-3) * Z[1/3].
bool ring_member(const Quad& x);

// The four tabulated open Gromov-Witten values nTilde_1..nTilde_4
// (coefficients of sqrt(-3)): 280000, 22296200000/3, 10031895589000000/27,
// 660275805871745000000/27.
Table tabulated_n_tilde();

// Partial sums of L(2;chi) = sum chi(k)/k^2 with a proven tail bound
// <= tolerance. Terms are grouped in blocks of 3, each block contributing
// (6m+3)/((3m+1)^2 (3m+2)^2) > 0, so the tail past block M is at most
// 1/(2(3M+1)^2) + 3/(3M+1)^3.
double dirichlet_l2(double tolerance);

}  // namespace bps
}  // namespace vgc
