#include "vgcheck/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace vgc {

namespace {

void swap_rows(IntMatrix& m, int i, int j) {
    if (i == j) return;
    for (int k = 0; k < m.cols; ++k) std::swap(m(i, k), m(j, k));
}
void swap_cols(IntMatrix& m, int i, int j) {
    if (i == j) return;
    for (int k = 0; k < m.rows; ++k) std::swap(m(k, i), m(k, j));
}
// row i -= q * row j
void sub_row(IntMatrix& m, int i, int j, const Int& q) {
    if (q == 0) return;
    for (int k = 0; k < m.cols; ++k) m(i, k) -= q * m(j, k);
}
void sub_col(IntMatrix& m, int i, int j, const Int& q) {
    if (q == 0) return;
    for (int k = 0; k < m.rows; ++k) m(k, i) -= q * m(k, j);
}
void negate_row(IntMatrix& m, int i) {
    for (int k = 0; k < m.cols; ++k) m(i, k) = -m(i, k);
}

// Quotient rounded to nearest, so the remainder a - q b has |r| <= |b|/2.
// Keeps the transformation matrices from blowing up.
Int nearest_quotient(const Int& a, const Int& b) {
    Int q = a / b;  // truncated
    Int r = a - q * b;
    if (2 * abs(r) > abs(b)) q += (r > 0) == (b > 0) ? 1 : -1;
    return q;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
    SnfResult res{IntMatrix::identity(m.rows), m, IntMatrix::identity(m.cols)};
    IntMatrix& d = res.d;
    const int n = std::min(m.rows, m.cols);

    for (int t = 0; t < n; ++t) {
        for (;;) {
            // Move the smallest nonzero entry of the trailing block to (t, t);
            // re-selecting every pass keeps the multipliers small.
            int pi = -1, pj = -1;
            for (int i = t; i < d.rows; ++i)
                for (int j = t; j < d.cols; ++j) {
                    if (d(i, j) == 0) continue;
                    if (pi < 0 || abs(d(i, j)) < abs(d(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                t = n;  // trailing block is zero: done
                break;
            }
            swap_rows(d, t, pi);
            swap_rows(res.u, t, pi);
            swap_cols(d, t, pj);
            swap_cols(res.v, t, pj);

            bool dirty = false;
            for (int i = t + 1; i < d.rows; ++i) {
                if (d(i, t) == 0) continue;
                Int q = nearest_quotient(d(i, t), d(t, t));
                sub_row(d, i, t, q);
                sub_row(res.u, i, t, q);
                if (d(i, t) != 0) dirty = true;  // remainder: smaller pivot next pass
            }
            for (int j = t + 1; j < d.cols; ++j) {
                if (d(t, j) == 0) continue;
                Int q = nearest_quotient(d(t, j), d(t, t));
                sub_col(d, j, t, q);
                sub_col(res.v, j, t, q);
                if (d(t, j) != 0) dirty = true;
            }
            if (dirty) continue;
            // Row and column are clean; fold in any trailing entry the pivot
            // does not divide, which strictly shrinks the pivot next pass.
            for (int i = t + 1; i < d.rows && !dirty; ++i)
                for (int j = t + 1; j < d.cols && !dirty; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        sub_row(d, t, i, Int(-1));  // row t += row i
                        sub_row(res.u, t, i, Int(-1));
                        dirty = true;
                    }
            if (!dirty) break;
        }
        if (t >= n) break;
        if (d(t, t) < 0) {
            negate_row(d, t);
            negate_row(res.u, t);
        }
    }
    return res;
}

int rank(const IntMatrix& m) { return snf(m).rank(); }

}  // namespace vgc
