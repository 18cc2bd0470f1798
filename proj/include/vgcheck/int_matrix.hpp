#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "vgcheck/rational.hpp"

namespace vgc {

// Dense integer matrix with arbitrary-precision entries.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {
        if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
    }
    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows_init) {
        int r = static_cast<int>(rows_init.size());
        int c = r ? static_cast<int>(rows_init.begin()->size()) : 0;
        IntMatrix m(r, c);
        int i = 0;
        for (const auto& row : rows_init) {
            if (static_cast<int>(row.size()) != c)
                throw std::invalid_argument("ragged matrix literal");
            int j = 0;
            for (long v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    Int& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        if (x.cols != y.rows) throw std::invalid_argument("matrix product shape mismatch");
        IntMatrix r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                if (x(i, k) == 0) continue;
                for (int j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
            }
        return r;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : a)
            if (v != 0) return false;
        return true;
    }
};

struct SnfResult {
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix d;  // rows x cols, diagonal, d_i | d_{i+1}, nonnegative
    IntMatrix v;  // cols x cols, unimodular
    std::vector<Int> divisors() const {
        std::vector<Int> out;
        int n = std::min(d.rows, d.cols);
        for (int i = 0; i < n; ++i)
            if (d(i, i) != 0) out.push_back(d(i, i));
        return out;
    }
    int rank() const { return static_cast<int>(divisors().size()); }
};

// Smith normal form: U*M*V = D with U, V unimodular products of elementary
// row/column operations. Standard pivot-and-reduce with a divisibility
// sweep at the end of each pivot step.
SnfResult snf(const IntMatrix& m);

// rank(M) = number of nonzero diagonal entries of its Smith form.
int rank(const IntMatrix& m);

}  // namespace vgc
