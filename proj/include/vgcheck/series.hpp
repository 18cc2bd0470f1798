#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace vgc {

// A truncated formal power series sum_{k=0..order} c_k var^k over a field F.
// Integer exponents only; operations on series of different orders truncate
// to the smaller one. theta() is the logarithmic derivative var*d/d(var).
template <class F>
struct TruncSeries {
    std::string var = "Q";
    std::vector<F> c;  // c[k] = coefficient of var^k; size = order + 1

    TruncSeries() : c(1, F{}) {}
    TruncSeries(std::string v, int order) : var(std::move(v)), c(order + 1, F{}) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
    }

    int order() const { return static_cast<int>(c.size()) - 1; }

    static TruncSeries constant(const F& value, std::string v, int order) {
        TruncSeries s(std::move(v), order);
        s.c[0] = value;
        return s;
    }
    static TruncSeries monomial(const F& coeff, int k, std::string v, int order) {
        TruncSeries s(std::move(v), order);
        if (k <= order) s.c[k] = coeff;
        return s;
    }

    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](const F& x) { return x == F{}; });
    }

    TruncSeries truncated(int new_order) const {
        TruncSeries s(var, new_order);
        for (int k = 0; k <= std::min(new_order, order()); ++k) s.c[k] = c[k];
        return s;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        check_var(a, b);
        TruncSeries r(a.var, std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r.c[k] = a.c[k] + b.c[k];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        check_var(a, b);
        TruncSeries r(a.var, std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r.c[k] = a.c[k] - b.c[k];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a) {
        TruncSeries r(a.var, a.order());
        for (int k = 0; k <= r.order(); ++k) r.c[k] = -a.c[k];
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        check_var(a, b);
        TruncSeries r(a.var, std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) {
            if (a.c[i] == F{}) continue;
            for (int j = 0; i + j <= r.order(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        return r;
    }
    friend TruncSeries operator*(const F& s, const TruncSeries& a) {
        TruncSeries r(a.var, a.order());
        for (int k = 0; k <= r.order(); ++k) r.c[k] = s * a.c[k];
        return r;
    }
    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.var == b.var && a.c == b.c;
    }

  private:
    static void check_var(const TruncSeries& a, const TruncSeries& b) {
        if (a.var != b.var) throw std::invalid_argument("series variable mismatch");
    }
};

// theta = var * d/d(var): coefficient c_k goes to k*c_k. Order preserved.
template <class F>
TruncSeries<F> theta(const TruncSeries<F>& s) {
    TruncSeries<F> r(s.var, s.order());
    for (int k = 1; k <= s.order(); ++k) r.c[k] = F(static_cast<long>(k)) * s.c[k];
    return r;
}

}  // namespace vgc
