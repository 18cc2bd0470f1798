#pragma once

#include <array>
#include <ostream>
#include <stdexcept>

#include "vgcheck/quad.hpp"

namespace vgc {

// An element of Q(omega)[a]/(a^5 - 27), stored as c0 + c1 a + ... + c4 a^4
// with Quad coefficients. The polynomial a^5 - 27 is irreducible over
// Q(omega) (27 is not a fifth power there), so this is a field. Products
// are reduced eagerly via a^5 = 27.
struct Tower {
    std::array<Quad, 5> c{};

    Tower() = default;
    explicit Tower(Quad c0) { c[0] = std::move(c0); }
    explicit Tower(const Rat& r) { c[0] = Quad(r); }
    explicit Tower(std::array<Quad, 5> coeffs) : c(std::move(coeffs)) {}

    static Tower zero() { return Tower(); }
    static Tower one() { return Tower(Quad::one()); }
    static Tower omega() { return Tower(Quad::omega()); }
    static Tower omega_sq() { return Tower(Quad::omega_sq()); }
    // The generator a, with a^5 = 27; its inverse is a^4/27.
    static Tower gen_a() {
        Tower t;
        t.c[1] = Quad::one();
        return t;
    }

    bool is_zero() const {
        for (const auto& q : c)
            if (!q.is_zero()) return false;
        return true;
    }
    bool is_scalar() const {
        for (int i = 1; i < 5; ++i)
            if (!c[i].is_zero()) return false;
        return true;
    }

    friend Tower operator+(const Tower& a, const Tower& b) {
        Tower r;
        for (int i = 0; i < 5; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend Tower operator-(const Tower& a, const Tower& b) {
        Tower r;
        for (int i = 0; i < 5; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend Tower operator-(const Tower& a) {
        Tower r;
        for (int i = 0; i < 5; ++i) r.c[i] = -a.c[i];
        return r;
    }
    friend Tower operator*(const Tower& a, const Tower& b) {
        std::array<Quad, 9> full{};
        for (int i = 0; i < 5; ++i) {
            if (a.c[i].is_zero()) continue;
            for (int j = 0; j < 5; ++j) full[i + j] += a.c[i] * b.c[j];
        }
        Tower r;
        Quad twenty_seven(Rat(27));
        for (int k = 0; k < 5; ++k) r.c[k] = full[k];
        for (int k = 5; k < 9; ++k) r.c[k - 5] += twenty_seven * full[k];
        return r;
    }
    friend Tower operator*(const Quad& s, const Tower& a) {
        Tower r;
        for (int i = 0; i < 5; ++i) r.c[i] = s * a.c[i];
        return r;
    }

    Tower& operator+=(const Tower& o) { return *this = *this + o; }
    Tower& operator-=(const Tower& o) { return *this = *this - o; }
    Tower& operator*=(const Tower& o) { return *this = *this * o; }

    friend bool operator==(const Tower& a, const Tower& b) { return a.c == b.c; }
    friend bool operator!=(const Tower& a, const Tower& b) { return !(a == b); }

    // Inverse by solving x*y = 1 as a 5x5 linear system over Q(omega).
    Tower inv() const;
    friend Tower operator/(const Tower& a, const Tower& b) { return a * b.inv(); }
};

inline Tower Tower::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero in tower field");
    // Column j of the multiplication matrix is (*this) * a^j.
    std::array<std::array<Quad, 5>, 5> m{};
    Tower col = *this;
    Tower a = Tower::gen_a();
    for (int j = 0; j < 5; ++j) {
        for (int i = 0; i < 5; ++i) m[i][j] = col.c[i];
        col *= a;
    }
    std::array<Quad, 5> rhs{};
    rhs[0] = Quad::one();
    // Gaussian elimination with exact arithmetic.
    for (int p = 0; p < 5; ++p) {
        int piv = -1;
        for (int i = p; i < 5; ++i)
            if (!m[i][p].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("tower inverse: singular system");
        std::swap(m[p], m[piv]);
        std::swap(rhs[p], rhs[piv]);
        Quad d = m[p][p].inv();
        for (int j = p; j < 5; ++j) m[p][j] *= d;
        rhs[p] *= d;
        for (int i = 0; i < 5; ++i) {
            if (i == p || m[i][p].is_zero()) continue;
            Quad f = m[i][p];
            for (int j = p; j < 5; ++j) m[i][j] -= f * m[p][j];
            rhs[i] -= f * rhs[p];
        }
    }
    Tower r;
    r.c = rhs;
    return r;
}

inline Tower tower_pow(const Tower& base, long e) {
    if (e < 0) return tower_pow(base.inv(), -e);
    Tower r = Tower::one(), b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline std::string to_string(const Tower& t) {
    std::string s;
    for (int i = 0; i < 5; ++i) {
        if (t.c[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + to_string(t.c[i]) + ")";
        if (i == 1) s += "*A";
        if (i > 1) s += "*A^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

inline std::ostream& operator<<(std::ostream& os, const Tower& t) { return os << to_string(t); }

}  // namespace vgc
