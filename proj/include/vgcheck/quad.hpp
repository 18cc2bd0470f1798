#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "vgcheck/rational.hpp"

namespace vgc {

// An element x + y*sqrt(-3) of the imaginary quadratic field Q(sqrt(-3)).
// The same field is Q(omega) for the primitive cube root
// omega = (-1 + sqrt(-3))/2, and both views are supported.
struct Quad {
    Rat x;  // rational part
    Rat y;  // coefficient of sqrt(-3)

    Quad() : x(0), y(0) {}
    explicit Quad(Rat r) : x(std::move(r)), y(0) {}
    Quad(Rat re, Rat im) : x(std::move(re)), y(std::move(im)) {}

    static Quad zero() { return Quad(); }
    static Quad one() { return Quad(Rat(1)); }
    static Quad sqrt_minus3() { return Quad(Rat(0), Rat(1)); }
    // omega = (-1 + sqrt(-3))/2, so 1 + omega + omega^2 = 0 and omega^3 = 1.
    static Quad omega() { return Quad(rat(-1, 2), rat(1, 2)); }
    static Quad omega_sq() { return Quad(rat(-1, 2), rat(-1, 2)); }

    // (c, d) with value c + d*omega.
    static Quad from_omega_view(const Rat& c, const Rat& d) {
        return Quad(c - d / 2, d / 2);
    }
    // Inverse of the above; exact since d = 2y, c = x + y.
    std::pair<Rat, Rat> to_omega_view() const { return {x + y, 2 * y}; }

    bool is_zero() const { return x == 0 && y == 0; }

    Quad conj() const { return Quad(x, -y); }
    // norm(x + y sqrt(-3)) = x^2 + 3 y^2 >= 0, zero iff the element is.
    Rat norm() const { return x * x + 3 * y * y; }

    friend Quad operator+(const Quad& a, const Quad& b) { return {a.x + b.x, a.y + b.y}; }
    friend Quad operator-(const Quad& a, const Quad& b) { return {a.x - b.x, a.y - b.y}; }
    friend Quad operator-(const Quad& a) { return {-a.x, -a.y}; }
    friend Quad operator*(const Quad& a, const Quad& b) {
        // (x1 + y1 s)(x2 + y2 s) with s^2 = -3
        return {a.x * b.x - 3 * a.y * b.y, a.x * b.y + a.y * b.x};
    }
    Quad inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero in Q(sqrt(-3))");
        Rat n = norm();
        return {x / n, -y / n};
    }
    friend Quad operator/(const Quad& a, const Quad& b) { return a * b.inv(); }
    friend bool operator==(const Quad& a, const Quad& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Quad& a, const Quad& b) { return !(a == b); }

    Quad& operator+=(const Quad& o) { return *this = *this + o; }
    Quad& operator-=(const Quad& o) { return *this = *this - o; }
    Quad& operator*=(const Quad& o) { return *this = *this * o; }
};

inline Quad quad_pow(const Quad& base, long e) {
    if (e < 0) return quad_pow(base.inv(), -e);
    Quad r = Quad::one(), b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline std::string to_string(const Quad& q) {
    if (q.y == 0) return to_string(q.x);
    std::string s;
    if (q.x != 0) s = to_string(q.x) + (q.y > 0 ? "+" : "");
    if (q.y == 1)
        s += "r3";
    else if (q.y == -1)
        s += "-r3";
    else
        s += to_string(q.y) + "*r3";
    return s;  // r3 denotes sqrt(-3)
}

inline std::ostream& operator<<(std::ostream& os, const Quad& q) { return os << to_string(q); }

}  // namespace vgc
