#include "vgcheck/dilog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vgc {
namespace dilog {

namespace {

constexpr double kPi = std::numbers::pi;

// |B_2n| for n = 1..24; enough for double precision on all of [0, pi],
// where the series terms decay like 4^{-n}.
constexpr double kAbsBernoulli[] = {
    1.0 / 6,
    1.0 / 30,
    1.0 / 42,
    1.0 / 30,
    5.0 / 66,
    691.0 / 2730,
    7.0 / 6,
    3617.0 / 510,
    43867.0 / 798,
    174611.0 / 330,
    854513.0 / 138,
    236364091.0 / 2730,
    8553103.0 / 6,
    23749461029.0 / 870,
    8615841276005.0 / 14322,
    7709321041217.0 / 510,
    2577687858367.0 / 6,
    26315271553053477373.0 / 1919190,
    2929993913841559.0 / 6,
    261082718496449122051.0 / 13530,
    1520097643918070802691.0 / 1806,
    27833269579301024235023.0 / 690,
    596451111593912163277961.0 / 282,
    5609403368997817686249127547.0 / 46410,
};

// Cl2 on [0, pi] via
//   Cl2(t) = t - t log t + sum_{n>=1} |B_2n| t^{2n+1} / ((2n+1) 2n (2n)!).
double clausen2_principal(double t) {
    if (t == 0.0) return 0.0;
    double acc = t - t * std::log(t);
    double t2 = t * t;
    double pow_t = t;          // t^{2n-1}
    double fact = 1.0;         // (2n)!
    for (int n = 1; n <= 24; ++n) {
        fact *= (2.0 * n - 1.0) * (2.0 * n);
        pow_t *= t2;
        double term = kAbsBernoulli[n - 1] * pow_t / ((2.0 * n + 1.0) * 2.0 * n * fact);
        acc += term;
        if (term < 1e-18 * std::abs(acc)) break;
    }
    return acc;
}

}  // namespace

double clausen2(double theta) {
    // Reduce to [0, 2 pi), then to [0, pi] by Cl2(2 pi - t) = -Cl2(t).
    double t = std::fmod(theta, 2.0 * kPi);
    if (t < 0) t += 2.0 * kPi;
    if (t <= kPi) return clausen2_principal(t);
    return -clausen2_principal(2.0 * kPi - t);
}

std::complex<double> li2(std::complex<double> z) {
    double r = std::abs(z);
    if (r > 1.0 + 1e-12) throw std::domain_error("li2 requires |z| <= 1");
    if (r >= 1.0 - 1e-12) {
        // Unit circle: Re Li2(e^{it}) = pi^2/6 - t(2 pi - t)/4 on [0, 2 pi],
        // Im Li2(e^{it}) = Cl2(t).
        double t = std::atan2(z.imag(), z.real());
        if (t < 0) t += 2.0 * kPi;
        double re = kPi * kPi / 6.0 - t * (2.0 * kPi - t) / 4.0;
        return {re, clausen2(t)};
    }
    // Defining series; tail after N terms is bounded by r^{N+1}/((N+1)^2 (1-r)).
    std::complex<double> acc = 0.0, pw = 1.0;
    for (int k = 1; k <= 100000; ++k) {
        pw *= z;
        acc += pw / static_cast<double>(k) / static_cast<double>(k);
        double tail = std::pow(r, k + 1) / ((k + 1.0) * (k + 1.0) * (1.0 - r));
        if (tail < 1e-15) break;
    }
    return acc;
}

VolumeReport volume_report() {
    VolumeReport v;
    v.tetrahedron = clausen2(kPi / 3.0);
    v.chain_link = v.chain_link_multiplier * v.tetrahedron;
    v.cover125 = v.cover_multiplier * v.tetrahedron;
    v.jmw_prediction = v.jmw_multiplier * v.tetrahedron;
    v.cover_vs_prediction_mismatch = (v.cover_multiplier != v.jmw_multiplier);
    return v;
}

double l2chi_via_dilog() { return 2.0 * clausen2(2.0 * kPi / 3.0) / std::sqrt(3.0); }

}  // namespace dilog
}  // namespace vgc
