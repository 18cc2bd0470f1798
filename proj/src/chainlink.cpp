#include "vgcheck/chainlink.hpp"

#include <stdexcept>

namespace vgc {
namespace chainlink {

IntMatrix longitude_matrix() {
    return IntMatrix::from_rows({
        {0, -1, 0, 0, -1},
        {-1, 0, 1, 0, 0},
        {0, 1, 0, -1, 0},
        {0, 0, -1, 0, 1},
        {-1, 0, 0, 1, 0},
    });
}

IntMatrix torus_map() {
    // columns: m_0, m_1, m_2, m_3, m_4 in the basis e1, e2, e3
    return IntMatrix::from_rows({
        {0, 0, 0, -1, 0},
        {0, 1, 0, 1, -1},
        {0, -1, 1, 0, 1},
    });
}

IntMatrix expected_longitude_images() {
    // columns: images of l_0..l_4
    return IntMatrix::from_rows({
        {0, 0, 1, 0, -1},
        {0, 0, 0, -1, 1},
        {0, 1, -1, 0, 0},
    });
}

LongitudeCheck check_longitude_images() {
    IntMatrix got = torus_map() * longitude_matrix().transposed();
    IntMatrix want = expected_longitude_images();
    LongitudeCheck out;
    for (int j = 0; j < 5; ++j)
        for (int i = 0; i < 3; ++i)
            if (got(i, j) != want(i, j)) {
                out.ok = false;
                out.failing.push_back(j);
                break;
            }
    return out;
}

DeckGroup deck_group() {
    DeckGroup out;
    SnfResult s = snf(torus_map());
    out.torus_map_rank = s.rank();
    // The composite Z^5 -> Z^3 -> (Z/5)^3 is surjective iff every invariant
    // factor of the torus map is coprime to 5; each such factor contributes
    // one Z/5 to the image.
    for (const Int& dv : s.divisors())
        if (dv % 5 != 0) out.elementary_divisors.push_back(5);

    // Z^5 / <m_0, 5 m_1, ..., 5 m_4>
    IntMatrix rel(5, 5);
    rel(0, 0) = 1;
    for (int i = 1; i < 5; ++i) rel(i, i) = 5;
    SnfResult q = snf(rel);
    for (const Int& dv : q.divisors())
        if (dv != 1) out.abelianized_quotient_divisors.push_back(dv);
    return out;
}

GluingData GluingData::standard() {
    GluingData g{};
    IntMatrix lon = longitude_matrix();
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            g.meridian[i][j] = (i == j) ? 1 : 0;
            g.longitude[i][j] = lon(i, j);
        }
    return g;
}

bool GluingData::consistent(std::string* why) const {
    IntMatrix lon = longitude_matrix();
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            if (meridian[i][j] != ((i == j) ? 1 : 0)) {
                if (why) *why = "meridian class on torus " + std::to_string(i) +
                                " does not match m_" + std::to_string(i);
                return false;
            }
            if (longitude[i][j] != lon(i, j)) {
                if (why) *why = "longitude class on torus " + std::to_string(i) +
                                " does not match the longitude relations";
                return false;
            }
        }
    }
    return true;
}

int gluing_map_rank(const GluingData& g) {
    // A: Z^10 -> Z^5, columns (meridian_0, longitude_0, ..., meridian_4, longitude_4)
    IntMatrix a(5, 10);
    for (int i = 0; i < 5; ++i)
        for (int r = 0; r < 5; ++r) {
            a(r, 2 * i) = g.meridian[i][r];
            a(r, 2 * i + 1) = g.longitude[i][r];
        }
    return rank(a);
}

int mayer_vietoris_h1_rank(const GluingData& g) {
    std::string why;
    if (!g.consistent(&why)) throw std::invalid_argument("inconsistent gluing data: " + why);

    // alpha: H_1(U T^2) = Z^10 -> H_1(L') + H_1(L') = Z^10, x -> (Ax, -Ax).
    IntMatrix alpha(10, 10);
    for (int i = 0; i < 5; ++i)
        for (int r = 0; r < 5; ++r) {
            alpha(r, 2 * i) = g.meridian[i][r];
            alpha(r, 2 * i + 1) = g.longitude[i][r];
            alpha(5 + r, 2 * i) = -g.meridian[i][r];
            alpha(5 + r, 2 * i + 1) = -g.longitude[i][r];
        }
    SnfResult s = snf(alpha);
    int coker_free_rank = 10 - s.rank();
    // coker(alpha) must be torsion-free for H_1(X) to be free; with the
    // meridian columns spanning Z^5 every invariant factor is 1.
    for (const Int& dv : s.divisors())
        if (dv != 1)
            throw std::invalid_argument("gluing data yields torsion in the H_1 cokernel");

    // ~H_0(U_5 T^2) = Z^4 maps to ~H_0(L' u L') = Z; every torus meets both
    // sides, so reduced component differences all die: kernel rank 4.
    const int tori = 5, sides = 2;
    IntMatrix h0(sides - 1, tori - 1);  // reduced map; identically zero here
    int h0_kernel_rank = (tori - 1) - rank(h0);

    return coker_free_rank + h0_kernel_rank;
}

}  // namespace chainlink
}  // namespace vgc
