#pragma once

#include <array>
#include <string>
#include <vector>

#include "vgcheck/int_matrix.hpp"

namespace vgc {
namespace chainlink {

// Homology data for the minimally-twisted five-component chain link
// complement L'. H_1(L';Z) = Z^5 on the meridian classes m_0..m_4; the
// longitudes are integer combinations of the meridians, and the Lagrangian
// projection to T^3 induces a map on H_1 recorded in torus_map().

// 5x5 matrix whose row i expresses the longitude l_i in the meridian basis:
//   l_0 = -m_1 - m_4,  l_1 = -m_0 + m_2,  l_2 = m_1 - m_3,
//   l_3 = -m_2 + m_4,  l_4 = -m_0 + m_3.
IntMatrix longitude_matrix();

// 3x5 matrix of H_1(L') -> H_1(T^3) on the meridian basis, columns
// m_0 -> 0, m_1 -> e2 - e3, m_2 -> e3, m_3 -> -e1 + e2, m_4 -> -e2 + e3.
IntMatrix torus_map();

// Stated images of the longitudes in H_1(T^3):
//   l_0 -> 0, l_1 -> e3, l_2 -> e1 - e3, l_3 -> -e2, l_4 -> -e1 + e2.
IntMatrix expected_longitude_images();

// Verifies torus_map() * longitude_matrix()^T column-by-column against the
// stated images. Returns the indices of any longitudes that fail.
struct LongitudeCheck {
    bool ok = true;
    std::vector<int> failing;
};
LongitudeCheck check_longitude_images();

// The 125-fold cover is classified by composing H_1(L') -> H_1(T^3) with
// reduction mod 5. Its deck group is the image of that composite.
struct DeckGroup {
    std::vector<Int> elementary_divisors;  // [5,5,5] for the chain link data
    int torus_map_rank = 0;                // rank of torus_map() over Z
    // Abelianized quotient Z^5 / <m_0, 5m_1, ..., 5m_4>, for comparison with
    // the pi_1 quotient; comes out (Z/5)^4, one factor more than the deck
    // group, so nonabelian relations must enlarge the subgroup. Reported,
    // not resolved here.
    std::vector<Int> abelianized_quotient_divisors;
};
DeckGroup deck_group();

// Gluing data for the double: two copies of L' glued along their five
// boundary tori so that meridian and longitude classes match up.
struct GluingData {
    // meridian[i], longitude[i]: H_1 classes on torus i, in the meridian
    // basis of L', used identically for both copies.
    std::array<std::array<Int, 5>, 5> meridian;
    std::array<std::array<Int, 5>, 5> longitude;

    static GluingData standard();
    bool consistent(std::string* why = nullptr) const;
};

// rank H_1(X) for X = L' U_{5 tori} L' via the Mayer-Vietoris segment
//   H_1(U T^2) -> H_1(L') + H_1(L') -> H_1(X) -> ~H_0(U T^2) -> ~H_0(L'uL').
// Returns 9 for the standard gluing. Throws on inconsistent data.
int mayer_vietoris_h1_rank(const GluingData& g);

// rank of the map A: Z^10 -> Z^5 sending (meridian_i, longitude_i) to their
// H_1(L') classes; equals 5 (the meridian columns already span).
int gluing_map_rank(const GluingData& g);

}  // namespace chainlink
}  // namespace vgc
