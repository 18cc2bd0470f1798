#pragma once

#include <array>
#include <string>
#include <vector>

#include "vgcheck/quad.hpp"
#include "vgcheck/series.hpp"

namespace vgc {
namespace vshs {

using Series = TruncSeries<Quad>;
using Section = std::array<Series, 4>;  // components in the basis e3, e2, e1, e0

// 4x4 connection matrix over truncated series in the basis (e3, e2, e1, e0).
// Both model shapes have the single nontrivial entry in the same slot:
// (2,1) = 1, (3,2) = -coupling, (4,3) = -1 (1-indexed), i.e. the quantum
// side with coupling = Phi'' and the Gauss-Manin side with the Yukawa
// coupling; the code path is identical.
struct ConnectionMatrix {
    std::array<std::array<Series, 4>, 4> m;

    static ConnectionMatrix standard_shape(const Series& coupling);
};

// Filtration levels: e_i lies in F^{>= i - 3/2}; stored as doubled integers
// so e3 -> 3, e2 -> 1, e1 -> -1, e0 -> -3.
inline constexpr std::array<int, 4> kDoubledLevel = {3, 1, -1, -3};

// (nabla_theta v)_i = theta(v_i) + sum_j m_ij v_j.
Section apply_connection(const ConnectionMatrix& m, const Section& v);

// The candidate section nuTilde = theta(Psi) e1 + Psi e0.
struct NormalFunctionCandidate {
    Series psi;
    Section nu_tilde;

    static NormalFunctionCandidate from_potential(const Series& psi);
};

// True iff nabla nuTilde = theta^2(Psi) e1 termwise: the e3, e2, e0
// components vanish identically, which is the horizontality condition
// nabla nuTilde in F^{>= k - 1}.
bool horizontality_check(const ConnectionMatrix& m, const NormalFunctionCandidate& nf);

// The series sum_d nTilde_d Q^d with the tabulated values, truncated at
// the given order (values available through degree 4; higher coefficients
// of the table are zero).
Series tabulated_potential(int order);

// Rank-5 extension K + V with connection theta + nabla and filtration
//   F^{>= i}(K + V) = (0 + F^{>= i} V) + K (1, nuTilde)  for i <= k,
// checked for Griffiths transversality on the spanning sections.
// k is a doubled half-integer level (k = 1 encodes 1/2).
struct ExtensionSpec {
    ConnectionMatrix base;
    NormalFunctionCandidate nf;
    int doubled_k = 1;
    bool transversality_ok = false;
};
// Throws std::invalid_argument naming the offending section on failure.
ExtensionSpec build_extension(const ConnectionMatrix& base, const NormalFunctionCandidate& nf,
                              int doubled_k = 1);

// Residue data of the connection: the constant-term 4x4 matrix N.
struct ResidueReport {
    bool strictly_lower_triangular = false;
    bool fourth_power_zero = false;
    bool eigenvalues_all_zero = false;  // certified via N strictly triangular
    std::array<int, 4> kernel_flag_dims{};  // dims of ker N^1 .. ker N^4
    bool ok() const {
        return strictly_lower_triangular && fourth_power_zero && eigenvalues_all_zero;
    }
};
ResidueReport residue_checks(const ConnectionMatrix& m);

// W1 = theta(W0); assembles the Gauss-Manin-side section symmetrically.
Series w1_from_w0(const Series& w0);

}  // namespace vshs
}  // namespace vgc
