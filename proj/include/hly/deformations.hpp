#pragma once

// Truncated formal deformations T_t = T_0 + t T_1 + ... + t^N T_N of a
// twisted O-operator: order-by-order verification of the expanded system,
// the infinitesimal cocycle check, equivalences, and same-cohomology-class
// testing.  Power series are always truncated at a finite order.

#include "hly/operators.hpp"

namespace hly {

struct TruncatedDeformation {
    int order = 0;                 // N
    std::vector<Matrix> coeffs;    // T_0 .. T_N, each V -> A
    TwistedContext ctx;
};

TruncatedDeformation make_deformation(std::vector<Matrix> coeffs, TwistedContext ctx);

// For each order s = 0..N: the commutation line T_s o beta = alpha o T_s
// (also written beta T_s = T_s alpha; the same constraint either way) and
// the two convolution equations
//   sum_{i+j=s} [T_i u, T_j v] = sum_{i+j=s} T_i( rho(T_j u)v - rho(T_j v)u )
//                                + sum_{i+j+k=s} T_i F(T_j u, T_k v)
//   sum_{i+j+k=s} <T_i u, T_j v, T_k w>
//       = sum_{i+j+k=s} T_i( D(T_j u, T_k v)w + theta(T_j v, T_k w)u
//                            - theta(T_j u, T_k w)v )
//         + sum_{i+j+k+l=s} T_i G(T_j u, T_k v, T_l w)
// Order 0 reproduces verify_twisted_op.  Failure tuples are prefixed with s.
IdentityReport verify_deformation(const TruncatedDeformation& d, int cap = 32);

struct InfinitesimalCheck {
    bool cocycle = false;
    Tensor residual2;   // first twisted coboundary image of T_1
    Tensor residual3;
};

// T_1, viewed as a 1-cochain of the twisted complex, must be annihilated by
// the first twisted coboundary.
InfinitesimalCheck infinitesimal_is_cocycle(const TruncatedDeformation& d);

struct EquivalencePair {
    Vec chi1, chi2;                    // chi = chi1 ^ chi2 in A ^ A
    std::vector<Matrix> phi_extras;    // optional coefficients for orders >= 2
    std::vector<Matrix> psi_extras;
};

struct EquivalenceMaps {
    std::vector<Matrix> phi;   // orders 0..N
    std::vector<Matrix> psi;
};

// phi_t = Id + t <chi, -> + sum phi_i t^i,
// psi_t = Id + t ( D(chi)(-) + G(chi, T -) ) + sum psi_i t^i, truncated,
// where <chi, z> is the ternary bracket <chi1, chi2, z>.
EquivalenceMaps assemble_equivalence(const EquivalencePair& pair, const TruncatedDeformation& d);

// Morphism conditions order by order through N: twist compatibility of
// phi_t/psi_t, phi_t an algebra morphism, the two action lines, and the
// intertwining convolution sum_{i+j=s} T_i psi_j = sum_{i+j=s} phi_i T'_j
// (the form used by the deformation theory; see verify_top_morphism for the
// type-consistent variant between distinct operators).
IdentityReport verify_equivalence(const TruncatedDeformation& a, const TruncatedDeformation& b,
                                  const EquivalencePair& pair, int cap = 32);

// 1-cochain as a matrix and back.
Matrix cochain_to_matrix(const Tensor& f);
Tensor matrix_to_cochain(const Matrix& m);

// partial_T over a general element of A ^ A given by wedge-basis coordinates
// (pairs (i,j), i < j, ordered lexicographically).
Tensor partial_t_wedge(const Vec& wedge, const Matrix& T, const TwistedContext& c);

struct SameClassResult {
    bool same = false;
    Vec witness;        // wedge-basis coordinates of a chi with dT(chi) = T1' - T1
    Vec residual;       // difference coordinates when no solution exists
};

// Solves dT(chi) = T1' - T1 exactly over A ^ A.  Both inputs must be
// twisted-complex 1-cocycles.
SameClassResult same_class_check(const Matrix& T1, const Matrix& T1p, const Matrix& T,
                                 const TwistedContext& c);

}  // namespace hly
