#pragma once

// Yamaguti cochain spaces and coboundaries for a Hom-Lie-Yamaguti algebra
// with coefficients in a representation.
//
// C^n(A,V) is the space of n-linear maps f with
//   f(a x_1, ..., a x_n) = b f(x_1, ..., x_n)          (twist equivariance)
//   f(..., x, x, ...) = 0 in the slot pairs (1,2), (3,4), ...
// An n-cochain at level n >= 1 is a pair in C^{2n} x C^{2n+1}; level 0 is
// Hom(A,V).  The pairwise-skew constraint is handled structurally (canonical
// index tuples), only the equivariance constraint goes through elimination.
//
// Cochains are stored as dense Tensors over the full multilinear space;
// membership is checked, never assumed.

#include "hly/representations.hpp"

namespace hly {

struct CochainSpace {
    int n = 0;                                // arity
    int dim = 0;                              // dim C^n(A,V)
    std::vector<std::vector<int>> canonical;  // skew-canonical index tuples
    Matrix constraints;                       // equivariance, in skew-reduced coordinates
    std::vector<Tensor> basis;
};

// Basis of C^n(A,V); n runs up to the cap (default 5).
CochainSpace cochain_basis(int n, const HLYAlgebra& H, const HLYRep& R, int n_cap = 5);

// Equivariance + pairwise-skew membership of one multilinear map.
IdentityReport verify_cochain_membership(const Tensor& f, const HLYAlgebra& H, const HLYRep& R,
                                         int cap = 32);

// Degree-1 coboundary of f : A -> V, with no twists inside
// rho, D, theta):
//   (d_I f)(x,y)    = rho(x) f(y) - rho(y) f(x) - f([x,y])
//   (d_II f)(x,y,z) = D(x,y) f(z) + theta(y,z) f(x) - theta(x,z) f(y) - f(<x,y,z>)
std::pair<Tensor, Tensor> coboundary_deg1(const Tensor& f, const HLYAlgebra& H, const HLYRep& R);

// General coboundary at level n >= 1: (F,G) in C^{2n} x C^{2n+1} maps to
// C^{2n+2} x C^{2n+3}.  Both defining sums are implemented term by term,
// including the alpha^{2n}, alpha^{2n-1}, alpha^2 powers, the hat omissions
// and the (-1)^{n+k} sign conventions.
std::pair<Tensor, Tensor> coboundary(int n, const Tensor& F, const Tensor& G, const HLYAlgebra& H,
                                     const HLYRep& R);

// Chevalley-Eilenberg style 2-cocycle on a Hom-Lie algebra:
//   cyc ( rho(a x) F(y,z) + F(a x, [y,z]) ) = 0
// together with skew-symmetry and twist equivariance of F.
IdentityReport verify_2cocycle_hom_lie(const Tensor& F, const HomLieAlgebra& L, const HomLieRep& R,
                                       int cap = 32);

struct CocyclePair {
    Tensor F;   // arity 2, A -> V
    Tensor G;   // arity 3, A -> V
};

// Membership-checked constructor.
CocyclePair make_cocycle_pair(Tensor F, Tensor G, const HLYAlgebra& H, const HLYRep& R);

// The four (2,3)-cocycle conditions, reported per condition as cocycle1..4
// (arities 3, 4, 4, 5), after membership of F and G.
IdentityReport verify_23cocycle(const CocyclePair& p, const HLYAlgebra& H, const HLYRep& R,
                                int cap = 32);

// G(x,y,z) = F([x,y], a z) - rho(a z) F(x,y); with a verified Hom-Lie
// 2-cocycle F this completes F to a (2,3)-cocycle of the induced
// Hom-Lie-Yamaguti algebra with coefficients in (V, rho, theta_rho, beta).
Tensor g_from_f(const Tensor& F, const HomLieAlgebra& L, const HomLieRep& R);

struct CohomologyDims {
    int level = 0;
    int dim_c = 0;
    int dim_z = 0;
    int dim_b = 0;
    int dim_h = 0;
};

// Exact dimensions at a level: level 0 is C^1 (nothing maps in, so B = 0);
// level n >= 1 is C^{2n} x C^{2n+1} with B the image of the level below.
CohomologyDims cohomology_dims(int level, const HLYAlgebra& H, const HLYRep& R, int n_cap = 5);

struct DeltaSquaredResult {
    bool zero = false;
    int source_dim = 0;
    int target_dim = 0;
    std::vector<Failure> nonzero;   // witness coordinates if the product is not zero
    bool product_stored = false;
    Matrix product;                 // materialized when small enough
};

// Product of two consecutive coboundary matrices.  start_level 0 composes
// out of C^1; start_level s >= 1 composes out of C^{2s} x C^{2s+1}.  The
// zero flag is reported, not asserted: whether the composite vanishes at the
// bottom of the complex is checked per instance.
DeltaSquaredResult delta_squared_check(const HLYAlgebra& H, const HLYRep& R, int start_level,
                                       int n_cap = 7);

// Checked twisted semidirect product: refuses a pair that fails any of the
// four cocycle conditions.
HLYAlgebra twisted_semidirect(const HLYAlgebra& H, const HLYRep& R, const CocyclePair& p,
                              int dim_cap = 12);

// Flatten a tensor's entries as one coordinate vector (used for assembling
// coboundary matrices).
Vec tensor_coords(const Tensor& t);

}  // namespace hly
