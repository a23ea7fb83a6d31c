#pragma once

// Presentations and verifiers for Hom-Lie and Hom-Lie-Yamaguti algebras,
// plus the constructions producing one structure from another.
//
// Verification always iterates over basis tuples only: every identity here
// is multilinear in each slot, so basis tuples suffice.  A presentation
// violating skew-symmetry is invalid input; it is reported, never repaired.

#include "hly/report.hpp"
#include "hly/tensor.hpp"

namespace hly {

struct HomLieAlgebra {
    int dim = 0;
    Matrix alpha;     // dim x dim twist
    Tensor bracket;   // arity 2, in_dim = out_dim = dim
};

struct HLYAlgebra {
    int dim = 0;
    Matrix alpha;
    Tensor binary;    // arity 2
    Tensor ternary;   // arity 3
};

// Hom-Lie axioms: binary_skew, hom_jacobi.
IdentityReport verify_hom_lie(const HomLieAlgebra& L, int cap = 32);

// Twist is an endomorphism of every bracket: multiplicative_binary (and
// multiplicative_ternary for the Yamaguti case).
IdentityReport verify_multiplicative(const HomLieAlgebra& L, int cap = 32);
IdentityReport verify_multiplicative(const HLYAlgebra& H, int cap = 32);

// The six Hom-Lie-Yamaguti identities: binary_skew, ternary_skew, ly1 (cyclic
// binary+ternary, arity 3), ly2 (cyclic ternary over the bracket, arity 4),
// ly3 (mixed, arity 4), hom_nambu (the alpha^2-twisted ternary Leibniz rule,
// arity 5).
IdentityReport verify_hly(const HLYAlgebra& H, int cap = 32);

// Ternary bracket <x,y,z> = [[x,y],alpha(z)] on a multiplicative Hom-Lie
// algebra; the result is a multiplicative Hom-Lie-Yamaguti algebra.
HLYAlgebra induced_hly_from_hom_lie(const HomLieAlgebra& L);

// Twist a (Hom-)Lie-Yamaguti presentation along one of its morphisms phi:
// alpha' = phi o alpha, binary' = phi o binary, ternary' = phi^2 o ternary.
HLYAlgebra yau_twist(const HLYAlgebra& H, const Matrix& phi);

// Projections onto the surviving structure; the discarded tensor must vanish.
HomLieAlgebra as_hom_lie(const HLYAlgebra& H);
HLYAlgebra as_hlts(const HLYAlgebra& H);
HLYAlgebra hly_from_hom_lie_brackets(const HomLieAlgebra& L);   // zero ternary

// phi([x,y]_1) = [phi x, phi y]_2, likewise ternary, plus phi o alpha_1 =
// alpha_2 o phi as a separately named identity ("morphism_twist").
IdentityReport is_hly_morphism(const Matrix& phi, const HLYAlgebra& H1, const HLYAlgebra& H2,
                               int cap = 32);

// --- shared evaluation helpers -------------------------------------------

inline Vec bracket2(const HLYAlgebra& H, const Vec& x, const Vec& y) {
    return tensor_eval(H.binary, {x, y});
}
inline Vec bracket3(const HLYAlgebra& H, const Vec& x, const Vec& y, const Vec& z) {
    return tensor_eval(H.ternary, {x, y, z});
}

}  // namespace hly
