#pragma once

// NS-Hom-Lie and NS-Hom-Lie-Yamaguti algebras: a splitting of the bracket(s)
// into products (circ, vee) and (curly, square) whose derived brackets
// recover a Hom-Lie(-Yamaguti) structure.  This is the underlying structure
// of twisted O-operators: pulling the context data back along T yields the
// four products, and every defining identity is the pullback of a
// representation axiom or a cocycle condition.

#include "hly/operators.hpp"

namespace hly {

struct NSHomLie {
    int dim = 0;
    Matrix alpha;
    Tensor circ;   // arity 2
    Tensor vee;    // arity 2, skew
};

struct NSHLY {
    int dim = 0;
    Matrix alpha;
    Tensor circ;     // arity 2
    Tensor vee;      // arity 2, skew
    Tensor curly;    // arity 3, {.,.,.}
    Tensor square;   // arity 3, [.,.,.], skew in the first two slots
};

struct NSDerived {
    Tensor star;   // [x,y]* = x o y - y o x + x v y
    Tensor hat;    // {x,y,z}^ = {z,y,x} - {z,x,y} + a(x)o(yoz) - a(y)o(xoz) - [x,y]* o a(z)
    Tensor sub;    // <x,y,z> = {x,y,z}^ + {x,y,z} - {y,x,z} + [x,y,z]
};

NSDerived derived_brackets(const NSHLY& N);

// The defining identities circulate with a few index irregularities; each
// ambiguous spot sits behind a named switch whose default is the
// self-consistent reading, validated by requiring that the structures
// induced from twisted O-operators verify.  Flipping a switch exposes the
// quoted variant for comparison.
struct NSReadings {
    bool cyclic_first = true;          // identity 1 is a cyclic sum
    bool hat_cyclic_bracket = true;    // identity 3 carries the hat
    int final_twist_power = 1;         // identity 5's trailing twist power (quoted: 2)
    bool inner_slots_5_3_4 = true;     // identity 7's inner triple is (x5,x3,x4)
    bool hat_cocycle3_first = true;    // identity 9's first term carries the hat
    bool standard_hats_cocycle4 = true;// identity 10's hat placement
};

// The full list: ns_vee_skew, ns_square_skew, then the ten identities
// ns_cyclic_mix, ns_cyclic_theta, ns_cyclic_hat, ns_theta_bracket,
// ns_hat_circ, ns_theta_star, ns_hat_curly, ns_theta_ternary, ns_mixed_vee,
// ns_square_ternary (arities 3 through 5), every identity in the list
// treated as normative.
IdentityReport verify_ns_hly(const NSHLY& N, int cap = 32, const NSReadings& readings = {});

// Sub-adjacent Hom-Lie-Yamaguti algebra ([.,.]*, <.,.,.>) together with its
// tautological representation rho(x)y = x o y, theta(x,y)z = {z,x,y}.
std::pair<HLYAlgebra, HLYRep> subadjacent_hly(const NSHLY& N);

// ns_vee_skew, nslie_pre (the Hom-pre-Lie-type identity) and nslie_cyclic
// (the cyclic vee identity).
IdentityReport verify_ns_hom_lie(const NSHomLie& N, int cap = 32);

// [x,y] = x o y - y o x + x v y.
HomLieAlgebra adjacent_hom_lie(const NSHomLie& N);

// u o v = rho(Tu)v, u v v = F(Tu,Tv), {u,v,w} = theta(Tv,Tw)u,
// [u,v,w] = G(Tu,Tv,Tw): the induced NS structure on the carrier.
NSHLY ns_from_twisted_op(const Matrix& T, const TwistedContext& c);

// Weighted Reynolds operators wrapped as twisted operators over the adjoint
// representation with (F,G) = (lambda [.,.], mu <.,.,.>): x o y = [Rx,y],
// x v y = lambda [Rx,Ry], {x,y,z} = <x,Ry,Rz>, [x,y,z] = mu <Rx,Ry,Rz>.
// (The source prints the curly product as <Rx,Ry,z>; the slot assignment
// here is the one forced by the induced-structure theorem.)
NSHLY ns_from_reynolds(const Matrix& R, const Scalar& lambda, const Scalar& mu, const HLYAlgebra& H);

// Hom-Lie case: u o v = rho(Tu)v and u v v = F(Tu,Tv).
NSHomLie ns_lie_from_twisted_op_hom_lie(const Matrix& T, const HomLieAlgebra& L, const HomLieRep& R,
                                        const Tensor& F);

// NS-Hom-Lie to NS-Hom-Lie-Yamaguti: curly(x,y,z) = a(z) o (y o x),
// square(x,y,z) = [x,y]* v a(z) - a(z) o (x v y), circ and vee carried over.
NSHLY ns_hly_from_ns_lie(const NSHomLie& N);

// Whether the sub-adjacent algebra of ns_hly_from_ns_lie(N) coincides with
// the Hom-Lie-Yamaguti algebra induced from the adjacent Hom-Lie algebra.
// Suggested by the derived-bracket remark but not established in the twisted
// setting, so it is computed and reported, never asserted.
bool subadjacent_matches_induced(const NSHomLie& N);

}  // namespace hly
