#pragma once

// Rota-Baxter, weighted Reynolds, and twisted O-operators (generalized
// Reynolds operators): verification, descendent structures, the graph
// characterization, the induced Hom-Lie-Yamaguti structure on the carrier,
// the induced representation, and exhaustive finite-field search.

#include <cstdint>

#include "hly/cohomology.hpp"

namespace hly {

// A twisted O-operator lives against a context: the algebra, a
// representation, and a (2,3)-cocycle pair.
struct TwistedContext {
    HLYAlgebra H;
    HLYRep R;
    CocyclePair pair;
};

// H, rep and pair each re-verified; failures are prefixed with the component
// that produced them.
IdentityReport verify_twisted_context(const TwistedContext& c, int cap = 32);

// T o beta = alpha o T plus the two bracket equations
//   [Tu,Tv]    = T( rho(Tu)v - rho(Tv)u + F(Tu,Tv) )
//   <Tu,Tv,Tw> = T( D(Tu,Tv)w + theta(Tv,Tw)u - theta(Tu,Tw)v + G(Tu,Tv,Tw) )
// reported as top_twist / top_binary / top_ternary.
IdentityReport verify_twisted_op(const Matrix& T, const TwistedContext& c, int cap = 32);

// Weight-zero Rota-Baxter: rb_twist, rb_binary, rb_ternary.
IdentityReport verify_rota_baxter(const Matrix& R, const HLYAlgebra& H, int cap = 32);

// (lambda,mu)-weighted Reynolds operator:
//   [Rx,Ry]    = R( [Rx,y] + [x,Ry] + lambda [Rx,Ry] )
//   <Rx,Ry,Rz> = R( <Rx,Ry,z> + <Rx,y,Rz> + <x,Ry,Rz> + mu <Rx,Ry,Rz> )
IdentityReport verify_weighted_reynolds(const Matrix& R, const Scalar& lambda, const Scalar& mu,
                                        const HLYAlgebra& H, int cap = 32);

// Binary-only variant on a Hom-Lie algebra.
IdentityReport verify_weighted_reynolds_hom_lie(const Matrix& R, const Scalar& lambda,
                                                const HomLieAlgebra& L, int cap = 32);

// Descendent brackets [x,y]_R, <x,y,z>_R of a verified weighted Reynolds
// operator; the output is re-verified and R is checked to be a morphism onto
// the original brackets (R[x,y]_R = [Rx,Ry] and likewise ternary).
HLYAlgebra reynolds_descendent(const Matrix& R, const Scalar& lambda, const Scalar& mu,
                               const HLYAlgebra& H);

// A lambda-weighted Reynolds operator on a multiplicative Hom-Lie algebra is
// a (lambda, 2 lambda)-weighted one on the induced Hom-Lie-Yamaguti algebra.
IdentityReport check_lambda_two_lambda(const Matrix& R, const Scalar& lambda,
                                       const HomLieAlgebra& L);

// F-twisted operator on a Hom-Lie algebra: T o beta = alpha o T and
// [Tu,Tv] = T( rho(Tu)v - rho(Tv)u + F(Tu,Tv) ).
IdentityReport verify_twisted_op_hom_lie(const Matrix& T, const HomLieAlgebra& L, const HomLieRep& R,
                                         const Tensor& F, int cap = 32);

struct TwistedOperator {
    Matrix T;
    TwistedContext ctx;
};

// Lift an F-twisted operator on a Hom-Lie algebra to the induced
// Hom-Lie-Yamaguti algebra, with theta_rho coefficients and G built from F.
TwistedOperator induced_twisted_from_hom_lie(const Matrix& T, const HomLieAlgebra& L,
                                             const HomLieRep& R, const Tensor& F);

struct GraphCheck {
    bool ok = false;
    std::string which;        // which closure failed: twist / binary / ternary
    std::vector<int> where;   // graph basis tuple
    Vec escape;               // component orthogonal to the graph
};

// Gr(T) = {(Tu, u)} inside the twisted semidirect product: closed under the
// product twist and both brackets iff T is a twisted O-operator.
GraphCheck graph_is_subalgebra(const Matrix& T, const TwistedContext& c);

// Carrier structure of a twisted O-operator:
//   [u,v]_T    = rho(Tu)v - rho(Tv)u + F(Tu,Tv)
//   <u,v,w>_T  = D(Tu,Tv)w + theta(Tv,Tw)u - theta(Tu,Tw)v + G(Tu,Tv,Tw)
// (V, [,]_T, <,,>_T, beta); T becomes a morphism onto the original algebra.
HLYAlgebra v_structure(const Matrix& T, const TwistedContext& c);

// Representation of the carrier structure back on A:
//   rho_T(u) x    = [Tu, x] + T( rho(x)u + F(x, Tu) )
//   theta_T(u,v)x = <x, Tu, Tv> - T( D(x,Tu)v - theta(x,Tv)u + G(x,Tu,Tv) )
// carrier twist alpha.
HLYRep induced_rep_from_top(const Matrix& T, const TwistedContext& c);

// Morphism of twisted O-operators (phi, psi): representation-morphism
// conditions plus the intertwining line.  The intertwining is often quoted
// as T psi = phi T'; the type-consistent form for (phi,psi): T -> T' is
// phi o T = T' o psi, which is the default, with the quoted form behind
// literal_intertwine.  (Deformation equivalence uses the quoted
// orientation; see verify_equivalence.)
IdentityReport verify_top_morphism(const RepMorphism& m, const Matrix& T, const TwistedContext& cT,
                                   const Matrix& Tp, const TwistedContext& cTp,
                                   bool literal_intertwine = false, int cap = 32);

// Exhaustive enumeration of all T : V -> A over GF(p) passing
// verify_twisted_op, in row-major digit-counter order.  The commutation
// T o beta = alpha o T is solved first as a linear pre-filter.
std::vector<Matrix> search_twisted_ops(const TwistedContext& c, std::uint64_t budget = 1u << 20);

// row-major digit encoding used by the search
Matrix decode_matrix(std::uint64_t code, int rows, int cols, Field f);
std::uint64_t encode_matrix(const Matrix& m);

// (F,G) = (lambda [.,.], mu <.,.,.>) over the adjoint representation wraps a
// weighted Reynolds operator as a twisted O-operator.  Whether the pair is a
// (2,3)-cocycle for the given algebra is reported, not assumed.
struct ReynoldsWrap {
    TwistedContext ctx;
    IdentityReport cocycle_status;
};
ReynoldsWrap reynolds_as_twisted_context(const Scalar& lambda, const Scalar& mu, const HLYAlgebra& H);

// The twisted complex of T: the Yamaguti complex of the carrier structure
// (V, [,]_T, <,,>_T, beta) with coefficients in (A, rho_T, theta_T, alpha).
// All cochain/coboundary machinery applies to (v_alg, a_coeffs) directly.
struct TwistedComplex {
    HLYAlgebra v_alg;
    HLYRep a_coeffs;
};
TwistedComplex twisted_complex(const Matrix& T, const TwistedContext& c);

// 1-cochain from a pair chi = (x1, x2) in A x A:
//   u  |->  T( D(chi)u + G(x1, x2, Tu) ) - <x1, x2, Tu>
Tensor partial_t(const Vec& x1, const Vec& x2, const Matrix& T, const TwistedContext& c);

// Direct transcription of the closed form the first twisted coboundary is
// usually quoted in (level-1 pair (F,G) of maps V^2 -> A, V^3 -> A), kept
// for comparison behind the strict switch.  Two terms required a typing
// repair to be evaluable at all; see the comments in the implementation.
// Not used by any default path.
std::pair<Tensor, Tensor> twisted_coboundary_literal_level1(const Tensor& Fc, const Tensor& Gc,
                                                            const Matrix& T,
                                                            const TwistedContext& c);

}  // namespace hly
