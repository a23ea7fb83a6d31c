#pragma once

// Representations of Hom-Lie and Hom-Lie-Yamaguti algebras, the derived
// bilinear action D, and the (twisted) semidirect products.
//
// rho is stored as a basis-indexed family of carrier matrices, theta as a
// doubly-indexed family.  D is always derived on demand from its defining
// combination of rho and theta, never stored, so it cannot drift.

#include "hly/structures.hpp"

namespace hly {

struct HomLieRep {
    int carrier_dim = 0;
    Matrix beta;                  // carrier twist
    std::vector<Matrix> rho;      // one carrier matrix per algebra basis vector
};

struct HLYRep {
    int carrier_dim = 0;
    Matrix beta;
    std::vector<Matrix> rho;
    std::vector<Matrix> theta;    // index (i * dim + j) for the pair (e_i, e_j)

    int algebra_dim() const { return int(rho.size()); }
    const Matrix& theta_at(int i, int j) const { return theta[size_t(i) * rho.size() + j]; }
};

struct RepMorphism {
    Matrix phi;   // algebra map
    Matrix psi;   // carrier map
};

// Linear / bilinear extension of the stored families.
Matrix rho_of(const std::vector<Matrix>& rho, const Vec& x);
Matrix theta_of(const HLYRep& R, const Vec& x, const Vec& y);

// D(x,y) = theta(y,x) - theta(x,y) + rho(ax)rho(y) - rho(ay)rho(x) - rho([x,y]) o beta,
// returned as the full basis-pair family.
std::vector<Matrix> d_map(const HLYRep& R, const Matrix& alpha, const Tensor& binary);
Matrix bilinear_of(const std::vector<Matrix>& family, int dim, const Vec& x, const Vec& y);

// Both defining lines of a Hom-Lie representation: rep_rho_twist,
// rep_bracket.
IdentityReport verify_hom_lie_rep(const HomLieAlgebra& L, const HomLieRep& R, int cap = 32);

// The Hom-Lie-Yamaguti representation axioms, each as a named
// check on basis tuples (arities 1 through 4): rep_rho_twist,
// rep_theta_twist, rep_d_cyclic, rep_theta_bracket, rep_d_rho, rep_rho_theta,
// rep_d_theta, rep_theta_ternary.
IdentityReport verify_hly_rep(const HLYAlgebra& H, const HLYRep& R, int cap = 32);

// rho(x) = [x,.], theta(x,y) z = <z,x,y>, beta = alpha.
HLYRep adjoint_rep(const HLYAlgebra& H);

// theta_rho(x,y) = rho(alpha(y)) rho(x); together with rho this equips the
// carrier of a Hom-Lie representation with an action of the induced
// Hom-Lie-Yamaguti algebra.
std::vector<Matrix> theta_from_rho(const HomLieRep& R, const Matrix& alpha);
HLYRep hly_rep_from_hom_lie_rep(const HomLieRep& R, const Matrix& alpha);

// Semidirect product A (x) V with
//   [x+u, y+v]        = [x,y] + rho(x)v - rho(y)u
//   <x+u, y+v, z+w>   = <x,y,z> + D(x,y)w - theta(x,z)v + theta(y,z)u
// and twist alpha (+) beta.  The total dimension is capped (default 12) to
// keep the arity-5 verification loops tractable.
HLYAlgebra semidirect(const HLYAlgebra& H, const HLYRep& R, int dim_cap = 12);

// Twisted variant: F(x,y) is added to the V-part of the binary bracket and
// G(x,y,z) to the V-part of the ternary bracket.  This is the raw formula;
// the checked constructor that insists (F,G) is a (2,3)-cocycle lives with
// the cohomology code.
HLYAlgebra twisted_semidirect_raw(const HLYAlgebra& H, const HLYRep& R, const Tensor& F,
                                  const Tensor& G, int dim_cap = 12);

// Morphism of representations (phi, psi): carrier/twist compatibility plus
//   psi(rho(x)u)    = rho'(phi x) psi(u)
//   psi(theta(x,y)u) = theta'(phi x, phi y) psi(u)
// The twist-compatibility line is sometimes quoted as phi o beta =
// beta' o psi, which mixes the algebra and carrier maps; the default is the
// type-consistent reading (psi o beta = beta' o psi together with
// phi o alpha = alpha' o phi), the mixed form sits behind
// literal_twist_line and requires dim A = dim V.
IdentityReport verify_rep_morphism(const RepMorphism& m, const HLYAlgebra& H1, const HLYRep& R1,
                                   const HLYAlgebra& H2, const HLYRep& R2,
                                   bool literal_twist_line = false, int cap = 32);

HLYRep zero_rep(int algebra_dim, int carrier_dim, Field f);

}  // namespace hly
