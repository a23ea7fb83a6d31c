#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace hly;
using fixtures::q;
using fixtures::Q;

TEST_CASE("verify_hom_lie on fixtures") {
    CHECK(verify_hom_lie(fixtures::zero3_lie()).ok());
    CHECK(verify_hom_lie(fixtures::h3()).ok());
    CHECK(verify_hom_lie(fixtures::h3q()).ok());

    // breaking skew-symmetry on one constant only is caught at (0,1)
    HomLieAlgebra bad = fixtures::h3();
    bad.bracket.at({1, 0}, 2) = q(1);
    IdentityReport rep = verify_hom_lie(bad);
    CHECK(!rep.ok());
    CHECK(rep.failures[0].identity == "binary_skew");
    CHECK(rep.failures[0].where == std::vector<int>{0, 1});
}

TEST_CASE("hom-jacobi failures carry the residual") {
    // [e1,e2]=e1 with alpha twisting e1 only breaks the cyclic sum
    HomLieAlgebra L = fixtures::zero3_lie();
    L.bracket.at({0, 1}, 0) = q(1);
    L.bracket.at({1, 0}, 0) = q(-1);
    L.bracket.at({0, 2}, 1) = q(1);
    L.bracket.at({2, 0}, 1) = q(-1);
    IdentityReport rep = verify_hom_lie(L);
    CHECK(!rep.ok());
    bool has_jacobi = false;
    for (const auto& f : rep.failures)
        if (f.identity == "hom_jacobi") { has_jacobi = true; CHECK(!is_zero_vec(f.residual)); }
    CHECK(has_jacobi);
}

TEST_CASE("verify_multiplicative") {
    CHECK(verify_multiplicative(fixtures::h3()).ok());      // alpha = id
    CHECK(verify_multiplicative(fixtures::h3q()).ok());     // alpha([e1,e2]') = 4 e3 = [alpha e1, alpha e2]'

    HomLieAlgebra bad = fixtures::h3();
    bad.alpha.at(2, 2) = q(5);     // alpha(e3) = 5 e3 vs [e1,e2] = e3
    IdentityReport rep = verify_multiplicative(bad);
    CHECK(!rep.ok());
    CHECK(rep.failures[0].identity == "multiplicative_binary");
    CHECK(rep.failures[0].where == std::vector<int>{0, 1});
}

TEST_CASE("induced_hly_from_hom_lie") {
    // abelian input: both brackets zero
    HLYAlgebra Z = induced_hly_from_hom_lie(fixtures::zero3_lie());
    CHECK(Z.binary.is_zero());
    CHECK(Z.ternary.is_zero());

    // h3: [[x,y],z] lands in [span(e3), .] = 0, so the ternary tensor vanishes
    HLYAlgebra H = induced_hly_from_hom_lie(fixtures::h3());
    CHECK(H.ternary.is_zero());
    CHECK(H.binary == fixtures::h3().bracket);
    CHECK(verify_hly(H).ok());

    // same for the twisted fixture
    HLYAlgebra Hq = induced_hly_from_hom_lie(fixtures::h3q());
    CHECK(Hq.ternary.is_zero());
    CHECK(verify_hly(Hq).ok());

    // precondition violations carry the inner report
    HomLieAlgebra bad = fixtures::h3();
    bad.alpha.at(2, 2) = q(5);
    CHECK_THROWS_AS((void)induced_hly_from_hom_lie(bad), PreconditionError);
}

TEST_CASE("verify_hly catches a planted ly1 violation") {
    // ternary <e1,e2,e3> = e1 on the abelian algebra: the cyclic sum
    // <1,2,3> + <2,3,1> + <3,1,2> = e1 at tuple (0,1,2)
    HLYAlgebra H = fixtures::zero3();
    H.ternary.at({0, 1, 2}, 0) = q(1);
    H.ternary.at({1, 0, 2}, 0) = q(-1);
    IdentityReport rep = verify_hly(H);
    CHECK(!rep.ok());
    bool found = false;
    for (const auto& f : rep.failures)
        if (f.identity == "ly1" && f.where == std::vector<int>{0, 1, 2}) {
            found = true;
            CHECK(f.residual == basis_vec(3, 0, Q()));
        }
    CHECK(found);
}

TEST_CASE("yau_twist") {
    HLYAlgebra h3_ly = hly_from_hom_lie_brackets(fixtures::h3());

    // identity morphism: output equals input
    HLYAlgebra same = yau_twist(h3_ly, Matrix::identity(3, Q()));
    CHECK(same.binary == h3_ly.binary);
    CHECK(same.ternary == h3_ly.ternary);
    CHECK(same.alpha == h3_ly.alpha);

    // phi = diag(1,2,2) reproduces the h3q fixture
    HLYAlgebra twisted = yau_twist(h3_ly, fixtures::phi122());
    HomLieAlgebra expect = fixtures::h3q();
    CHECK(twisted.alpha == expect.alpha);
    CHECK(twisted.binary == expect.bracket);
    CHECK(twisted.ternary.is_zero());
    CHECK(verify_hly(twisted).ok());

    // zero morphism: everything collapses
    HLYAlgebra dead = yau_twist(h3_ly, Matrix(3, 3, Q()));
    CHECK(dead.alpha.is_zero());
    CHECK(dead.binary.is_zero());

    // a non-morphism is refused
    Matrix notmorph = Matrix::identity(3, Q());
    notmorph.at(2, 2) = q(5);
    CHECK_THROWS_AS((void)yau_twist(h3_ly, notmorph), PreconditionError);
}

TEST_CASE("as_hom_lie and as_hlts") {
    HLYAlgebra H = induced_hly_from_hom_lie(fixtures::h3());
    HomLieAlgebra L = as_hom_lie(H);   // ternary is zero, round-trips
    CHECK(L.bracket == fixtures::h3().bracket);

    HLYAlgebra T = fixtures::zero3();
    T.ternary.at({0, 1, 2}, 2) = q(1);
    T.ternary.at({1, 0, 2}, 2) = q(-1);
    CHECK(as_hlts(T).binary.is_zero());
    CHECK_THROWS_AS((void)as_hom_lie(T), PreconditionError);

    HLYAlgebra B = hly_from_hom_lie_brackets(fixtures::h3());
    CHECK_THROWS_AS((void)as_hlts(B), PreconditionError);
}

TEST_CASE("is_hly_morphism") {
    HLYAlgebra H = induced_hly_from_hom_lie(fixtures::h3());
    CHECK(is_hly_morphism(Matrix::identity(3, Q()), H, H).ok());

    // zero map into an abelian target
    CHECK(is_hly_morphism(Matrix(3, 3, Q()), H, fixtures::zero3()).ok());

    // diag(1,2,2): h3 -> h3q.  Hand check of the single nonzero constant:
    // phi([e1,e2]) = 2 e3 while [phi e1, phi e2]' = [e1, 2 e2]' = 4 e3,
    // so bracket compatibility fails at (0,1) with residual -2 e3.
    HLYAlgebra Hq = induced_hly_from_hom_lie(fixtures::h3q());
    IdentityReport rep = is_hly_morphism(fixtures::phi122(), H, Hq);
    CHECK(!rep.ok());
    bool found = false;
    for (const auto& f : rep.failures)
        if (f.identity == "morphism_binary" && f.where == std::vector<int>{0, 1}) {
            found = true;
            CHECK(f.residual == scale_vec(q(-2), basis_vec(3, 2, Q())));
        }
    CHECK(found);

    // phi IS a morphism of h3 into itself, which is what the twist construction uses
    CHECK(is_hly_morphism(fixtures::phi122(), H, H).ok());
}

TEST_CASE("theorem: induced hly of a multiplicative hom-lie algebra verifies, over GF(5)") {
    // random multiplicative presentations found by rejection search
    Field f5 = Field::gf(5);
    oracle::Rng rng(42);
    int found = 0, attempts = 0;
    while (found < 25 && attempts < 200000) {
        ++attempts;
        int dim = 2 + int(rng.below(2));
        HomLieAlgebra L;
        L.dim = dim;
        L.alpha = Matrix(dim, dim, f5);
        for (int i = 0; i < dim; ++i) L.alpha.at(i, i) = Scalar(std::int64_t(rng.below(5)), 1, f5);
        L.bracket = Tensor(2, dim, dim, f5);
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j)
                for (int m = 0; m < dim; ++m) {
                    Scalar c(std::int64_t(rng.below(5)), 1, f5);
                    L.bracket.at({i, j}, m) = c;
                    L.bracket.at({j, i}, m) = -c;
                }
        if (!verify_hom_lie(L).ok() || !verify_multiplicative(L).ok()) continue;
        ++found;
        CHECK(verify_hly(induced_hly_from_hom_lie(L)).ok());
    }
    CHECK(found == 25);
}
