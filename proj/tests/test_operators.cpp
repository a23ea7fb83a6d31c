#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hly/operators.hpp"

#include "fixtures.hpp"
#include "gf2_bundles.hpp"
#include "oracles.hpp"

using namespace hly;
using fixtures::q;
using fixtures::Q;

TEST_CASE("verify_rota_baxter") {
    HLYAlgebra H = induced_hly_from_hom_lie(fixtures::h3());

    CHECK(verify_rota_baxter(Matrix(3, 3, Q()), H).ok());

    // R = id demands [x,y] = 2[x,y]: fine only for zero brackets
    CHECK(verify_rota_baxter(Matrix::identity(3, Q()), fixtures::zero3()).ok());
    CHECK(!verify_rota_baxter(Matrix::identity(3, Q()), H).ok());

    // the P1 fixture: e1 -> e1, e2,e3 -> 0; all three bracket cases checked
    // by hand come out equal
    CHECK(verify_rota_baxter(fixtures::p1(), H).ok());
}

TEST_CASE("verify_weighted_reynolds") {
    HLYAlgebra H = induced_hly_from_hom_lie(fixtures::h3());

    // (0,0) weights reduce to Rota-Baxter
    CHECK(verify_weighted_reynolds(fixtures::p1(), q(0), q(0), H).ok());

    // R = id with lambda = -1 works whenever the ternary bracket vanishes
    CHECK(verify_weighted_reynolds(Matrix::identity(3, Q()), q(-1), q(7), H).ok());
    CHECK(!verify_weighted_reynolds(Matrix::identity(3, Q()), q(1), q(0), H).ok());
}

TEST_CASE("reynolds_descendent") {
    HLYAlgebra H = induced_hly_from_hom_lie(fixtures::h3());

    // R = 0: descendent brackets vanish
    HLYAlgebra z = reynolds_descendent(Matrix(3, 3, Q()), q(0), q(0), H);
    CHECK(z.binary.is_zero());
    CHECK(z.ternary.is_zero());

    // P1: the only surviving constant is [e1,e2]_R = [P1 e1, e2] = e3
    HLYAlgebra d = reynolds_descendent(fixtures::p1(), q(0), q(0), H);
    CHECK(d.binary.value_at({0, 1}) == basis_vec(3, 2, Q()));
    CHECK(d.binary.value_at({0, 2}) == zero_vec(3, Q()));
    CHECK(d.ternary.is_zero());
    CHECK(verify_hly(d).ok());
    // morphism property is re-verified inside the constructor; spot-check one
    // instance by hand anyway: R([e1,e2]_R) = R(e3) = 0 = [Re1, Re2] = [e1, 0]
    CHECK(fixtures::p1().apply(d.binary.value_at({0, 1})) == zero_vec(3, Q()));

    CHECK_THROWS_AS((void)reynolds_descendent(Matrix::identity(3, Q()), q(1), q(0), H),
                    PreconditionError);
}

TEST_CASE("check_lambda_two_lambda") {
    // lambda = 0: P1 on h3, ternary of the induced algebra is zero
    CHECK(check_lambda_two_lambda(fixtures::p1(), q(0), fixtures::h3()).ok());
    CHECK(check_lambda_two_lambda(Matrix(3, 3, Q()), q(5), fixtures::h3()).ok());

    // a nonzero lambda-weighted Reynolds instance over GF(3), found by
    // exhaustive search and re-verified on the induced algebra
    Field f3 = Field::gf(3);
    HomLieAlgebra L;
    L.dim = 2;
    L.alpha = Matrix::identity(2, f3);
    L.bracket = Tensor(2, 2, 2, f3);
    L.bracket.at({0, 1}, 0) = Scalar::of_int(1, f3);
    L.bracket.at({1, 0}, 0) = Scalar::of_int(-1, f3);
    REQUIRE(verify_hom_lie(L).ok());

    Scalar lam = Scalar::of_int(1, f3);
    int found = 0, nonzero_found = 0;
    for (std::uint64_t code = 0; code < 81; ++code) {
        Matrix R = decode_matrix(code, 2, 2, f3);
        if (!verify_weighted_reynolds_hom_lie(R, lam, L).ok()) continue;
        ++found;
        if (!R.is_zero()) ++nonzero_found;
        CHECK(check_lambda_two_lambda(R, lam, L).ok());
    }
    CHECK(found > 0);
    CHECK(nonzero_found > 0);
}

TEST_CASE("reynolds operators are twisted operators for (lambda[.,.], mu<.,.,.>)") {
    HLYAlgebra H = induced_hly_from_hom_lie(fixtures::h3());

    ReynoldsWrap w = reynolds_as_twisted_context(q(0), q(0), H);
    CHECK(w.cocycle_status.ok());
    CHECK(verify_twisted_op(fixtures::p1(), w.ctx).ok());

    // nonzero weights over GF(3): every operator found by the Reynolds
    // search passes verify_twisted_op against the wrapped context
    Field f3 = Field::gf(3);
    HomLieAlgebra L;
    L.dim = 2;
    L.alpha = Matrix::identity(2, f3);
    L.bracket = Tensor(2, 2, 2, f3);
    L.bracket.at({0, 1}, 0) = Scalar::of_int(1, f3);
    L.bracket.at({1, 0}, 0) = Scalar::of_int(-1, f3);
    HLYAlgebra H3 = induced_hly_from_hom_lie(L);
    Scalar lam = Scalar::of_int(1, f3), mu = Scalar::of_int(2, f3);
    ReynoldsWrap w3 = reynolds_as_twisted_context(lam, mu, H3);
    int checked = 0;
    for (std::uint64_t code = 0; code < 81; ++code) {
        Matrix R = decode_matrix(code, 2, 2, f3);
        if (!verify_weighted_reynolds(R, lam, mu, H3).ok()) continue;
        CHECK(verify_twisted_op(R, w3.ctx).ok());
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("gf(2) bundles are internally valid") {
    for (const TwistedContext& c : bundles::all_bundles()) {
        IdentityReport rep = verify_twisted_context(c);
        CHECK(rep.ok());
    }
}

TEST_CASE("verify_twisted_op basics") {
    // T = 0 with (F,G) vanishing on zero arguments passes trivially
    for (const TwistedContext& c : bundles::all_bundles())
        CHECK(verify_twisted_op(Matrix(2, 2, bundles::F2()), c).ok());

    // search over the zero-rep bundle: passing maps are exactly those with
    // bracket-abelian image (rank <= 1 here)
    TwistedContext c = bundles::bundle_zero_rep();
    std::vector<Matrix> ops = search_twisted_ops(c);
    CHECK(ops.size() == 10);
    for (const Matrix& T : ops) CHECK(verify_twisted_op(T, c).ok());
}

TEST_CASE("graph characterization matches direct verification on all 16 candidates") {
    for (const TwistedContext& c : bundles::all_bundles()) {
        int passing = 0;
        for (std::uint64_t code = 0; code < 16; ++code) {
            Matrix T = decode_matrix(code, 2, 2, bundles::F2());
            bool direct = verify_twisted_op(T, c).ok();
            GraphCheck g = graph_is_subalgebra(T, c);
            CHECK(direct == g.ok);
            if (!g.ok) CHECK(!is_zero_vec(g.escape));
            if (direct) ++passing;
        }
        CHECK(passing >= 1);
        CHECK(passing < 16);   // each bundle genuinely discriminates
    }
}

TEST_CASE("v_structure, induced rep and search agree on every found operator") {
    for (const TwistedContext& c : bundles::all_bundles()) {
        std::vector<Matrix> ops = search_twisted_ops(c);
        REQUIRE(!ops.empty());
        for (const Matrix& T : ops) {
            HLYAlgebra V = v_structure(T, c);
            CHECK(verify_hly(V).ok());

            // T is a morphism from the carrier structure onto the original
            CHECK(is_hly_morphism(T, V, c.H).ok());

            HLYRep rT = induced_rep_from_top(T, c);
            CHECK(verify_hly_rep(V, rT).ok());
        }
    }
}

TEST_CASE("v_structure term isolation") {
    // zero rep with nonzero F: [u,v]_T = F(Tu,Tv), both on and off diagonal
    TwistedContext c = bundles::bundle_twist_pair();
    std::vector<Matrix> ops = search_twisted_ops(c);
    REQUIRE(!ops.empty());
    for (const Matrix& T : ops) {
        HLYAlgebra V = v_structure(T, c);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Vec expect = tensor_eval(c.pair.F, {T.column(i), T.column(j)});
                CHECK(V.binary.value_at({i, j}) == expect);
            }
    }

    CHECK_THROWS_AS((void)v_structure(Matrix::identity(2, bundles::F2()),
                                      bundles::bundle_adjoint()),
                    PreconditionError);
}

TEST_CASE("verify_twisted_op_hom_lie and the induced lift") {
    // dim-2 Hom-Lie data over GF(2) with the adjoint representation,
    // F ranging over alternating 2-cochains; every operator passing the
    // Hom-Lie equations lifts to the induced Hom-Lie-Yamaguti algebra
    Field f2 = bundles::F2();
    HomLieAlgebra L;
    L.dim = 2;
    L.alpha = Matrix::identity(2, f2);
    L.bracket = Tensor(2, 2, 2, f2);
    L.bracket.at({0, 1}, 0) = bundles::b(1);
    L.bracket.at({1, 0}, 0) = bundles::b(1);
    HomLieRep ad;
    ad.carrier_dim = 2;
    ad.beta = L.alpha;
    for (int i = 0; i < 2; ++i) {
        Matrix m(2, 2, f2);
        for (int j = 0; j < 2; ++j) {
            Vec col = L.bracket.value_at({i, j});
            for (int r = 0; r < 2; ++r) m.at(r, j) = col[r];
        }
        ad.rho.push_back(std::move(m));
    }

    int lifted = 0, violating = 0;
    for (int fm = 0; fm < 4; ++fm) {
        Tensor F(2, 2, 2, f2);
        F.at({0, 1}, 0) = bundles::b(fm & 1);
        F.at({1, 0}, 0) = bundles::b(fm & 1);
        F.at({0, 1}, 1) = bundles::b((fm >> 1) & 1);
        F.at({1, 0}, 1) = bundles::b((fm >> 1) & 1);
        if (!verify_2cocycle_hom_lie(F, L, ad).ok()) continue;
        for (std::uint64_t code = 0; code < 16; ++code) {
            Matrix T = decode_matrix(code, 2, 2, f2);
            if (verify_twisted_op_hom_lie(T, L, ad, F).ok()) {
                TwistedOperator lift = induced_twisted_from_hom_lie(T, L, ad, F);
                CHECK(verify_twisted_op(lift.T, lift.ctx).ok());
                ++lifted;
            } else {
                CHECK_THROWS_AS((void)induced_twisted_from_hom_lie(T, L, ad, F), PreconditionError);
                ++violating;
                // only re-check the first few refusals, the loop is exhaustive
                if (violating > 3) break;
            }
        }
    }
    CHECK(lifted > 0);
}

TEST_CASE("verify_top_morphism") {
    TwistedContext c = bundles::bundle_adjoint();
    std::vector<Matrix> ops = search_twisted_ops(c);
    REQUIRE(!ops.empty());
    const Matrix& T = ops.back();

    RepMorphism idm{Matrix::identity(2, bundles::F2()), Matrix::identity(2, bundles::F2())};
    CHECK(verify_top_morphism(idm, T, c, T, c).ok());
    CHECK(verify_top_morphism(idm, T, c, T, c, /*literal_intertwine=*/true).ok());

    // zero pair between zero operators
    TwistedContext cz = bundles::bundle_zero_rep();
    RepMorphism zm{Matrix(2, 2, bundles::F2()), Matrix(2, 2, bundles::F2())};
    CHECK(verify_top_morphism(zm, Matrix(2, 2, bundles::F2()), cz, Matrix(2, 2, bundles::F2()), cz)
              .ok());

    // scaling pair over GF(3): phi = psi = 2 id on a found Reynolds-style
    // instance; the intertwining line survives scaling, the theta line breaks
    Field f3 = Field::gf(3);
    HomLieAlgebra L;
    L.dim = 2;
    L.alpha = Matrix::identity(2, f3);
    L.bracket = Tensor(2, 2, 2, f3);
    L.bracket.at({0, 1}, 0) = Scalar::of_int(1, f3);
    L.bracket.at({1, 0}, 0) = Scalar::of_int(-1, f3);
    TwistedContext c3;
    c3.H = induced_hly_from_hom_lie(L);
    c3.R = adjoint_rep(c3.H);
    c3.pair = CocyclePair{Tensor(2, 2, 2, f3), Tensor(3, 2, 2, f3)};
    std::vector<Matrix> ops3 = search_twisted_ops(c3);
    REQUIRE(!ops3.empty());
    Matrix T3;
    for (const Matrix& cand : ops3)
        if (!cand.is_zero()) T3 = cand;
    REQUIRE(T3.rows == 2);
    Matrix two = scale_mat(Scalar::of_int(2, f3), Matrix::identity(2, f3));
    IdentityReport rep = verify_top_morphism(RepMorphism{two, two}, T3, c3, T3, c3);
    CHECK(!rep.ok());
}

TEST_CASE("degenerate context: every map commuting with the twists passes") {
    // zero brackets, zero rep, zero pair: the bracket equations are vacuous
    TwistedContext c;
    c.H = bundles::abelian2_gf2();
    c.R = zero_rep(2, 2, bundles::F2());
    c.pair = bundles::zero_pair(c.H, c.R);
    CHECK(search_twisted_ops(c).size() == 16);

    // a twist pins the commutation line: alpha = beta = the nilpotent shift
    Matrix shift(2, 2, bundles::F2());
    shift.at(0, 1) = bundles::b(1);
    c.H.alpha = shift;
    c.R.beta = shift;
    REQUIRE(verify_twisted_context(c).ok());
    std::vector<Matrix> ops = search_twisted_ops(c);
    CHECK(ops.size() < 16);
    for (std::uint64_t code = 0; code < 16; ++code) {
        Matrix T = decode_matrix(code, 2, 2, bundles::F2());
        bool commutes = compose_linear(T, c.R.beta) == compose_linear(c.H.alpha, T);
        CHECK(commutes == verify_twisted_op(T, c).ok());
        CHECK(commutes == graph_is_subalgebra(T, c).ok);
    }
}

TEST_CASE("search enumeration is deterministic and complete") {
    TwistedContext c = bundles::bundle_adjoint();
    std::vector<Matrix> a = search_twisted_ops(c);
    std::vector<Matrix> b = search_twisted_ops(c);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    for (size_t i = 1; i < a.size(); ++i) CHECK(encode_matrix(a[i - 1]) < encode_matrix(a[i]));

    // completeness: agrees with brute force over all 16 candidates
    std::vector<std::uint64_t> brute;
    for (std::uint64_t code = 0; code < 16; ++code)
        if (verify_twisted_op(decode_matrix(code, 2, 2, bundles::F2()), c).ok())
            brute.push_back(code);
    REQUIRE(brute.size() == a.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(encode_matrix(a[i]) == brute[i]);

    CHECK_THROWS_AS((void)search_twisted_ops(c, /*budget=*/8), EngineError);
}

TEST_CASE("partial_t produces twisted-complex 1-cocycles") {
    for (const TwistedContext& c : bundles::all_bundles()) {
        std::vector<Matrix> ops = search_twisted_ops(c);
        for (const Matrix& T : ops) {
            TwistedComplex tc = twisted_complex(T, c);
            CHECK(verify_hly(tc.v_alg).ok());
            CHECK(verify_hly_rep(tc.v_alg, tc.a_coeffs).ok());
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    Vec x1 = basis_vec(2, i, bundles::F2());
                    Vec x2 = basis_vec(2, j, bundles::F2());
                    Tensor chi = partial_t(x1, x2, T, c);
                    // chi = (0,0) gives the zero cochain
                    if (is_zero_vec(x1) || i == j) {
                        // skew pair: D(x,x) = 0, ternary skew kills the rest
                        if (i == j) CHECK(chi.is_zero());
                    }
                    auto [d2, d3] = coboundary_deg1(chi, tc.v_alg, tc.a_coeffs);
                    CHECK(d2.is_zero());
                    CHECK(d3.is_zero());
                }
        }
    }
}

TEST_CASE("first twisted coboundary: supported route vs literal transcription") {
    // the quoted closed forms carry known slips (see the implementation notes);
    // this comparison documents that the literal transcription differs from
    // the supported route on a nonzero instance
    TwistedContext c = bundles::bundle_adjoint();
    bool any_difference = false;
    Tensor zero2(2, 2, 2, bundles::F2()), zero3(3, 2, 2, bundles::F2());
    for (const Matrix& T : search_twisted_ops(c)) {
        TwistedComplex tc = twisted_complex(T, c);
        CochainSpace c2 = cochain_basis(2, tc.v_alg, tc.a_coeffs);
        CochainSpace c3 = cochain_basis(3, tc.v_alg, tc.a_coeffs);
        for (const Tensor& b : c2.basis) {
            auto [s1, s2] = coboundary(1, b, zero3, tc.v_alg, tc.a_coeffs);
            auto [l1, l2] = twisted_coboundary_literal_level1(b, zero3, T, c);
            if (s1 != l1 || s2 != l2) any_difference = true;
        }
        for (const Tensor& b : c3.basis) {
            auto [s1, s2] = coboundary(1, zero2, b, tc.v_alg, tc.a_coeffs);
            auto [l1, l2] = twisted_coboundary_literal_level1(zero2, b, T, c);
            if (s1 != l1 || s2 != l2) any_difference = true;
        }
    }
    CHECK(any_difference);
}
