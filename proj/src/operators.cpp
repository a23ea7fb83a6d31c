#include "hly/operators.hpp"

#include <algorithm>

namespace hly {

namespace {

void check_context_shapes(const TwistedContext& c) {
    if (c.pair.F.arity != 2 || c.pair.G.arity != 3 || c.pair.F.in_dim != c.H.dim ||
        c.pair.G.in_dim != c.H.dim || c.pair.F.out_dim != c.R.carrier_dim ||
        c.pair.G.out_dim != c.R.carrier_dim)
        throw DimensionError("twisted context: (F,G) must map A^2 and A^3 into V");
}

void check_op_shape(const Matrix& T, const TwistedContext& c) {
    if (T.rows != c.H.dim || T.cols != c.R.carrier_dim)
        throw DimensionError("twisted operator: T must map V into A");
}

void add_column_failures(IdentityReport& rep, const std::string& name, const Matrix& lhs,
                         const Matrix& rhs) {
    Matrix diff = sub_mat(lhs, rhs);
    for (int j = 0; j < diff.cols; ++j) {
        Vec col = diff.column(j);
        if (!is_zero_vec(col)) rep.add(name, {j}, col);
    }
}

}  // namespace

IdentityReport verify_twisted_context(const TwistedContext& c, int cap) {
    check_context_shapes(c);
    IdentityReport rep;
    rep.cap = cap;
    for (const auto& f : verify_hly(c.H, cap).failures) rep.add("H_" + f.identity, f.where, f.residual);
    for (const auto& f : verify_hly_rep(c.H, c.R, cap).failures)
        rep.add("rep_" + f.identity, f.where, f.residual);
    for (const auto& f : verify_23cocycle(c.pair, c.H, c.R, cap).failures)
        rep.add("pair_" + f.identity, f.where, f.residual);
    return rep;
}

IdentityReport verify_twisted_op(const Matrix& T, const TwistedContext& c, int cap) {
    check_context_shapes(c);
    check_op_shape(T, c);
    IdentityReport rep;
    rep.cap = cap;
    const int m = c.R.carrier_dim;
    const Field f = T.field;
    const std::vector<Matrix> dfam = d_map(c.R, c.H.alpha, c.H.binary);

    add_column_failures(rep, "top_twist", compose_linear(T, c.R.beta), compose_linear(c.H.alpha, T));

    std::vector<Vec> tu;
    for (int i = 0; i < m; ++i) tu.push_back(T.column(i));
    std::vector<Matrix> rho_tu;
    for (int i = 0; i < m; ++i) rho_tu.push_back(rho_of(c.R.rho, tu[i]));

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Vec lhs = bracket2(c.H, tu[i], tu[j]);
            Vec inner = sub_vec(rho_tu[i].column(j), rho_tu[j].column(i));
            inner = add_vec(inner, tensor_eval(c.pair.F, {tu[i], tu[j]}));
            Vec r = sub_vec(lhs, T.apply(inner));
            if (!is_zero_vec(r)) rep.add("top_binary", {i, j}, r);
        }

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Matrix dij = bilinear_of(dfam, c.H.dim, tu[i], tu[j]);
            for (int k = 0; k < m; ++k) {
                Vec lhs = bracket3(c.H, tu[i], tu[j], tu[k]);
                Vec inner = dij.column(k);
                inner = add_vec(inner, theta_of(c.R, tu[j], tu[k]).column(i));
                inner = sub_vec(inner, theta_of(c.R, tu[i], tu[k]).column(j));
                inner = add_vec(inner, tensor_eval(c.pair.G, {tu[i], tu[j], tu[k]}));
                Vec r = sub_vec(lhs, T.apply(inner));
                if (!is_zero_vec(r)) rep.add("top_ternary", {i, j, k}, r);
            }
        }
    (void)f;
    return rep;
}

IdentityReport verify_weighted_reynolds(const Matrix& R, const Scalar& lambda, const Scalar& mu,
                                        const HLYAlgebra& H, int cap) {
    if (R.rows != H.dim || R.cols != H.dim) throw DimensionError("reynolds: R must be dim x dim");
    IdentityReport rep;
    rep.cap = cap;
    const int n = H.dim;
    const Field f = H.binary.field;

    add_column_failures(rep, "reynolds_twist", compose_linear(R, H.alpha), compose_linear(H.alpha, R));

    std::vector<Vec> e, re;
    for (int i = 0; i < n; ++i) {
        e.push_back(basis_vec(n, i, f));
        re.push_back(R.column(i));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec lhs = bracket2(H, re[i], re[j]);
            Vec inner = add_vec(bracket2(H, re[i], e[j]), bracket2(H, e[i], re[j]));
            if (!lambda.is_zero()) inner = add_vec(inner, scale_vec(lambda, lhs));
            Vec r = sub_vec(lhs, R.apply(inner));
            if (!is_zero_vec(r)) rep.add("reynolds_binary", {i, j}, r);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec lhs = bracket3(H, re[i], re[j], re[k]);
                Vec inner = bracket3(H, re[i], re[j], e[k]);
                inner = add_vec(inner, bracket3(H, re[i], e[j], re[k]));
                inner = add_vec(inner, bracket3(H, e[i], re[j], re[k]));
                if (!mu.is_zero()) inner = add_vec(inner, scale_vec(mu, lhs));
                Vec r = sub_vec(lhs, R.apply(inner));
                if (!is_zero_vec(r)) rep.add("reynolds_ternary", {i, j, k}, r);
            }
    return rep;
}

IdentityReport verify_rota_baxter(const Matrix& R, const HLYAlgebra& H, int cap) {
    Scalar z = Scalar::zero(H.binary.field);
    IdentityReport rep = verify_weighted_reynolds(R, z, z, H, cap);
    for (auto& f : rep.failures) {
        if (f.identity == "reynolds_twist") f.identity = "rb_twist";
        if (f.identity == "reynolds_binary") f.identity = "rb_binary";
        if (f.identity == "reynolds_ternary") f.identity = "rb_ternary";
    }
    return rep;
}

IdentityReport verify_weighted_reynolds_hom_lie(const Matrix& R, const Scalar& lambda,
                                                const HomLieAlgebra& L, int cap) {
    if (R.rows != L.dim || R.cols != L.dim) throw DimensionError("reynolds: R must be dim x dim");
    IdentityReport rep;
    rep.cap = cap;
    const int n = L.dim;
    const Field f = L.bracket.field;
    add_column_failures(rep, "reynolds_twist", compose_linear(R, L.alpha), compose_linear(L.alpha, R));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec ri = R.column(i), rj = R.column(j);
            Vec lhs = tensor_eval(L.bracket, {ri, rj});
            Vec inner = add_vec(tensor_eval(L.bracket, {ri, basis_vec(n, j, f)}),
                                tensor_eval(L.bracket, {basis_vec(n, i, f), rj}));
            if (!lambda.is_zero()) inner = add_vec(inner, scale_vec(lambda, lhs));
            Vec r = sub_vec(lhs, R.apply(inner));
            if (!is_zero_vec(r)) rep.add("reynolds_binary", {i, j}, r);
        }
    return rep;
}

HLYAlgebra reynolds_descendent(const Matrix& R, const Scalar& lambda, const Scalar& mu,
                               const HLYAlgebra& H) {
    IdentityReport pre = verify_weighted_reynolds(R, lambda, mu, H);
    if (!pre.ok()) throw PreconditionError("reynolds_descendent: not a weighted Reynolds operator", pre);
    const int n = H.dim;
    const Field f = H.binary.field;
    std::vector<Vec> e, re;
    for (int i = 0; i < n; ++i) {
        e.push_back(basis_vec(n, i, f));
        re.push_back(R.column(i));
    }

    HLYAlgebra out;
    out.dim = n;
    out.alpha = H.alpha;
    out.binary = Tensor::from_basis_map(2, n, n, f, [&](const std::vector<int>& t) {
        Vec v = add_vec(bracket2(H, re[t[0]], e[t[1]]), bracket2(H, e[t[0]], re[t[1]]));
        if (!lambda.is_zero()) v = add_vec(v, scale_vec(lambda, bracket2(H, re[t[0]], re[t[1]])));
        return v;
    });
    out.ternary = Tensor::from_basis_map(3, n, n, f, [&](const std::vector<int>& t) {
        Vec v = bracket3(H, re[t[0]], re[t[1]], e[t[2]]);
        v = add_vec(v, bracket3(H, re[t[0]], e[t[1]], re[t[2]]));
        v = add_vec(v, bracket3(H, e[t[0]], re[t[1]], re[t[2]]));
        if (!mu.is_zero()) v = add_vec(v, scale_vec(mu, bracket3(H, re[t[0]], re[t[1]], re[t[2]])));
        return v;
    });

    IdentityReport valid = verify_hly(out);
    if (!valid.ok())
        throw PreconditionError("reynolds_descendent: descendent brackets fail the axioms", valid);
    IdentityReport morph;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec r = sub_vec(R.apply(out.binary.value_at({i, j})), bracket2(H, re[i], re[j]));
            if (!is_zero_vec(r)) morph.add("descendent_morphism_binary", {i, j}, r);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec r = sub_vec(R.apply(out.ternary.value_at({i, j, k})), bracket3(H, re[i], re[j], re[k]));
                if (!is_zero_vec(r)) morph.add("descendent_morphism_ternary", {i, j, k}, r);
            }
    if (!morph.ok())
        throw PreconditionError("reynolds_descendent: R is not a morphism onto the original brackets",
                                morph);
    return out;
}

IdentityReport check_lambda_two_lambda(const Matrix& R, const Scalar& lambda, const HomLieAlgebra& L) {
    IdentityReport pre = verify_weighted_reynolds_hom_lie(R, lambda, L);
    if (!pre.ok())
        throw PreconditionError("check_lambda_two_lambda: not a weighted Reynolds operator on the"
                                " Hom-Lie algebra",
                                pre);
    Scalar two = Scalar::of_int(2, lambda.field());
    return verify_weighted_reynolds(R, lambda, two * lambda, induced_hly_from_hom_lie(L));
}

IdentityReport verify_twisted_op_hom_lie(const Matrix& T, const HomLieAlgebra& L, const HomLieRep& R,
                                         const Tensor& F, int cap) {
    if (T.rows != L.dim || T.cols != R.carrier_dim)
        throw DimensionError("twisted operator: T must map V into A");
    IdentityReport rep;
    rep.cap = cap;
    const int m = R.carrier_dim;
    add_column_failures(rep, "top_twist", compose_linear(T, R.beta), compose_linear(L.alpha, T));
    std::vector<Vec> tu;
    for (int i = 0; i < m; ++i) tu.push_back(T.column(i));
    for (int i = 0; i < m; ++i) {
        Matrix rho_ti = rho_of(R.rho, tu[i]);
        for (int j = 0; j < m; ++j) {
            Vec lhs = tensor_eval(L.bracket, {tu[i], tu[j]});
            Vec inner = sub_vec(rho_ti.column(j), rho_of(R.rho, tu[j]).column(i));
            inner = add_vec(inner, tensor_eval(F, {tu[i], tu[j]}));
            Vec r = sub_vec(lhs, T.apply(inner));
            if (!is_zero_vec(r)) rep.add("top_binary", {i, j}, r);
        }
    }
    return rep;
}

TwistedOperator induced_twisted_from_hom_lie(const Matrix& T, const HomLieAlgebra& L,
                                             const HomLieRep& R, const Tensor& F) {
    IdentityReport pre = verify_twisted_op_hom_lie(T, L, R, F);
    if (!pre.ok())
        throw PreconditionError("induced_twisted_from_hom_lie: not a twisted operator on the"
                                " Hom-Lie algebra",
                                pre);
    TwistedContext ctx;
    ctx.H = induced_hly_from_hom_lie(L);
    ctx.R = hly_rep_from_hom_lie_rep(R, L.alpha);
    Tensor G = g_from_f(F, L, R);
    ctx.pair = make_cocycle_pair(F, G, ctx.H, ctx.R);
    IdentityReport post = verify_twisted_op(T, ctx);
    if (!post.ok())
        throw PreconditionError("induced_twisted_from_hom_lie: lifted operator fails on the induced"
                                " algebra",
                                post);
    return TwistedOperator{T, ctx};
}

GraphCheck graph_is_subalgebra(const Matrix& T, const TwistedContext& c) {
    check_context_shapes(c);
    check_op_shape(T, c);
    const int n = c.H.dim, m = c.R.carrier_dim;
    const Field f = T.field;
    HLYAlgebra P = twisted_semidirect_raw(c.H, c.R, c.pair.F, c.pair.G, n + m);

    std::vector<Vec> g;
    for (int i = 0; i < m; ++i) {
        Vec v = zero_vec(n + m, f);
        Vec ti = T.column(i);
        for (int r = 0; r < n; ++r) v[r] = ti[r];
        v[n + i] = Scalar::one(f);
        g.push_back(std::move(v));
    }
    // (a, u) lies on the graph iff a = T u
    auto escape = [&](const Vec& w) {
        Vec a(w.begin(), w.begin() + n);
        Vec u(w.begin() + n, w.end());
        return sub_vec(a, T.apply(u));
    };

    GraphCheck out;
    for (int i = 0; i < m; ++i) {
        Vec r = escape(P.alpha.apply(g[i]));
        if (!is_zero_vec(r)) return GraphCheck{false, "twist", {i}, r};
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Vec r = escape(tensor_eval(P.binary, {g[i], g[j]}));
            if (!is_zero_vec(r)) return GraphCheck{false, "binary", {i, j}, r};
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                Vec r = escape(tensor_eval(P.ternary, {g[i], g[j], g[k]}));
                if (!is_zero_vec(r)) return GraphCheck{false, "ternary", {i, j, k}, r};
            }
    out.ok = true;
    return out;
}

HLYAlgebra v_structure(const Matrix& T, const TwistedContext& c) {
    IdentityReport pre = verify_twisted_op(T, c);
    if (!pre.ok()) throw PreconditionError("v_structure: T is not a twisted operator", pre);
    const int n = c.H.dim, m = c.R.carrier_dim;
    const Field f = T.field;
    const std::vector<Matrix> dfam = d_map(c.R, c.H.alpha, c.H.binary);

    std::vector<Vec> tu;
    std::vector<Matrix> rho_tu;
    for (int i = 0; i < m; ++i) {
        tu.push_back(T.column(i));
        rho_tu.push_back(rho_of(c.R.rho, tu[i]));
    }

    HLYAlgebra out;
    out.dim = m;
    out.alpha = c.R.beta;
    out.binary = Tensor::from_basis_map(2, m, m, f, [&](const std::vector<int>& t) {
        Vec v = sub_vec(rho_tu[t[0]].column(t[1]), rho_tu[t[1]].column(t[0]));
        return add_vec(v, tensor_eval(c.pair.F, {tu[t[0]], tu[t[1]]}));
    });
    out.ternary = Tensor::from_basis_map(3, m, m, f, [&](const std::vector<int>& t) {
        Vec v = bilinear_of(dfam, n, tu[t[0]], tu[t[1]]).column(t[2]);
        v = add_vec(v, theta_of(c.R, tu[t[1]], tu[t[2]]).column(t[0]));
        v = sub_vec(v, theta_of(c.R, tu[t[0]], tu[t[2]]).column(t[1]));
        return add_vec(v, tensor_eval(c.pair.G, {tu[t[0]], tu[t[1]], tu[t[2]]}));
    });
    return out;
}

HLYRep induced_rep_from_top(const Matrix& T, const TwistedContext& c) {
    IdentityReport pre = verify_twisted_op(T, c);
    if (!pre.ok()) throw PreconditionError("induced_rep_from_top: T is not a twisted operator", pre);
    const int n = c.H.dim, m = c.R.carrier_dim;
    const Field f = T.field;
    const std::vector<Matrix> dfam = d_map(c.R, c.H.alpha, c.H.binary);

    std::vector<Vec> tu, e;
    for (int i = 0; i < m; ++i) tu.push_back(T.column(i));
    for (int j = 0; j < n; ++j) e.push_back(basis_vec(n, j, f));

    HLYRep rep;
    rep.carrier_dim = n;
    rep.beta = c.H.alpha;
    for (int i = 0; i < m; ++i) {
        Matrix mt(n, n, f);
        for (int j = 0; j < n; ++j) {
            // rho_T(u) x = [Tu, x] + T( rho(x)u + F(x, Tu) )
            Vec col = bracket2(c.H, tu[i], e[j]);
            Vec inner = c.R.rho[j].column(i);
            inner = add_vec(inner, tensor_eval(c.pair.F, {e[j], tu[i]}));
            col = add_vec(col, T.apply(inner));
            for (int r = 0; r < n; ++r) mt.at(r, j) = col[r];
        }
        rep.rho.push_back(std::move(mt));
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Matrix mt(n, n, f);
            for (int k = 0; k < n; ++k) {
                // theta_T(u,v) x = <x, Tu, Tv> - T( D(x,Tu)v - theta(x,Tv)u + G(x,Tu,Tv) )
                Vec col = bracket3(c.H, e[k], tu[i], tu[j]);
                Vec inner = bilinear_of(dfam, n, e[k], tu[i]).column(j);
                inner = sub_vec(inner, theta_of(c.R, e[k], tu[j]).column(i));
                inner = add_vec(inner, tensor_eval(c.pair.G, {e[k], tu[i], tu[j]}));
                col = sub_vec(col, T.apply(inner));
                for (int r = 0; r < n; ++r) mt.at(r, k) = col[r];
            }
            rep.theta.push_back(std::move(mt));
        }
    return rep;
}

IdentityReport verify_top_morphism(const RepMorphism& m, const Matrix& T, const TwistedContext& cT,
                                   const Matrix& Tp, const TwistedContext& cTp,
                                   bool literal_intertwine, int cap) {
    IdentityReport rep = verify_rep_morphism(m, cT.H, cT.R, cTp.H, cTp.R, false, cap);
    if (literal_intertwine) {
        // quoted form: T psi = phi T'
        if (m.psi.rows != T.cols || m.phi.cols != Tp.rows)
            throw DimensionError("top morphism: literal intertwining needs matching spaces");
        Matrix lhs = compose_linear(T, m.psi), rhs = compose_linear(m.phi, Tp);
        Matrix diff = sub_mat(lhs, rhs);
        for (int j = 0; j < diff.cols; ++j) {
            Vec col = diff.column(j);
            if (!is_zero_vec(col)) rep.add("topmorph_intertwine_literal", {j}, col);
        }
    } else {
        // type-consistent form: phi o T = T' o psi
        Matrix lhs = compose_linear(m.phi, T), rhs = compose_linear(Tp, m.psi);
        Matrix diff = sub_mat(lhs, rhs);
        for (int j = 0; j < diff.cols; ++j) {
            Vec col = diff.column(j);
            if (!is_zero_vec(col)) rep.add("topmorph_intertwine", {j}, col);
        }
    }
    return rep;
}

Matrix decode_matrix(std::uint64_t code, int rows, int cols, Field f) {
    Matrix m(rows, cols, f);
    for (int idx = rows * cols - 1; idx >= 0; --idx) {
        m.a[idx] = Scalar::of_int(std::int64_t(code % f.p), f);
        code /= f.p;
    }
    return m;
}

std::uint64_t encode_matrix(const Matrix& m) {
    std::uint64_t code = 0;
    for (const auto& s : m.a) code = code * std::uint64_t(m.field.p) + std::uint64_t(s.num());
    return code;
}

std::vector<Matrix> search_twisted_ops(const TwistedContext& c, std::uint64_t budget) {
    check_context_shapes(c);
    const Field f = c.H.binary.field;
    if (f.is_rational())
        throw EngineError("search_twisted_ops: exhaustive search requires a finite field");
    const int n = c.H.dim, m = c.R.carrier_dim, cells = n * m;

    std::uint64_t total = 1;
    for (int i = 0; i < cells; ++i) {
        total *= std::uint64_t(f.p);
        if (total > budget)
            throw EngineError("search_twisted_ops: p^(dimV*dimA) exceeds the budget " +
                              std::to_string(budget));
    }

    // linear pre-filter: T o beta = alpha o T, entries vectorized row-major
    Matrix commute(cells, cells, f);
    for (int r = 0; r < n; ++r)
        for (int cc = 0; cc < m; ++cc)
            for (int r2 = 0; r2 < n; ++r2)
                for (int c2 = 0; c2 < m; ++c2) {
                    Scalar v = Scalar::zero(f);
                    if (r == r2) v += c.R.beta.at(c2, cc);
                    if (cc == c2) v -= c.H.alpha.at(r, r2);
                    commute.at(r * m + cc, r2 * m + c2) = v;
                }
    std::vector<Vec> ker = kernel_basis(commute);

    std::vector<Matrix> found;
    std::uint64_t combos = 1;
    for (size_t i = 0; i < ker.size(); ++i) combos *= std::uint64_t(f.p);
    for (std::uint64_t cdx = 0; cdx < combos; ++cdx) {
        Vec entries = zero_vec(cells, f);
        std::uint64_t rest = cdx;
        for (size_t b = 0; b < ker.size(); ++b) {
            Scalar coeff = Scalar::of_int(std::int64_t(rest % f.p), f);
            rest /= f.p;
            if (!coeff.is_zero()) entries = add_vec(entries, scale_vec(coeff, ker[b]));
        }
        Matrix T(n, m, f);
        T.a = entries;
        if (verify_twisted_op(T, c).ok()) found.push_back(std::move(T));
    }
    std::sort(found.begin(), found.end(),
              [](const Matrix& a, const Matrix& b) { return encode_matrix(a) < encode_matrix(b); });
    return found;
}

ReynoldsWrap reynolds_as_twisted_context(const Scalar& lambda, const Scalar& mu, const HLYAlgebra& H) {
    ReynoldsWrap w;
    w.ctx.H = H;
    w.ctx.R = adjoint_rep(H);
    w.ctx.pair.F = scale_tensor(lambda, H.binary);
    w.ctx.pair.G = scale_tensor(mu, H.ternary);
    w.cocycle_status = verify_23cocycle(w.ctx.pair, w.ctx.H, w.ctx.R);
    return w;
}

TwistedComplex twisted_complex(const Matrix& T, const TwistedContext& c) {
    TwistedComplex tc;
    tc.v_alg = v_structure(T, c);
    tc.a_coeffs = induced_rep_from_top(T, c);
    return tc;
}

Tensor partial_t(const Vec& x1, const Vec& x2, const Matrix& T, const TwistedContext& c) {
    check_context_shapes(c);
    check_op_shape(T, c);
    const int n = c.H.dim, m = c.R.carrier_dim;
    const std::vector<Matrix> dfam = d_map(c.R, c.H.alpha, c.H.binary);
    Matrix dchi = bilinear_of(dfam, n, x1, x2);

    return Tensor::from_basis_map(1, m, n, T.field, [&](const std::vector<int>& t) {
        Vec tui = T.column(t[0]);
        Vec inner = dchi.column(t[0]);
        inner = add_vec(inner, tensor_eval(c.pair.G, {x1, x2, tui}));
        return sub_vec(T.apply(inner), bracket3(c.H, x1, x2, tui));
    });
}

std::pair<Tensor, Tensor> twisted_coboundary_literal_level1(const Tensor& Fc, const Tensor& Gc,
                                                            const Matrix& T,
                                                            const TwistedContext& c) {
    // Direct transcription of the quoted closed form of the first twisted
    // coboundary at the lowest level, V^2 -> A and V^3 -> A inputs.  Two
    // spots do not typecheck as quoted and carry the minimal repair:
    //   (a) "rho(b^2 u) G(...)" pairs an algebra action with a carrier
    //       argument; the only evaluable reading is rho(G(...)) b^2 u.
    //   (b) one G-term applies T to an argument already in A; the stray T is
    //       dropped.
    // Kept for comparison only; the supported route computes the same level
    // through the carrier structure and its induced representation.
    if (Fc.arity != 2 || Gc.arity != 3 || Fc.in_dim != c.R.carrier_dim || Fc.out_dim != c.H.dim)
        throw DimensionError("twisted_coboundary_literal: expected maps V^2 -> A and V^3 -> A");
    const int n = c.H.dim, m = c.R.carrier_dim;
    const Field f = T.field;
    const std::vector<Matrix> dfam = d_map(c.R, c.H.alpha, c.H.binary);
    Matrix beta2 = compose_linear(c.R.beta, c.R.beta);

    std::vector<Vec> u, bu, b2u, tbu, tb2u, tu;
    for (int i = 0; i < m; ++i) {
        u.push_back(basis_vec(m, i, f));
        bu.push_back(c.R.beta.column(i));
        b2u.push_back(beta2.column(i));
        tbu.push_back(T.apply(bu[i]));
        tb2u.push_back(T.apply(b2u[i]));
        tu.push_back(T.column(i));
    }
    auto Dm = [&](const Vec& x, const Vec& y) { return bilinear_of(dfam, n, x, y); };
    auto br_t = [&](int i, int j) {   // [u_i, u_j]_T as a carrier vector
        Vec v = sub_vec(rho_of(c.R.rho, tu[i]).column(j), rho_of(c.R.rho, tu[j]).column(i));
        return add_vec(v, tensor_eval(c.pair.F, {tu[i], tu[j]}));
    };
    auto ter_t = [&](int i, int j, int k) {   // <u_i, u_j, u_k>_T
        Vec v = Dm(tu[i], tu[j]).column(k);
        v = add_vec(v, theta_of(c.R, tu[j], tu[k]).column(i));
        v = sub_vec(v, theta_of(c.R, tu[i], tu[k]).column(j));
        return add_vec(v, tensor_eval(c.pair.G, {tu[i], tu[j], tu[k]}));
    };
    auto ter_t_truncated = [&](int i, int j, int k) {   // quoted duplicate, two terms only
        Vec v = Dm(tu[i], tu[j]).column(k);
        return add_vec(v, theta_of(c.R, tu[j], tu[k]).column(i));
    };

    Tensor o1 = Tensor::from_basis_map(4, m, n, f, [&](const std::vector<int>& t) {
        int u1 = t[0], u2 = t[1], u3 = t[2], u4 = t[3];
        auto plus_group = [&](int ua, const Vec& gval) {
            Vec v = bracket2(c.H, tb2u[ua], gval);
            v = add_vec(v, T.apply(rho_of(c.R.rho, gval).apply(b2u[ua])));   // repair (a)
            v = add_vec(v, T.apply(tensor_eval(c.pair.F, {gval, tb2u[ua]})));
            return v;
        };
        Vec val = plus_group(u3, Gc.value_at({u1, u2, u4}));
        val = sub_vec(val, plus_group(u4, Gc.value_at({u1, u2, u3})));
        val = sub_vec(val, tensor_eval(Gc, {bu[u1], bu[u2], br_t(u3, u4)}));

        // k = 1 group, sign -1
        Vec fval = Fc.value_at({u3, u4});
        Vec grp = bracket3(c.H, tbu[u1], tbu[u2], fval);
        grp = sub_vec(grp, T.apply(theta_of(c.R, tbu[u2], fval).apply(bu[u1])));
        grp = sub_vec(grp, T.apply(theta_of(c.R, tbu[u1], fval).apply(bu[u2])));
        grp = add_vec(grp, T.apply(tensor_eval(c.pair.G, {tbu[u1], tbu[u2], fval})));   // repair (b)
        val = sub_vec(val, grp);

        // j-sum, sign +1
        val = add_vec(val, tensor_eval(Fc, {ter_t(u1, u2, u3), b2u[u4]}));
        val = add_vec(val, tensor_eval(Fc, {b2u[u3], ter_t(u1, u2, u4)}));
        return val;
    });

    Tensor o2 = Tensor::from_basis_map(5, m, n, f, [&](const std::vector<int>& t) {
        int u1 = t[0], u2 = t[1], u3 = t[2], u4 = t[3], u5 = t[4];
        Vec g123 = Gc.value_at({u1, u2, u3});
        Vec g124 = Gc.value_at({u1, u2, u4});

        Vec val = bracket3(c.H, g123, tb2u[u4], tb2u[u5]);
        Vec innr = Dm(g123, tb2u[u4]).apply(b2u[u5]);
        innr = sub_vec(innr, theta_of(c.R, g123, tb2u[u5]).apply(b2u[u4]));
        innr = add_vec(innr, tensor_eval(c.pair.G, {g123, tb2u[u4], tb2u[u5]}));
        val = sub_vec(val, T.apply(innr));

        val = sub_vec(val, bracket3(c.H, g124, tb2u[u3], tb2u[u5]));
        val = add_vec(val, T.apply(Dm(g124, tb2u[u3]).apply(b2u[u5])));
        // quoted without the wrapping T; repaired to land in A
        val = sub_vec(val, T.apply(theta_of(c.R, g124, tb2u[u5]).apply(b2u[u3])));
        val = add_vec(val, T.apply(tensor_eval(c.pair.G, {tb2u[u3], tb2u[u5], g124})));

        // k-groups: k = 1 sign -1 over (u1,u2), k = 2 sign +1 over (u3,u4)
        auto kgroup = [&](int a, int b, const Vec& gval) {
            Vec v = bracket3(c.H, tb2u[a], tb2u[b], gval);
            Vec w = theta_of(c.R, tb2u[b], gval).apply(b2u[a]);
            w = sub_vec(w, theta_of(c.R, tb2u[a], gval).apply(b2u[b]));
            w = add_vec(w, tensor_eval(c.pair.G, {tb2u[a], tb2u[b], gval}));
            return sub_vec(v, T.apply(w));
        };
        val = sub_vec(val, kgroup(u1, u2, Gc.value_at({u3, u4, u5})));
        val = add_vec(val, kgroup(u3, u4, Gc.value_at({u1, u2, u5})));

        // first trailing sum (full carrier bracket), k = 1 sign +1, k = 2 sign -1
        val = add_vec(val, tensor_eval(Gc, {ter_t(u1, u2, u3), b2u[u4], b2u[u5]}));
        val = add_vec(val, tensor_eval(Gc, {b2u[u3], ter_t(u1, u2, u4), b2u[u5]}));
        val = add_vec(val, tensor_eval(Gc, {b2u[u3], b2u[u4], ter_t(u1, u2, u5)}));
        val = sub_vec(val, tensor_eval(Gc, {b2u[u1], b2u[u2], ter_t(u3, u4, u5)}));

        // duplicated trailing sum as quoted (truncated bracket)
        val = add_vec(val, tensor_eval(Gc, {ter_t_truncated(u1, u2, u3), b2u[u4], b2u[u5]}));
        val = add_vec(val, tensor_eval(Gc, {b2u[u3], ter_t_truncated(u1, u2, u4), b2u[u5]}));
        val = add_vec(val, tensor_eval(Gc, {b2u[u3], b2u[u4], ter_t_truncated(u1, u2, u5)}));
        val = sub_vec(val, tensor_eval(Gc, {b2u[u1], b2u[u2], ter_t_truncated(u3, u4, u5)}));
        return val;
    });

    return {o1, o2};
}

}  // namespace hly
