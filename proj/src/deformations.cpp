#include "hly/deformations.hpp"

namespace hly {

TruncatedDeformation make_deformation(std::vector<Matrix> coeffs, TwistedContext ctx) {
    if (coeffs.empty()) throw EngineError("deformation: need at least the order-0 coefficient");
    IdentityReport base = verify_twisted_op(coeffs[0], ctx);
    if (!base.ok())
        throw PreconditionError("deformation: T_0 must be the context's verified operator", base);
    TruncatedDeformation d;
    d.order = int(coeffs.size()) - 1;
    d.coeffs = std::move(coeffs);
    d.ctx = std::move(ctx);
    return d;
}

IdentityReport verify_deformation(const TruncatedDeformation& d, int cap) {
    IdentityReport rep;
    rep.cap = cap;
    const TwistedContext& c = d.ctx;
    const int n = c.H.dim, m = c.R.carrier_dim;
    const Field f = c.H.binary.field;
    const std::vector<Matrix> dfam = d_map(c.R, c.H.alpha, c.H.binary);

    // columns T_i u for each coefficient
    std::vector<std::vector<Vec>> tu(d.coeffs.size());
    for (size_t i = 0; i < d.coeffs.size(); ++i)
        for (int u = 0; u < m; ++u) tu[i].push_back(d.coeffs[i].column(u));

    for (int s = 0; s <= d.order; ++s) {
        const Matrix& Ts = d.coeffs[s];
        Matrix twist = sub_mat(compose_linear(Ts, c.R.beta), compose_linear(c.H.alpha, Ts));
        for (int j = 0; j < m; ++j) {
            Vec col = twist.column(j);
            if (!is_zero_vec(col)) rep.add("deform_twist", {s, j}, col);
        }

        for (int u = 0; u < m; ++u)
            for (int v = 0; v < m; ++v) {
                Vec lhs = zero_vec(n, f);
                for (int i = 0; i <= s; ++i)
                    lhs = add_vec(lhs, bracket2(c.H, tu[i][u], tu[s - i][v]));
                Vec rhs = zero_vec(n, f);
                for (int i = 0; i <= s; ++i) {
                    Vec inner = sub_vec(rho_of(c.R.rho, tu[s - i][u]).column(v),
                                        rho_of(c.R.rho, tu[s - i][v]).column(u));
                    rhs = add_vec(rhs, d.coeffs[i].apply(inner));
                }
                for (int i = 0; i <= s; ++i)
                    for (int j = 0; i + j <= s; ++j) {
                        int k = s - i - j;
                        rhs = add_vec(rhs,
                                      d.coeffs[i].apply(tensor_eval(c.pair.F, {tu[j][u], tu[k][v]})));
                    }
                Vec r = sub_vec(lhs, rhs);
                if (!is_zero_vec(r)) rep.add("deform_binary", {s, u, v}, r);
            }

        for (int u = 0; u < m; ++u)
            for (int v = 0; v < m; ++v)
                for (int w = 0; w < m; ++w) {
                    Vec lhs = zero_vec(n, f);
                    for (int i = 0; i <= s; ++i)
                        for (int j = 0; i + j <= s; ++j)
                            lhs = add_vec(lhs,
                                          bracket3(c.H, tu[i][u], tu[j][v], tu[s - i - j][w]));
                    Vec rhs = zero_vec(n, f);
                    for (int i = 0; i <= s; ++i)
                        for (int j = 0; i + j <= s; ++j) {
                            int k = s - i - j;
                            Vec inner = bilinear_of(dfam, n, tu[j][u], tu[k][v]).column(w);
                            inner = add_vec(inner, theta_of(c.R, tu[j][v], tu[k][w]).column(u));
                            inner = sub_vec(inner, theta_of(c.R, tu[j][u], tu[k][w]).column(v));
                            rhs = add_vec(rhs, d.coeffs[i].apply(inner));
                        }
                    for (int i = 0; i <= s; ++i)
                        for (int j = 0; i + j <= s; ++j)
                            for (int k = 0; i + j + k <= s; ++k) {
                                int l = s - i - j - k;
                                rhs = add_vec(rhs, d.coeffs[i].apply(tensor_eval(
                                                       c.pair.G, {tu[j][u], tu[k][v], tu[l][w]})));
                            }
                    Vec r = sub_vec(lhs, rhs);
                    if (!is_zero_vec(r)) rep.add("deform_ternary", {s, u, v, w}, r);
                }
    }
    return rep;
}

Matrix cochain_to_matrix(const Tensor& f) {
    if (f.arity != 1) throw DimensionError("cochain_to_matrix: expected arity 1");
    Matrix m(f.out_dim, f.in_dim, f.field);
    for (int j = 0; j < f.in_dim; ++j) {
        Vec col = f.value_at({j});
        for (int r = 0; r < f.out_dim; ++r) m.at(r, j) = col[r];
    }
    return m;
}

Tensor matrix_to_cochain(const Matrix& m) {
    Tensor f(1, m.cols, m.rows, m.field);
    for (int j = 0; j < m.cols; ++j)
        for (int r = 0; r < m.rows; ++r) f.at({j}, r) = m.at(r, j);
    return f;
}

InfinitesimalCheck infinitesimal_is_cocycle(const TruncatedDeformation& d) {
    if (d.order < 1) throw EngineError("infinitesimal_is_cocycle: deformation has no order-1 term");
    {
        // verified through order 1 first
        TruncatedDeformation head = d;
        head.order = 1;
        head.coeffs.resize(2, Matrix(d.ctx.H.dim, d.ctx.R.carrier_dim, d.ctx.H.binary.field));
        IdentityReport rep = verify_deformation(head);
        if (!rep.ok())
            throw PreconditionError("infinitesimal_is_cocycle: not a deformation through order 1", rep);
    }
    TwistedComplex tc = twisted_complex(d.coeffs[0], d.ctx);
    auto [r2, r3] = coboundary_deg1(matrix_to_cochain(d.coeffs[1]), tc.v_alg, tc.a_coeffs);
    InfinitesimalCheck out;
    out.residual2 = r2;
    out.residual3 = r3;
    out.cocycle = r2.is_zero() && r3.is_zero();
    return out;
}

EquivalenceMaps assemble_equivalence(const EquivalencePair& pair, const TruncatedDeformation& d) {
    const TwistedContext& c = d.ctx;
    const int n = c.H.dim, m = c.R.carrier_dim;
    const Field f = c.H.binary.field;
    const Matrix& T = d.coeffs[0];

    EquivalenceMaps maps;
    maps.phi.push_back(Matrix::identity(n, f));
    maps.psi.push_back(Matrix::identity(m, f));

    // order 1: phi_1 = <chi, ->, psi_1 = D(chi)(-) + G(chi, T -)
    Matrix phi1(n, n, f);
    for (int j = 0; j < n; ++j) {
        Vec col = bracket3(c.H, pair.chi1, pair.chi2, basis_vec(n, j, f));
        for (int r = 0; r < n; ++r) phi1.at(r, j) = col[r];
    }
    const std::vector<Matrix> dfam = d_map(c.R, c.H.alpha, c.H.binary);
    Matrix psi1 = bilinear_of(dfam, n, pair.chi1, pair.chi2);
    for (int j = 0; j < m; ++j) {
        Vec gcol = tensor_eval(c.pair.G, {pair.chi1, pair.chi2, T.column(j)});
        for (int r = 0; r < m; ++r) psi1.at(r, j) += gcol[r];
    }
    maps.phi.push_back(std::move(phi1));
    maps.psi.push_back(std::move(psi1));

    for (int s = 2; s <= d.order; ++s) {
        maps.phi.push_back(int(pair.phi_extras.size()) >= s - 1 ? pair.phi_extras[s - 2]
                                                                : Matrix(n, n, f));
        maps.psi.push_back(int(pair.psi_extras.size()) >= s - 1 ? pair.psi_extras[s - 2]
                                                                : Matrix(m, m, f));
    }
    return maps;
}

IdentityReport verify_equivalence(const TruncatedDeformation& a, const TruncatedDeformation& b,
                                  const EquivalencePair& pair, int cap) {
    if (a.order != b.order) throw EngineError("verify_equivalence: truncation orders differ");
    IdentityReport rep;
    rep.cap = cap;
    const TwistedContext& c = a.ctx;
    const int n = c.H.dim, m = c.R.carrier_dim;
    const Field f = c.H.binary.field;
    EquivalenceMaps maps = assemble_equivalence(pair, a);
    const int N = a.order;

    auto add_matrix_failure = [&](const std::string& name, int s, const Matrix& diff) {
        for (int j = 0; j < diff.cols; ++j) {
            Vec col = diff.column(j);
            if (!is_zero_vec(col)) rep.add(name, {s, j}, col);
        }
    };

    for (int s = 0; s <= N; ++s) {
        add_matrix_failure("equiv_phi_alpha", s,
                           sub_mat(compose_linear(maps.phi[s], c.H.alpha),
                                   compose_linear(c.H.alpha, maps.phi[s])));
        add_matrix_failure("equiv_psi_beta", s,
                           sub_mat(compose_linear(maps.psi[s], c.R.beta),
                                   compose_linear(c.R.beta, maps.psi[s])));

        // phi_t is an algebra morphism, order by order
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                Vec lhs = maps.phi[s].apply(c.H.binary.value_at({x, y}));
                Vec rhs = zero_vec(n, f);
                for (int i = 0; i <= s; ++i)
                    rhs = add_vec(rhs, bracket2(c.H, maps.phi[i].column(x), maps.phi[s - i].column(y)));
                Vec r = sub_vec(lhs, rhs);
                if (!is_zero_vec(r)) rep.add("equiv_phi_binary", {s, x, y}, r);
            }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    Vec lhs = maps.phi[s].apply(c.H.ternary.value_at({x, y, z}));
                    Vec rhs = zero_vec(n, f);
                    for (int i = 0; i <= s; ++i)
                        for (int j = 0; i + j <= s; ++j)
                            rhs = add_vec(rhs, bracket3(c.H, maps.phi[i].column(x),
                                                        maps.phi[j].column(y),
                                                        maps.phi[s - i - j].column(z)));
                    Vec r = sub_vec(lhs, rhs);
                    if (!is_zero_vec(r)) rep.add("equiv_phi_ternary", {s, x, y, z}, r);
                }

        // action lines: psi_t rho(x) = rho(phi_t x) psi_t and the theta analogue
        for (int x = 0; x < n; ++x) {
            Matrix lhs = compose_linear(maps.psi[s], c.R.rho[x]);
            Matrix rhs(m, m, f);
            for (int i = 0; i <= s; ++i)
                rhs = add_mat(rhs, compose_linear(rho_of(c.R.rho, maps.phi[i].column(x)),
                                                  maps.psi[s - i]));
            add_matrix_failure("equiv_rho", s, sub_mat(lhs, rhs));
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                Matrix lhs = compose_linear(maps.psi[s], c.R.theta_at(x, y));
                Matrix rhs(m, m, f);
                for (int i = 0; i <= s; ++i)
                    for (int j = 0; i + j <= s; ++j)
                        rhs = add_mat(rhs, compose_linear(theta_of(c.R, maps.phi[i].column(x),
                                                                   maps.phi[j].column(y)),
                                                          maps.psi[s - i - j]));
                add_matrix_failure("equiv_theta", s, sub_mat(lhs, rhs));
            }

        // intertwining convolution: sum T_i psi_j = sum phi_i T'_j
        Matrix lhs(n, m, f), rhs(n, m, f);
        for (int i = 0; i <= s; ++i) {
            lhs = add_mat(lhs, compose_linear(a.coeffs[i], maps.psi[s - i]));
            rhs = add_mat(rhs, compose_linear(maps.phi[i], b.coeffs[s - i]));
        }
        add_matrix_failure("equiv_intertwine", s, sub_mat(lhs, rhs));
    }
    return rep;
}

Tensor partial_t_wedge(const Vec& wedge, const Matrix& T, const TwistedContext& c) {
    const int n = c.H.dim, m = c.R.carrier_dim;
    Tensor out(1, m, n, T.field);
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx) {
            if (wedge[idx].is_zero()) continue;
            Tensor part = partial_t(basis_vec(n, i, T.field), basis_vec(n, j, T.field), T, c);
            out = add_tensor(out, scale_tensor(wedge[idx], part));
        }
    return out;
}

SameClassResult same_class_check(const Matrix& T1, const Matrix& T1p, const Matrix& T,
                                 const TwistedContext& c) {
    const int n = c.H.dim, m = c.R.carrier_dim;
    TwistedComplex tc = twisted_complex(T, c);
    for (const Matrix* cand : {&T1, &T1p}) {
        auto [r2, r3] = coboundary_deg1(matrix_to_cochain(*cand), tc.v_alg, tc.a_coeffs);
        if (!r2.is_zero() || !r3.is_zero())
            throw EngineError("same_class_check: input is not a twisted-complex 1-cocycle");
    }

    const int wedge_dim = n * (n - 1) / 2;
    std::vector<Vec> cols;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Tensor part = partial_t(basis_vec(n, i, T.field), basis_vec(n, j, T.field), T, c);
            cols.push_back(tensor_coords(part));
        }
    Matrix system = from_columns(cols, m * n, T.field);
    Vec target = tensor_coords(matrix_to_cochain(sub_mat(T1p, T1)));

    SameClassResult out;
    std::optional<Vec> sol = solve(system, target);
    if (sol.has_value()) {
        out.same = true;
        out.witness = *sol;
    } else {
        out.same = false;
        out.witness = zero_vec(wedge_dim, T.field);
        out.residual = target;
    }
    return out;
}

}  // namespace hly
