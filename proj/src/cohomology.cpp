#include "hly/cohomology.hpp"

#include <functional>
#include <map>

namespace hly {

namespace {

// slot pairs (0,1), (2,3), ... carrying the skew condition
std::vector<int> pair_starts(int n) {
    std::vector<int> p;
    for (int s = 0; s + 1 < n; s += 2) p.push_back(s);
    return p;
}

// canonicalize a tuple under the pairwise skew relations;
// returns sign 0 if the value is forced to zero
int canonical_sign(std::vector<int>& t, const std::vector<int>& pairs) {
    int sign = 1;
    for (int p : pairs) {
        if (t[p] == t[p + 1]) return 0;
        if (t[p] > t[p + 1]) {
            std::swap(t[p], t[p + 1]);
            sign = -sign;
        }
    }
    return sign;
}

// operator families evaluated at the twisted basis vectors the coboundary
// formulas need; built once per level
struct CoeffOps {
    std::vector<Vec> a1, a2, a2n, a2nm1;
    std::vector<Matrix> rho_a2n;
    std::vector<Matrix> theta_a2n;   // index i*dim+j
    std::vector<Matrix> d_a2nm1;
    std::vector<Matrix> d_a2n;
};

CoeffOps build_ops(int n, const HLYAlgebra& H, const HLYRep& R) {
    CoeffOps ops;
    const int d = H.dim;
    Matrix alpha2 = compose_linear(H.alpha, H.alpha);
    Matrix a2n = mat_power(H.alpha, 2 * n);
    Matrix a2nm1 = mat_power(H.alpha, 2 * n - 1);
    const std::vector<Matrix> dfam = d_map(R, H.alpha, H.binary);
    for (int i = 0; i < d; ++i) {
        ops.a1.push_back(H.alpha.column(i));
        ops.a2.push_back(alpha2.column(i));
        ops.a2n.push_back(a2n.column(i));
        ops.a2nm1.push_back(a2nm1.column(i));
    }
    for (int i = 0; i < d; ++i) ops.rho_a2n.push_back(rho_of(R.rho, ops.a2n[i]));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            ops.theta_a2n.push_back(theta_of(R, ops.a2n[i], ops.a2n[j]));
            ops.d_a2nm1.push_back(bilinear_of(dfam, d, ops.a2nm1[i], ops.a2nm1[j]));
            ops.d_a2n.push_back(bilinear_of(dfam, d, ops.a2n[i], ops.a2n[j]));
        }
    return ops;
}

}  // namespace

Vec tensor_coords(const Tensor& t) { return t.entries; }

CochainSpace cochain_basis(int n, const HLYAlgebra& H, const HLYRep& R, int n_cap) {
    if (n < 1) throw EngineError("cochain_basis: arity must be at least 1");
    if (n > n_cap)
        throw EngineError("cochain_basis: arity " + std::to_string(n) + " exceeds the cap " +
                          std::to_string(n_cap));
    const int dimA = H.dim, dimV = R.carrier_dim;
    const Field f = H.binary.field;
    const std::vector<int> pairs = pair_starts(n);

    CochainSpace space;
    space.n = n;

    std::map<std::vector<int>, int> tuple_index;
    for_each_tuple(n, dimA, [&](const std::vector<int>& t) {
        std::vector<int> c = t;
        if (canonical_sign(c, pairs) != 0 && c == t) {
            tuple_index[t] = int(space.canonical.size());
            space.canonical.push_back(t);
        }
    });

    const int ncols = int(space.canonical.size()) * dimV;
    auto col_of = [&](const std::vector<int>& t, int m) { return tuple_index.at(t) * dimV + m; };

    // equivariance rows at canonical tuples: f(a x_1,...,a x_n) = b f(x);
    // rows at non-canonical tuples are sign multiples of these
    std::vector<Vec> rows;
    for (const auto& t : space.canonical) {
        for (int m = 0; m < dimV; ++m) {
            Vec row = zero_vec(ncols, f);
            std::vector<int> s(n, 0);
            std::function<void(int, const Scalar&)> rec = [&](int slot, const Scalar& coeff) {
                if (coeff.is_zero()) return;
                if (slot == n) {
                    std::vector<int> c = s;
                    int sign = canonical_sign(c, pairs);
                    if (sign == 0) return;
                    Scalar v = coeff;
                    if (sign < 0) v = -v;
                    row[col_of(c, m)] += v;
                    return;
                }
                for (int i = 0; i < dimA; ++i)
                    if (!H.alpha.at(i, t[slot]).is_zero()) {
                        s[slot] = i;
                        rec(slot + 1, coeff * H.alpha.at(i, t[slot]));
                    }
            };
            rec(0, Scalar::one(f));
            for (int m2 = 0; m2 < dimV; ++m2)
                if (!R.beta.at(m, m2).is_zero()) row[col_of(t, m2)] -= R.beta.at(m, m2);
            rows.push_back(std::move(row));
        }
    }

    space.constraints = Matrix(int(rows.size()), ncols, f);
    for (int r = 0; r < int(rows.size()); ++r)
        for (int c = 0; c < ncols; ++c) space.constraints.at(r, c) = rows[r][c];

    for (const Vec& k : kernel_basis(space.constraints)) {
        Tensor b(n, dimA, dimV, f);
        for_each_tuple(n, dimA, [&](const std::vector<int>& t) {
            std::vector<int> c = t;
            int sign = canonical_sign(c, pairs);
            if (sign == 0) return;
            for (int m = 0; m < dimV; ++m) {
                Scalar v = k[col_of(c, m)];
                if (sign < 0) v = -v;
                b.at(t, m) = v;
            }
        });
        space.basis.push_back(std::move(b));
    }
    space.dim = int(space.basis.size());
    return space;
}

IdentityReport verify_cochain_membership(const Tensor& f, const HLYAlgebra& H, const HLYRep& R,
                                         int cap) {
    if (f.in_dim != H.dim || f.out_dim != R.carrier_dim)
        throw DimensionError("cochain membership: tensor shape does not match algebra/carrier");
    IdentityReport rep;
    rep.cap = cap;
    const std::vector<int> pairs = pair_starts(f.arity);

    for_each_tuple(f.arity, f.in_dim, [&](const std::vector<int>& t) {
        for (int p : pairs) {
            if (t[p] > t[p + 1]) continue;
            if (t[p] == t[p + 1]) {
                Vec v = f.value_at(t);
                if (!is_zero_vec(v)) rep.add("cochain_skew", t, v);
            } else {
                std::vector<int> s = t;
                std::swap(s[p], s[p + 1]);
                Vec v = add_vec(f.value_at(t), f.value_at(s));
                if (!is_zero_vec(v)) rep.add("cochain_skew", t, v);
            }
        }
    });

    std::vector<Vec> acol;
    for (int i = 0; i < H.dim; ++i) acol.push_back(H.alpha.column(i));
    for_each_tuple(f.arity, f.in_dim, [&](const std::vector<int>& t) {
        std::vector<Vec> args;
        for (int s : t) args.push_back(acol[s]);
        Vec lhs = tensor_eval(f, args);
        Vec rhs = R.beta.apply(f.value_at(t));
        Vec r = sub_vec(lhs, rhs);
        if (!is_zero_vec(r)) rep.add("cochain_equivariance", t, r);
    });
    return rep;
}

std::pair<Tensor, Tensor> coboundary_deg1(const Tensor& f, const HLYAlgebra& H, const HLYRep& R) {
    if (f.arity != 1) throw DimensionError("coboundary_deg1: expected a 1-cochain");
    IdentityReport member = verify_cochain_membership(f, H, R);
    if (!member.ok()) throw PreconditionError("coboundary_deg1: not a 1-cochain", member);
    const int d = H.dim;
    const std::vector<Matrix> dfam = d_map(R, H.alpha, H.binary);

    Tensor F2 = Tensor::from_basis_map(2, d, R.carrier_dim, f.field, [&](const std::vector<int>& t) {
        Vec v = R.rho[t[0]].apply(f.value_at({t[1]}));
        v = sub_vec(v, R.rho[t[1]].apply(f.value_at({t[0]})));
        v = sub_vec(v, tensor_eval(f, {H.binary.value_at({t[0], t[1]})}));
        return v;
    });
    Tensor G3 = Tensor::from_basis_map(3, d, R.carrier_dim, f.field, [&](const std::vector<int>& t) {
        Vec v = dfam[size_t(t[0]) * d + t[1]].apply(f.value_at({t[2]}));
        v = add_vec(v, R.theta_at(t[1], t[2]).apply(f.value_at({t[0]})));
        v = sub_vec(v, R.theta_at(t[0], t[2]).apply(f.value_at({t[1]})));
        v = sub_vec(v, tensor_eval(f, {H.ternary.value_at({t[0], t[1], t[2]})}));
        return v;
    });
    return {F2, G3};
}

std::pair<Tensor, Tensor> coboundary(int n, const Tensor& F, const Tensor& G, const HLYAlgebra& H,
                                     const HLYRep& R) {
    if (n < 1) throw EngineError("coboundary: level must be at least 1");
    if (F.arity != 2 * n || G.arity != 2 * n + 1)
        throw DimensionError("coboundary: expected arities (2n, 2n+1)");
    const int d = H.dim, dv = R.carrier_dim;
    const Field fl = F.field;
    CoeffOps ops = build_ops(n, H, R);

    const int N1 = 2 * n + 2, N2 = 2 * n + 3;
    Tensor out1(N1, d, dv, fl), out2(N2, d, dv, fl);

    auto sign_of = [](int exponent) { return exponent % 2 == 0 ? 1 : -1; };

    // cached zero flags and substituted bracket values keep the inner loops
    // allocation-free
    std::vector<bool> rho_zero(d), theta_zero(size_t(d) * d), d1_zero(size_t(d) * d),
        d2_zero(size_t(d) * d);
    for (int i = 0; i < d; ++i) rho_zero[i] = ops.rho_a2n[i].is_zero();
    for (size_t i = 0; i < ops.theta_a2n.size(); ++i) {
        theta_zero[i] = ops.theta_a2n[i].is_zero();
        d1_zero[i] = ops.d_a2nm1[i].is_zero();
        d2_zero[i] = ops.d_a2n[i].is_zero();
    }
    std::vector<Vec> bin_val(size_t(d) * d);
    std::vector<Vec> ter_val(size_t(d) * d * d);
    std::vector<bool> ter_zero(size_t(d) * d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            bin_val[size_t(i) * d + j] = H.binary.value_at({i, j});
            for (int k = 0; k < d; ++k) {
                Vec v = H.ternary.value_at({i, j, k});
                ter_zero[(size_t(i) * d + j) * d + k] = is_zero_vec(v);
                ter_val[(size_t(i) * d + j) * d + k] = std::move(v);
            }
        }
    const bool f_zero = F.is_zero(), g_zero = G.is_zero();

    std::vector<const Vec*> args;
    std::vector<int> scratch;
    scratch.reserve(N2);

    // first block: lands in C^{2n+2}
    for_each_tuple(N1, d, [&](const std::vector<int>& t) {
        Vec val = zero_vec(dv, fl);

        if (!g_zero) {
            // rho(a^{2n} x_{2n+1}) G(x_1..x_{2n}, x_{2n+2})
            //   - rho(a^{2n} x_{2n+2}) G(x_1..x_{2n+1})
            if (!rho_zero[t[N1 - 2]]) {
                scratch.assign(t.begin(), t.begin() + 2 * n);
                scratch.push_back(t[N1 - 1]);
                mat_apply_acc(ops.rho_a2n[t[N1 - 2]], &G.entries[G.flat(scratch, 0)], +1, val);
            }
            if (!rho_zero[t[N1 - 1]]) {
                scratch.assign(t.begin(), t.begin() + 2 * n + 1);
                mat_apply_acc(ops.rho_a2n[t[N1 - 1]], &G.entries[G.flat(scratch, 0)], -1, val);
            }
            // - G(a x_1, ..., a x_{2n}, [x_{2n+1}, x_{2n+2}])
            const Vec& br = bin_val[size_t(t[N1 - 2]) * d + t[N1 - 1]];
            if (!is_zero_vec(br)) {
                args.clear();
                for (int s = 0; s < 2 * n; ++s) args.push_back(&ops.a1[t[s]]);
                args.push_back(&br);
                tensor_eval_acc(G, args, -1, val);
            }
        }

        if (!f_zero) {
            for (int k = 1; k <= n; ++k) {
                // (-1)^{n+k+1} D(a^{2n-1} x_{2k-1}, a^{2n-1} x_{2k}) F(..hats..)
                size_t dk = size_t(t[2 * k - 2]) * d + t[2 * k - 1];
                if (!d1_zero[dk]) {
                    scratch.clear();
                    for (int s = 0; s < N1; ++s)
                        if (s != 2 * k - 2 && s != 2 * k - 1) scratch.push_back(t[s]);
                    mat_apply_acc(ops.d_a2nm1[dk], &F.entries[F.flat(scratch, 0)],
                                  sign_of(n + k + 1), val);
                }
                // (-1)^{n+k} F(a^2 ..., <x_{2k-1}, x_{2k}, x_j>, ..., a^2 ...)
                for (int j = 2 * k; j < N1; ++j) {
                    const size_t ter_idx = dk * d + t[j];
                    if (ter_zero[ter_idx]) continue;
                    args.clear();
                    for (int s = 0; s < N1; ++s) {
                        if (s == 2 * k - 2 || s == 2 * k - 1) continue;
                        args.push_back(s == j ? &ter_val[ter_idx] : &ops.a2[t[s]]);
                    }
                    tensor_eval_acc(F, args, sign_of(n + k), val);
                }
            }
        }
        for (int m = 0; m < dv; ++m) out1.at(t, m) = val[m];
    });

    // second block: lands in C^{2n+3}
    for_each_tuple(N2, d, [&](const std::vector<int>& t) {
        Vec val = zero_vec(dv, fl);
        if (g_zero) {
            for (int m = 0; m < dv; ++m) out2.at(t, m) = val[m];
            return;
        }

        // theta(a^{2n} x_{2n+2}, a^{2n} x_{2n+3}) G(x_1..x_{2n+1})
        //   - theta(a^{2n} x_{2n+1}, a^{2n} x_{2n+3}) G(x_1..x_{2n}, x_{2n+2})
        if (!theta_zero[size_t(t[N2 - 2]) * d + t[N2 - 1]]) {
            scratch.assign(t.begin(), t.begin() + 2 * n + 1);
            mat_apply_acc(ops.theta_a2n[size_t(t[N2 - 2]) * d + t[N2 - 1]],
                          &G.entries[G.flat(scratch, 0)], +1, val);
        }
        if (!theta_zero[size_t(t[N2 - 3]) * d + t[N2 - 1]]) {
            scratch.assign(t.begin(), t.begin() + 2 * n);
            scratch.push_back(t[N2 - 2]);
            mat_apply_acc(ops.theta_a2n[size_t(t[N2 - 3]) * d + t[N2 - 1]],
                          &G.entries[G.flat(scratch, 0)], -1, val);
        }

        for (int k = 1; k <= n + 1; ++k) {
            size_t dk = size_t(t[2 * k - 2]) * d + t[2 * k - 1];
            if (!d2_zero[dk]) {
                scratch.clear();
                for (int s = 0; s < N2; ++s)
                    if (s != 2 * k - 2 && s != 2 * k - 1) scratch.push_back(t[s]);
                mat_apply_acc(ops.d_a2n[dk], &G.entries[G.flat(scratch, 0)], sign_of(n + k + 1),
                              val);
            }
            for (int j = 2 * k; j < N2; ++j) {
                const size_t ter_idx = dk * d + t[j];
                if (ter_zero[ter_idx]) continue;
                args.clear();
                for (int s = 0; s < N2; ++s) {
                    if (s == 2 * k - 2 || s == 2 * k - 1) continue;
                    args.push_back(s == j ? &ter_val[ter_idx] : &ops.a2[t[s]]);
                }
                tensor_eval_acc(G, args, sign_of(n + k), val);
            }
        }
        for (int m = 0; m < dv; ++m) out2.at(t, m) = val[m];
    });

    return {out1, out2};
}

IdentityReport verify_2cocycle_hom_lie(const Tensor& F, const HomLieAlgebra& L, const HomLieRep& R,
                                       int cap) {
    if (F.arity != 2 || F.in_dim != L.dim || F.out_dim != R.carrier_dim)
        throw DimensionError("verify_2cocycle_hom_lie: F must be a (2, dimA, dimV) tensor");
    IdentityReport rep;
    rep.cap = cap;
    const int d = L.dim;

    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec r = add_vec(F.value_at({i, j}), F.value_at({j, i}));
            if (!is_zero_vec(r)) rep.add("f_skew", {i, j}, r);
        }

    std::vector<Vec> acol;
    std::vector<Matrix> rho_a;
    for (int i = 0; i < d; ++i) {
        acol.push_back(L.alpha.column(i));
        rho_a.push_back(rho_of(R.rho, acol[i]));
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec r = sub_vec(tensor_eval(F, {acol[i], acol[j]}), R.beta.apply(F.value_at({i, j})));
            if (!is_zero_vec(r)) rep.add("f_equivariance", {i, j}, r);
        }

    auto cyc_term = [&](int x, int y, int z) {
        Vec v = rho_a[x].apply(F.value_at({y, z}));
        v = add_vec(v, tensor_eval(F, {acol[x], L.bracket.value_at({y, z})}));
        return v;
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Vec r = cyc_term(i, j, k);
                r = add_vec(r, cyc_term(j, k, i));
                r = add_vec(r, cyc_term(k, i, j));
                if (!is_zero_vec(r)) rep.add("hom_lie_2cocycle", {i, j, k}, r);
            }
    return rep;
}

CocyclePair make_cocycle_pair(Tensor F, Tensor G, const HLYAlgebra& H, const HLYRep& R) {
    if (F.arity != 2 || G.arity != 3) throw DimensionError("cocycle pair: arities must be (2,3)");
    IdentityReport mf = verify_cochain_membership(F, H, R);
    if (!mf.ok()) throw PreconditionError("cocycle pair: F is not a 2-cochain", mf);
    IdentityReport mg = verify_cochain_membership(G, H, R);
    if (!mg.ok()) throw PreconditionError("cocycle pair: G is not a 3-cochain", mg);
    return CocyclePair{std::move(F), std::move(G)};
}

IdentityReport verify_23cocycle(const CocyclePair& p, const HLYAlgebra& H, const HLYRep& R, int cap) {
    IdentityReport rep;
    rep.cap = cap;
    {
        IdentityReport mf = verify_cochain_membership(p.F, H, R, cap);
        for (const auto& f : mf.failures) rep.add("F_" + f.identity, f.where, f.residual);
        IdentityReport mg = verify_cochain_membership(p.G, H, R, cap);
        for (const auto& f : mg.failures) rep.add("G_" + f.identity, f.where, f.residual);
    }
    const int d = H.dim;
    Matrix alpha2 = compose_linear(H.alpha, H.alpha);
    const std::vector<Matrix> dfam = d_map(R, H.alpha, H.binary);

    std::vector<Vec> acol, a2col;
    for (int i = 0; i < d; ++i) {
        acol.push_back(H.alpha.column(i));
        a2col.push_back(alpha2.column(i));
    }
    std::vector<Matrix> rho_a, rho_a2, theta_a, d_a, theta_a2, d_a2;
    for (int i = 0; i < d; ++i) {
        rho_a.push_back(rho_of(R.rho, acol[i]));
        rho_a2.push_back(rho_of(R.rho, a2col[i]));
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            theta_a.push_back(theta_of(R, acol[i], acol[j]));
            d_a.push_back(bilinear_of(dfam, d, acol[i], acol[j]));
            theta_a2.push_back(theta_of(R, a2col[i], a2col[j]));
            d_a2.push_back(bilinear_of(dfam, d, a2col[i], a2col[j]));
        }
    auto br2 = [&](int i, int j) { return H.binary.value_at({i, j}); };
    auto br3 = [&](int i, int j, int k) { return H.ternary.value_at({i, j, k}); };

    // cocycle1 (arity 3): cyc ( F([x,y], a z) - rho(a x) F(y,z) + G(x,y,z) ) = 0
    auto c1_term = [&](int x, int y, int z) {
        Vec v = tensor_eval(p.F, {br2(x, y), acol[z]});
        v = sub_vec(v, rho_a[x].apply(p.F.value_at({y, z})));
        v = add_vec(v, p.G.value_at({x, y, z}));
        return v;
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Vec r = add_vec(add_vec(c1_term(i, j, k), c1_term(j, k, i)), c1_term(k, i, j));
                if (!is_zero_vec(r)) rep.add("cocycle1", {i, j, k}, r);
            }

    // cocycle2 (arity 4): cyc_{x,y,z} ( theta(a x, a t) F(y,z) + G([x,y], a z, a t) ) = 0
    auto c2_term = [&](int x, int y, int z, int t) {
        Vec v = theta_a[size_t(x) * d + t].apply(p.F.value_at({y, z}));
        v = add_vec(v, tensor_eval(p.G, {br2(x, y), acol[z], acol[t]}));
        return v;
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    Vec r = add_vec(add_vec(c2_term(i, j, k, l), c2_term(j, k, i, l)),
                                    c2_term(k, i, j, l));
                    if (!is_zero_vec(r)) rep.add("cocycle2", {i, j, k, l}, r);
                }

    // cocycle3 (arity 4):
    // D(ax,ay) F(z,t) + rho(a^2 t) G(x,y,z) - F(<x,y,z>, a^2 t)
    //   + G(ax, ay, [z,t]) - rho(a^2 z) G(x,y,t) - F(a^2 z, <x,y,t>) = 0
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    Vec r = d_a[size_t(i) * d + j].apply(p.F.value_at({k, l}));
                    r = add_vec(r, rho_a2[l].apply(p.G.value_at({i, j, k})));
                    r = sub_vec(r, tensor_eval(p.F, {br3(i, j, k), a2col[l]}));
                    r = add_vec(r, tensor_eval(p.G, {acol[i], acol[j], br2(k, l)}));
                    r = sub_vec(r, rho_a2[k].apply(p.G.value_at({i, j, l})));
                    r = sub_vec(r, tensor_eval(p.F, {a2col[k], br3(i, j, l)}));
                    if (!is_zero_vec(r)) rep.add("cocycle3", {i, j, k, l}, r);
                }

    // cocycle4 (arity 5):
    // theta(a^2 x4, a^2 z) G(x1,x2,x3) - theta(a^2 x3, a^2 z) G(x1,x2,x4)
    //   + D(a^2 x1, a^2 x2) G(x3,x4,z) - D(a^2 x3, a^2 x4) G(x1,x2,z)
    //   - G(<x1,x2,x3>, a^2 x4, a^2 z) - G(a^2 x3, <x1,x2,x4>, a^2 z)
    //   + G(a^2 x1, a^2 x2, <x3,x4,z>) - G(a^2 x3, a^2 x4, <x1,x2,z>) = 0
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    for (int z = 0; z < d; ++z) {
                        Vec r = theta_a2[size_t(l) * d + z].apply(p.G.value_at({i, j, k}));
                        r = sub_vec(r, theta_a2[size_t(k) * d + z].apply(p.G.value_at({i, j, l})));
                        r = add_vec(r, d_a2[size_t(i) * d + j].apply(p.G.value_at({k, l, z})));
                        r = sub_vec(r, d_a2[size_t(k) * d + l].apply(p.G.value_at({i, j, z})));
                        r = sub_vec(r, tensor_eval(p.G, {br3(i, j, k), a2col[l], a2col[z]}));
                        r = sub_vec(r, tensor_eval(p.G, {a2col[k], br3(i, j, l), a2col[z]}));
                        r = add_vec(r, tensor_eval(p.G, {a2col[i], a2col[j], br3(k, l, z)}));
                        r = sub_vec(r, tensor_eval(p.G, {a2col[k], a2col[l], br3(i, j, z)}));
                        if (!is_zero_vec(r)) rep.add("cocycle4", {i, j, k, l, z}, r);
                    }
    return rep;
}

Tensor g_from_f(const Tensor& F, const HomLieAlgebra& L, const HomLieRep& R) {
    IdentityReport ok = verify_2cocycle_hom_lie(F, L, R);
    if (!ok.ok()) throw PreconditionError("g_from_f: F is not a Hom-Lie 2-cocycle", ok);
    std::vector<Vec> acol;
    std::vector<Matrix> rho_a;
    for (int i = 0; i < L.dim; ++i) {
        acol.push_back(L.alpha.column(i));
        rho_a.push_back(rho_of(R.rho, acol[i]));
    }
    return Tensor::from_basis_map(3, L.dim, R.carrier_dim, F.field, [&](const std::vector<int>& t) {
        Vec v = tensor_eval(F, {L.bracket.value_at({t[0], t[1]}), acol[t[2]]});
        v = sub_vec(v, rho_a[t[2]].apply(F.value_at({t[0], t[1]})));
        return v;
    });
}

namespace {

// columns of the outgoing coboundary over a basis of the level
Matrix delta_out_matrix(int level, const std::vector<Tensor>& basis2,
                        const std::vector<Tensor>& basis3, const HLYAlgebra& H, const HLYRep& R) {
    std::vector<Vec> cols;
    const int d = H.dim, dv = R.carrier_dim;
    Tensor zero2(2 * level, d, dv, H.binary.field), zero3(2 * level + 1, d, dv, H.binary.field);
    for (const Tensor& b : basis2) {
        auto [o1, o2] = coboundary(level, b, zero3, H, R);
        cols.push_back(concat_vec(tensor_coords(o1), tensor_coords(o2)));
    }
    for (const Tensor& b : basis3) {
        auto [o1, o2] = coboundary(level, zero2, b, H, R);
        cols.push_back(concat_vec(tensor_coords(o1), tensor_coords(o2)));
    }
    int nrows = cols.empty() ? 0 : int(cols[0].size());
    return from_columns(cols, nrows, H.binary.field);
}

}  // namespace

CohomologyDims cohomology_dims(int level, const HLYAlgebra& H, const HLYRep& R, int n_cap) {
    CohomologyDims out;
    out.level = level;
    if (level == 0) {
        CochainSpace c1 = cochain_basis(1, H, R, n_cap);
        out.dim_c = c1.dim;
        std::vector<Vec> cols;
        for (const Tensor& b : c1.basis) {
            auto [o1, o2] = coboundary_deg1(b, H, R);
            cols.push_back(concat_vec(tensor_coords(o1), tensor_coords(o2)));
        }
        Matrix m = from_columns(cols, cols.empty() ? 0 : int(cols[0].size()), H.binary.field);
        out.dim_z = out.dim_c - rank(m);
        out.dim_b = 0;
        out.dim_h = out.dim_z;
        return out;
    }
    if (2 * level + 1 > n_cap)
        throw EngineError("cohomology_dims: level " + std::to_string(level) + " exceeds the cap");

    CochainSpace c2 = cochain_basis(2 * level, H, R, n_cap);
    CochainSpace c3 = cochain_basis(2 * level + 1, H, R, n_cap);
    out.dim_c = c2.dim + c3.dim;

    Matrix dout = delta_out_matrix(level, c2.basis, c3.basis, H, R);
    out.dim_z = out.dim_c - rank(dout);

    std::vector<Vec> cols;
    if (level == 1) {
        CochainSpace c1 = cochain_basis(1, H, R, n_cap);
        for (const Tensor& b : c1.basis) {
            auto [o1, o2] = coboundary_deg1(b, H, R);
            cols.push_back(concat_vec(tensor_coords(o1), tensor_coords(o2)));
        }
    } else {
        CochainSpace p2 = cochain_basis(2 * (level - 1), H, R, n_cap);
        CochainSpace p3 = cochain_basis(2 * (level - 1) + 1, H, R, n_cap);
        Matrix prev = delta_out_matrix(level - 1, p2.basis, p3.basis, H, R);
        for (int c = 0; c < prev.cols; ++c) cols.push_back(prev.column(c));
    }
    Matrix din = from_columns(cols, cols.empty() ? 0 : int(cols[0].size()), H.binary.field);
    out.dim_b = rank(din);
    out.dim_h = out.dim_z - out.dim_b;
    return out;
}

DeltaSquaredResult delta_squared_check(const HLYAlgebra& H, const HLYRep& R, int start_level,
                                       int n_cap) {
    DeltaSquaredResult res;
    std::vector<Vec> cols;

    auto push_composite = [&](const Tensor& f2, const Tensor& g3, int mid_level) {
        auto [o1, o2] = coboundary(mid_level, f2, g3, H, R);
        cols.push_back(concat_vec(tensor_coords(o1), tensor_coords(o2)));
    };

    if (start_level == 0) {
        CochainSpace c1 = cochain_basis(1, H, R, n_cap);
        res.source_dim = c1.dim;
        for (const Tensor& b : c1.basis) {
            auto [f2, g3] = coboundary_deg1(b, H, R);
            push_composite(f2, g3, 1);
        }
    } else {
        CochainSpace c2 = cochain_basis(2 * start_level, H, R, n_cap);
        CochainSpace c3 = cochain_basis(2 * start_level + 1, H, R, n_cap);
        res.source_dim = c2.dim + c3.dim;
        const int d = H.dim, dv = R.carrier_dim;
        Tensor zero2(2 * start_level, d, dv, H.binary.field);
        Tensor zero3(2 * start_level + 1, d, dv, H.binary.field);
        for (const Tensor& b : c2.basis) {
            auto [f2, g3] = coboundary(start_level, b, zero3, H, R);
            push_composite(f2, g3, start_level + 1);
        }
        for (const Tensor& b : c3.basis) {
            auto [f2, g3] = coboundary(start_level, zero2, b, H, R);
            push_composite(f2, g3, start_level + 1);
        }
    }

    res.target_dim = cols.empty() ? 0 : int(cols[0].size());
    res.zero = true;
    for (int c = 0; c < int(cols.size()); ++c)
        for (int rIdx = 0; rIdx < res.target_dim; ++rIdx)
            if (!cols[c][rIdx].is_zero()) {
                res.zero = false;
                if (res.nonzero.size() < 32)
                    res.nonzero.push_back({"delta_squared_nonzero", {c, rIdx}, {cols[c][rIdx]}});
            }
    if (!cols.empty() && size_t(res.target_dim) * cols.size() <= 400000) {
        res.product = from_columns(cols, res.target_dim, H.binary.field);
        res.product_stored = true;
    }
    return res;
}

HLYAlgebra twisted_semidirect(const HLYAlgebra& H, const HLYRep& R, const CocyclePair& p,
                              int dim_cap) {
    IdentityReport ok = verify_23cocycle(p, H, R);
    if (!ok.ok()) throw PreconditionError("twisted_semidirect: (F,G) is not a (2,3)-cocycle", ok);
    return twisted_semidirect_raw(H, R, p.F, p.G, dim_cap);
}

}  // namespace hly
