#include "hly/ns_algebras.hpp"

namespace hly {

namespace {

void check_ns_hly_shapes(const NSHLY& N) {
    auto bad2 = [&](const Tensor& t) { return t.arity != 2 || t.in_dim != N.dim || t.out_dim != N.dim; };
    auto bad3 = [&](const Tensor& t) { return t.arity != 3 || t.in_dim != N.dim || t.out_dim != N.dim; };
    if (bad2(N.circ) || bad2(N.vee) || bad3(N.curly) || bad3(N.square))
        throw DimensionError("ns-hly: product tensors must be (2,d,d) and (3,d,d)");
    if (N.alpha.rows != N.dim || N.alpha.cols != N.dim)
        throw DimensionError("ns-hly: alpha must be dim x dim");
}

}  // namespace

NSDerived derived_brackets(const NSHLY& N) {
    check_ns_hly_shapes(N);
    const int d = N.dim;
    const Field f = N.circ.field;
    std::vector<Vec> e, ae;
    for (int i = 0; i < d; ++i) {
        e.push_back(basis_vec(d, i, f));
        ae.push_back(N.alpha.column(i));
    }
    NSDerived out;
    out.star = Tensor::from_basis_map(2, d, d, f, [&](const std::vector<int>& t) {
        Vec v = sub_vec(N.circ.value_at({t[0], t[1]}), N.circ.value_at({t[1], t[0]}));
        return add_vec(v, N.vee.value_at({t[0], t[1]}));
    });
    out.hat = Tensor::from_basis_map(3, d, d, f, [&](const std::vector<int>& t) {
        int x = t[0], y = t[1], z = t[2];
        Vec v = sub_vec(N.curly.value_at({z, y, x}), N.curly.value_at({z, x, y}));
        v = add_vec(v, tensor_eval(N.circ, {ae[x], N.circ.value_at({y, z})}));
        v = sub_vec(v, tensor_eval(N.circ, {ae[y], N.circ.value_at({x, z})}));
        v = sub_vec(v, tensor_eval(N.circ, {out.star.value_at({x, y}), ae[z]}));
        return v;
    });
    out.sub = Tensor::from_basis_map(3, d, d, f, [&](const std::vector<int>& t) {
        Vec v = add_vec(out.hat.value_at(t), N.curly.value_at(t));
        v = sub_vec(v, N.curly.value_at({t[1], t[0], t[2]}));
        return add_vec(v, N.square.value_at(t));
    });
    return out;
}

IdentityReport verify_ns_hly(const NSHLY& N, int cap, const NSReadings& rd) {
    check_ns_hly_shapes(N);
    IdentityReport rep;
    rep.cap = cap;
    const int d = N.dim;
    const Field f = N.circ.field;
    const NSDerived dv = derived_brackets(N);
    Matrix alpha2 = compose_linear(N.alpha, N.alpha);

    std::vector<Vec> e, ae, a2e;
    for (int i = 0; i < d; ++i) {
        e.push_back(basis_vec(d, i, f));
        ae.push_back(N.alpha.column(i));
        a2e.push_back(alpha2.column(i));
    }
    auto circ = [&](const Vec& x, const Vec& y) { return tensor_eval(N.circ, {x, y}); };
    auto vee = [&](const Vec& x, const Vec& y) { return tensor_eval(N.vee, {x, y}); };
    auto curly = [&](const Vec& x, const Vec& y, const Vec& z) {
        return tensor_eval(N.curly, {x, y, z});
    };
    auto square = [&](const Vec& x, const Vec& y, const Vec& z) {
        return tensor_eval(N.square, {x, y, z});
    };
    auto star = [&](const Vec& x, const Vec& y) { return tensor_eval(dv.star, {x, y}); };
    auto hat = [&](const Vec& x, const Vec& y, const Vec& z) {
        return tensor_eval(dv.hat, {x, y, z});
    };
    auto sub = [&](const Vec& x, const Vec& y, const Vec& z) {
        return tensor_eval(dv.sub, {x, y, z});
    };

    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec r = add_vec(N.vee.value_at({i, j}), N.vee.value_at({j, i}));
            if (!is_zero_vec(r)) rep.add("ns_vee_skew", {i, j}, r);
        }
    // the square bracket pulls back a 3-cochain, so it is skew in (1,2); the
    // sub-adjacent ternary bracket inherits its skew-symmetry from this
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Vec r = add_vec(N.square.value_at({i, j, k}), N.square.value_at({j, i, k}));
                if (!is_zero_vec(r)) rep.add("ns_square_skew", {i, j, k}, r);
            }

    // 1: cyc ( [x1,x2]* v a(x3) - a(x1) o (x2 v x3) + [x1,x2,x3] ) = 0
    auto id1_term = [&](int x, int y, int z) {
        Vec v = vee(star(e[x], e[y]), ae[z]);
        v = sub_vec(v, circ(ae[x], vee(e[y], e[z])));
        return add_vec(v, N.square.value_at({x, y, z}));
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Vec r = id1_term(i, j, k);
                if (rd.cyclic_first) {
                    r = add_vec(r, id1_term(j, k, i));
                    r = add_vec(r, id1_term(k, i, j));
                }
                if (!is_zero_vec(r)) rep.add("ns_cyclic_mix", {i, j, k}, r);
            }

    // 2: cyc_{x1,x2,x3} ( {x2 v x3, a(x1), a(x4)} + [[x1,x2]*, a(x3), a(x4)] ) = 0
    auto id2_term = [&](int x, int y, int z, int t) {
        Vec v = curly(vee(e[y], e[z]), ae[x], ae[t]);
        return add_vec(v, square(star(e[x], e[y]), ae[z], ae[t]));
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    Vec r = add_vec(add_vec(id2_term(i, j, k, l), id2_term(j, k, i, l)),
                                    id2_term(k, i, j, l));
                    if (!is_zero_vec(r)) rep.add("ns_cyclic_theta", {i, j, k, l}, r);
                }

    // 3: cyc_{x1,x2,x3} {[x1,x2]*, a(x3), a(x4)}^ = 0
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    auto term = [&](int x, int y, int z) {
                        return rd.hat_cyclic_bracket ? hat(star(e[x], e[y]), ae[z], ae[l])
                                                     : curly(star(e[x], e[y]), ae[z], ae[l]);
                    };
                    Vec r = add_vec(add_vec(term(i, j, k), term(j, k, i)), term(k, i, j));
                    if (!is_zero_vec(r)) rep.add("ns_cyclic_hat", {i, j, k, l}, r);
                }

    // 4: {a(x4), [x1,x2]*, a(x3)} = {x2 o x4, a(x1), a(x3)} - {x1 o x4, a(x2), a(x3)}
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    Vec r = curly(ae[l], star(e[i], e[j]), ae[k]);
                    r = sub_vec(r, curly(circ(e[j], e[l]), ae[i], ae[k]));
                    r = add_vec(r, curly(circ(e[i], e[l]), ae[j], ae[k]));
                    if (!is_zero_vec(r)) rep.add("ns_theta_bracket", {i, j, k, l}, r);
                }

    // 5: {a(x1),a(x2), x3 o x4}^ = a^2(x3) o {x1,x2,x4}^ + <x1,x2,x3> o a^P(x4)
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    Vec r = hat(ae[i], ae[j], circ(e[k], e[l]));
                    r = sub_vec(r, circ(a2e[k], hat(e[i], e[j], e[l])));
                    const Vec& last = rd.final_twist_power == 2 ? a2e[l] : ae[l];
                    r = sub_vec(r, circ(sub(e[i], e[j], e[k]), last));
                    if (!is_zero_vec(r)) rep.add("ns_hat_circ", {i, j, k, l}, r);
                }

    // 6: {a(x4),a(x1),[x2,x3]*} = a^2(x2) o {x4,x1,x3} - a^2(x3) o {x4,x1,x2}
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    Vec r = curly(ae[l], ae[i], star(e[j], e[k]));
                    r = sub_vec(r, circ(a2e[j], N.curly.value_at({l, i, k})));
                    r = add_vec(r, circ(a2e[k], N.curly.value_at({l, i, j})));
                    if (!is_zero_vec(r)) rep.add("ns_theta_star", {i, j, k, l}, r);
                }

    // 7: {a^2(x1),a^2(x2),{x5,x3,x4}}^ = {{x1,x2,x5}^, a^2(x3), a^2(x4)}
    //      + {a^2(x5), <x1,x2,x3>, a^2(x4)} + {a^2(x5), a^2(x3), <x1,x2,x4>}
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    for (int m = 0; m < d; ++m) {
                        Vec inner = rd.inner_slots_5_3_4 ? N.curly.value_at({m, k, l})
                                                         : N.curly.value_at({i, j, l});
                        Vec r = hat(a2e[i], a2e[j], inner);
                        r = sub_vec(r, curly(hat(e[i], e[j], e[m]), a2e[k], a2e[l]));
                        r = sub_vec(r, curly(a2e[m], sub(e[i], e[j], e[k]), a2e[l]));
                        r = sub_vec(r, curly(a2e[m], a2e[k], sub(e[i], e[j], e[l])));
                        if (!is_zero_vec(r)) rep.add("ns_hat_curly", {i, j, k, l, m}, r);
                    }

    // 8: {a^2(x5),a^2(x1),<x2,x3,x4>} = {{x5,x1,x2}, a^2(x3), a^2(x4)}
    //      - {{x5,x1,x3}, a^2(x2), a^2(x4)} + {a^2(x2), a^2(x3), {x5,x1,x4}}^
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    for (int m = 0; m < d; ++m) {
                        Vec r = curly(a2e[m], a2e[i], sub(e[j], e[k], e[l]));
                        r = sub_vec(r, curly(N.curly.value_at({m, i, j}), a2e[k], a2e[l]));
                        r = add_vec(r, curly(N.curly.value_at({m, i, k}), a2e[j], a2e[l]));
                        r = sub_vec(r, hat(a2e[j], a2e[k], N.curly.value_at({m, i, l})));
                        if (!is_zero_vec(r)) rep.add("ns_theta_ternary", {i, j, k, l, m}, r);
                    }

    // 9: {a(x1),a(x2), x3 v x4}^ + a^2(x4) o [x1,x2,x3] - <x1,x2,x3> v a^2(x4)
    //      + [a(x1),a(x2),[x3,x4]*] - a^2(x3) o [x1,x2,x4] - a^2(x3) v <x1,x2,x4> = 0
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    Vec first = rd.hat_cocycle3_first ? hat(ae[i], ae[j], vee(e[k], e[l]))
                                                      : curly(ae[i], ae[j], vee(e[k], e[l]));
                    Vec r = first;
                    r = add_vec(r, circ(a2e[l], N.square.value_at({i, j, k})));
                    r = sub_vec(r, vee(sub(e[i], e[j], e[k]), a2e[l]));
                    r = add_vec(r, square(ae[i], ae[j], star(e[k], e[l])));
                    r = sub_vec(r, circ(a2e[k], N.square.value_at({i, j, l})));
                    r = sub_vec(r, vee(a2e[k], sub(e[i], e[j], e[l])));
                    if (!is_zero_vec(r)) rep.add("ns_mixed_vee", {i, j, k, l}, r);
                }

    // 10: {[x1,x2,x3], a^2(x4), a^2(x5)} - {[x1,x2,x4], a^2(x3), a^2(x5)}
    //      + {a^2(x1),a^2(x2),[x3,x4,x5]}^ - {a^2(x3),a^2(x4),[x1,x2,x5]}^
    //      - [<x1,x2,x3>, a^2(x4), a^2(x5)] - [a^2(x3), <x1,x2,x4>, a^2(x5)]
    //      + [a^2(x1), a^2(x2), <x3,x4,x5>] - [a^2(x3), a^2(x4), <x1,x2,x5>] = 0
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    for (int m = 0; m < d; ++m) {
                        Vec r;
                        if (rd.standard_hats_cocycle4) {
                            r = curly(N.square.value_at({i, j, k}), a2e[l], a2e[m]);
                            r = sub_vec(r, curly(N.square.value_at({i, j, l}), a2e[k], a2e[m]));
                            r = add_vec(r, hat(a2e[i], a2e[j], N.square.value_at({k, l, m})));
                            r = sub_vec(r, hat(a2e[k], a2e[l], N.square.value_at({i, j, m})));
                        } else {
                            // hats and slots exactly as quoted
                            r = hat(N.square.value_at({i, j, k}), a2e[l], a2e[m]);
                            r = sub_vec(r, curly(N.square.value_at({i, j, l}), a2e[k], a2e[m]));
                            r = add_vec(r, hat(N.square.value_at({k, l, m}), a2e[i], a2e[j]));
                            r = sub_vec(r, hat(N.square.value_at({i, j, m}), a2e[k], a2e[l]));
                        }
                        r = sub_vec(r, square(sub(e[i], e[j], e[k]), a2e[l], a2e[m]));
                        r = sub_vec(r, square(a2e[k], sub(e[i], e[j], e[l]), a2e[m]));
                        r = add_vec(r, square(a2e[i], a2e[j], sub(e[k], e[l], e[m])));
                        r = sub_vec(r, square(a2e[k], a2e[l], sub(e[i], e[j], e[m])));
                        if (!is_zero_vec(r)) rep.add("ns_square_ternary", {i, j, k, l, m}, r);
                    }
    return rep;
}

std::pair<HLYAlgebra, HLYRep> subadjacent_hly(const NSHLY& N) {
    IdentityReport ok = verify_ns_hly(N);
    if (!ok.ok()) throw PreconditionError("subadjacent_hly: invalid NS presentation", ok);
    NSDerived dv = derived_brackets(N);

    HLYAlgebra H;
    H.dim = N.dim;
    H.alpha = N.alpha;
    H.binary = dv.star;
    H.ternary = dv.sub;

    HLYRep R;
    R.carrier_dim = N.dim;
    R.beta = N.alpha;
    for (int i = 0; i < N.dim; ++i) {
        Matrix m(N.dim, N.dim, N.circ.field);
        for (int j = 0; j < N.dim; ++j) {
            Vec col = N.circ.value_at({i, j});
            for (int r = 0; r < N.dim; ++r) m.at(r, j) = col[r];
        }
        R.rho.push_back(std::move(m));
    }
    for (int i = 0; i < N.dim; ++i)
        for (int j = 0; j < N.dim; ++j) {
            Matrix m(N.dim, N.dim, N.circ.field);
            for (int z = 0; z < N.dim; ++z) {
                Vec col = N.curly.value_at({z, i, j});
                for (int r = 0; r < N.dim; ++r) m.at(r, z) = col[r];
            }
            R.theta.push_back(std::move(m));
        }
    return {H, R};
}

IdentityReport verify_ns_hom_lie(const NSHomLie& N, int cap) {
    if (N.circ.arity != 2 || N.vee.arity != 2 || N.circ.in_dim != N.dim || N.vee.in_dim != N.dim)
        throw DimensionError("ns-lie: products must be (2,d,d) tensors");
    IdentityReport rep;
    rep.cap = cap;
    const int d = N.dim;
    const Field f = N.circ.field;

    std::vector<Vec> e, ae;
    for (int i = 0; i < d; ++i) {
        e.push_back(basis_vec(d, i, f));
        ae.push_back(N.alpha.column(i));
    }
    auto circ = [&](const Vec& x, const Vec& y) { return tensor_eval(N.circ, {x, y}); };
    auto vee = [&](const Vec& x, const Vec& y) { return tensor_eval(N.vee, {x, y}); };
    auto star = [&](int x, int y) {
        Vec v = sub_vec(N.circ.value_at({x, y}), N.circ.value_at({y, x}));
        return add_vec(v, N.vee.value_at({x, y}));
    };

    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec r = add_vec(N.vee.value_at({i, j}), N.vee.value_at({j, i}));
            if (!is_zero_vec(r)) rep.add("ns_vee_skew", {i, j}, r);
        }

    // [x,y] o a(z) - a(x) o (y o z) + a(y) o (x o z) = 0
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Vec r = circ(star(i, j), ae[k]);
                r = sub_vec(r, circ(ae[i], N.circ.value_at({j, k})));
                r = add_vec(r, circ(ae[j], N.circ.value_at({i, k})));
                if (!is_zero_vec(r)) rep.add("nslie_pre", {i, j, k}, r);
            }

    // cyc ( a(x) v [y,z] + a(x) o (y v z) ) = 0
    auto cyc_term = [&](int x, int y, int z) {
        Vec v = vee(ae[x], star(y, z));
        return add_vec(v, circ(ae[x], N.vee.value_at({y, z})));
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Vec r = add_vec(add_vec(cyc_term(i, j, k), cyc_term(j, k, i)), cyc_term(k, i, j));
                if (!is_zero_vec(r)) rep.add("nslie_cyclic", {i, j, k}, r);
            }
    return rep;
}

HomLieAlgebra adjacent_hom_lie(const NSHomLie& N) {
    IdentityReport ok = verify_ns_hom_lie(N);
    if (!ok.ok()) throw PreconditionError("adjacent_hom_lie: invalid NS presentation", ok);
    HomLieAlgebra L;
    L.dim = N.dim;
    L.alpha = N.alpha;
    L.bracket = Tensor::from_basis_map(2, N.dim, N.dim, N.circ.field, [&](const std::vector<int>& t) {
        Vec v = sub_vec(N.circ.value_at({t[0], t[1]}), N.circ.value_at({t[1], t[0]}));
        return add_vec(v, N.vee.value_at({t[0], t[1]}));
    });
    return L;
}

NSHLY ns_from_twisted_op(const Matrix& T, const TwistedContext& c) {
    IdentityReport pre = verify_twisted_op(T, c);
    if (!pre.ok()) throw PreconditionError("ns_from_twisted_op: T is not a twisted operator", pre);
    const int m = c.R.carrier_dim;
    const Field f = T.field;
    std::vector<Vec> tu;
    for (int i = 0; i < m; ++i) tu.push_back(T.column(i));

    NSHLY N;
    N.dim = m;
    N.alpha = c.R.beta;
    N.circ = Tensor::from_basis_map(2, m, m, f, [&](const std::vector<int>& t) {
        return rho_of(c.R.rho, tu[t[0]]).column(t[1]);
    });
    N.vee = Tensor::from_basis_map(2, m, m, f, [&](const std::vector<int>& t) {
        return tensor_eval(c.pair.F, {tu[t[0]], tu[t[1]]});
    });
    N.curly = Tensor::from_basis_map(3, m, m, f, [&](const std::vector<int>& t) {
        return theta_of(c.R, tu[t[1]], tu[t[2]]).column(t[0]);
    });
    N.square = Tensor::from_basis_map(3, m, m, f, [&](const std::vector<int>& t) {
        return tensor_eval(c.pair.G, {tu[t[0]], tu[t[1]], tu[t[2]]});
    });
    return N;
}

NSHLY ns_from_reynolds(const Matrix& R, const Scalar& lambda, const Scalar& mu, const HLYAlgebra& H) {
    IdentityReport pre = verify_weighted_reynolds(R, lambda, mu, H);
    if (!pre.ok())
        throw PreconditionError("ns_from_reynolds: not a weighted Reynolds operator", pre);
    ReynoldsWrap w = reynolds_as_twisted_context(lambda, mu, H);
    return ns_from_twisted_op(R, w.ctx);
}

NSHomLie ns_lie_from_twisted_op_hom_lie(const Matrix& T, const HomLieAlgebra& L, const HomLieRep& R,
                                        const Tensor& F) {
    IdentityReport pre = verify_twisted_op_hom_lie(T, L, R, F);
    if (!pre.ok())
        throw PreconditionError("ns_lie_from_twisted_op_hom_lie: not a twisted operator", pre);
    const int m = R.carrier_dim;
    const Field f = T.field;
    std::vector<Vec> tu;
    for (int i = 0; i < m; ++i) tu.push_back(T.column(i));

    NSHomLie N;
    N.dim = m;
    N.alpha = R.beta;
    N.circ = Tensor::from_basis_map(2, m, m, f, [&](const std::vector<int>& t) {
        return rho_of(R.rho, tu[t[0]]).column(t[1]);
    });
    N.vee = Tensor::from_basis_map(2, m, m, f, [&](const std::vector<int>& t) {
        return tensor_eval(F, {tu[t[0]], tu[t[1]]});
    });
    return N;
}

NSHLY ns_hly_from_ns_lie(const NSHomLie& N) {
    IdentityReport ok = verify_ns_hom_lie(N);
    if (!ok.ok()) throw PreconditionError("ns_hly_from_ns_lie: invalid NS presentation", ok);
    const int d = N.dim;
    const Field f = N.circ.field;
    std::vector<Vec> ae;
    for (int i = 0; i < d; ++i) ae.push_back(N.alpha.column(i));
    auto star = [&](int x, int y) {
        Vec v = sub_vec(N.circ.value_at({x, y}), N.circ.value_at({y, x}));
        return add_vec(v, N.vee.value_at({x, y}));
    };

    NSHLY out;
    out.dim = d;
    out.alpha = N.alpha;
    out.circ = N.circ;
    out.vee = N.vee;
    out.curly = Tensor::from_basis_map(3, d, d, f, [&](const std::vector<int>& t) {
        // {x,y,z} = a(z) o (y o x)
        return tensor_eval(N.circ, {ae[t[2]], N.circ.value_at({t[1], t[0]})});
    });
    out.square = Tensor::from_basis_map(3, d, d, f, [&](const std::vector<int>& t) {
        // [x,y,z] = [x,y]* v a(z) - a(z) o (x v y)
        Vec v = tensor_eval(N.vee, {star(t[0], t[1]), ae[t[2]]});
        return sub_vec(v, tensor_eval(N.circ, {ae[t[2]], N.vee.value_at({t[0], t[1]})}));
    });
    return out;
}

bool subadjacent_matches_induced(const NSHomLie& N) {
    NSHLY lifted = ns_hly_from_ns_lie(N);
    auto [sub, rep] = subadjacent_hly(lifted);
    (void)rep;
    HLYAlgebra induced = induced_hly_from_hom_lie(adjacent_hom_lie(N));
    return sub.binary == induced.binary && sub.ternary == induced.ternary;
}

}  // namespace hly
