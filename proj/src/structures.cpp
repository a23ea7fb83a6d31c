#include "hly/structures.hpp"

namespace hly {

namespace {

void check_hom_lie_shapes(const HomLieAlgebra& L) {
    if (L.alpha.rows != L.dim || L.alpha.cols != L.dim)
        throw DimensionError("hom-lie: alpha must be dim x dim");
    if (L.bracket.arity != 2 || L.bracket.in_dim != L.dim || L.bracket.out_dim != L.dim)
        throw DimensionError("hom-lie: bracket must be a (2, dim, dim) tensor");
}

void check_hly_shapes(const HLYAlgebra& H) {
    if (H.alpha.rows != H.dim || H.alpha.cols != H.dim)
        throw DimensionError("hly: alpha must be dim x dim");
    if (H.binary.arity != 2 || H.binary.in_dim != H.dim || H.binary.out_dim != H.dim)
        throw DimensionError("hly: binary bracket must be a (2, dim, dim) tensor");
    if (H.ternary.arity != 3 || H.ternary.in_dim != H.dim || H.ternary.out_dim != H.dim)
        throw DimensionError("hly: ternary bracket must be a (3, dim, dim) tensor");
}

}  // namespace

IdentityReport verify_hom_lie(const HomLieAlgebra& L, int cap) {
    check_hom_lie_shapes(L);
    IdentityReport rep;
    rep.cap = cap;
    const int n = L.dim;
    const Field f = L.bracket.field;

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec r = add_vec(L.bracket.value_at({i, j}), L.bracket.value_at({j, i}));
            if (!is_zero_vec(r)) rep.add("binary_skew", {i, j}, r);
        }

    std::vector<Vec> e, ae;
    for (int i = 0; i < n; ++i) {
        e.push_back(basis_vec(n, i, f));
        ae.push_back(L.alpha.column(i));
    }
    auto br = [&](const Vec& x, const Vec& y) { return tensor_eval(L.bracket, {x, y}); };

    // cyclic sum [alpha(x),[y,z]] over (x,y,z)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec r = br(ae[i], br(e[j], e[k]));
                r = add_vec(r, br(ae[j], br(e[k], e[i])));
                r = add_vec(r, br(ae[k], br(e[i], e[j])));
                if (!is_zero_vec(r)) rep.add("hom_jacobi", {i, j, k}, r);
            }
    return rep;
}

IdentityReport verify_multiplicative(const HomLieAlgebra& L, int cap) {
    check_hom_lie_shapes(L);
    IdentityReport rep;
    rep.cap = cap;
    const int n = L.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec lhs = L.alpha.apply(L.bracket.value_at({i, j}));
            Vec rhs = tensor_eval(L.bracket, {L.alpha.column(i), L.alpha.column(j)});
            Vec r = sub_vec(lhs, rhs);
            if (!is_zero_vec(r)) rep.add("multiplicative_binary", {i, j}, r);
        }
    return rep;
}

IdentityReport verify_multiplicative(const HLYAlgebra& H, int cap) {
    check_hly_shapes(H);
    IdentityReport rep;
    rep.cap = cap;
    const int n = H.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec r = sub_vec(H.alpha.apply(H.binary.value_at({i, j})),
                            tensor_eval(H.binary, {H.alpha.column(i), H.alpha.column(j)}));
            if (!is_zero_vec(r)) rep.add("multiplicative_binary", {i, j}, r);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec r = sub_vec(
                    H.alpha.apply(H.ternary.value_at({i, j, k})),
                    tensor_eval(H.ternary, {H.alpha.column(i), H.alpha.column(j), H.alpha.column(k)}));
                if (!is_zero_vec(r)) rep.add("multiplicative_ternary", {i, j, k}, r);
            }
    return rep;
}

IdentityReport verify_hly(const HLYAlgebra& H, int cap) {
    check_hly_shapes(H);
    IdentityReport rep;
    rep.cap = cap;
    const int n = H.dim;
    const Field f = H.binary.field;

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec r = add_vec(H.binary.value_at({i, j}), H.binary.value_at({j, i}));
            if (!is_zero_vec(r)) rep.add("binary_skew", {i, j}, r);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec r = add_vec(H.ternary.value_at({i, j, k}), H.ternary.value_at({j, i, k}));
                if (!is_zero_vec(r)) rep.add("ternary_skew", {i, j, k}, r);
            }

    std::vector<Vec> e, ae, a2e;
    Matrix alpha2 = compose_linear(H.alpha, H.alpha);
    for (int i = 0; i < n; ++i) {
        e.push_back(basis_vec(n, i, f));
        ae.push_back(H.alpha.column(i));
        a2e.push_back(alpha2.column(i));
    }
    auto b2 = [&](const Vec& x, const Vec& y) { return bracket2(H, x, y); };
    auto b3 = [&](const Vec& x, const Vec& y, const Vec& z) { return bracket3(H, x, y, z); };

    // ly1: cyc [[x,y],alpha(z)] + cyc <x,y,z> = 0
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec r = b2(b2(e[i], e[j]), ae[k]);
                r = add_vec(r, b2(b2(e[j], e[k]), ae[i]));
                r = add_vec(r, b2(b2(e[k], e[i]), ae[j]));
                r = add_vec(r, b3(e[i], e[j], e[k]));
                r = add_vec(r, b3(e[j], e[k], e[i]));
                r = add_vec(r, b3(e[k], e[i], e[j]));
                if (!is_zero_vec(r)) rep.add("ly1", {i, j, k}, r);
            }

    // ly2: cyc_{x,y,z} <[x,y],alpha(z),alpha(w)> = 0
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Vec r = b3(b2(e[i], e[j]), ae[k], ae[l]);
                    r = add_vec(r, b3(b2(e[j], e[k]), ae[i], ae[l]));
                    r = add_vec(r, b3(b2(e[k], e[i]), ae[j], ae[l]));
                    if (!is_zero_vec(r)) rep.add("ly2", {i, j, k, l}, r);
                }

    // ly3: <alpha(x),alpha(y),[z,w]> = [<x,y,z>,alpha^2(w)] + [alpha^2(z),<x,y,w>]
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Vec r = b3(ae[i], ae[j], b2(e[k], e[l]));
                    r = sub_vec(r, b2(b3(e[i], e[j], e[k]), a2e[l]));
                    r = sub_vec(r, b2(a2e[k], b3(e[i], e[j], e[l])));
                    if (!is_zero_vec(r)) rep.add("ly3", {i, j, k, l}, r);
                }

    // hom_nambu:
    // <a^2 x, a^2 y, <z,w,t>> = <<x,y,z>, a^2 w, a^2 t> + <a^2 z, <x,y,w>, a^2 t>
    //                           + <a^2 z, a^2 w, <x,y,t>>
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    for (int m = 0; m < n; ++m) {
                        Vec r = b3(a2e[i], a2e[j], b3(e[k], e[l], e[m]));
                        r = sub_vec(r, b3(b3(e[i], e[j], e[k]), a2e[l], a2e[m]));
                        r = sub_vec(r, b3(a2e[k], b3(e[i], e[j], e[l]), a2e[m]));
                        r = sub_vec(r, b3(a2e[k], a2e[l], b3(e[i], e[j], e[m])));
                        if (!is_zero_vec(r)) rep.add("hom_nambu", {i, j, k, l, m}, r);
                    }
    return rep;
}

HLYAlgebra induced_hly_from_hom_lie(const HomLieAlgebra& L) {
    IdentityReport lie = verify_hom_lie(L);
    if (!lie.ok()) throw PreconditionError("induced_hly_from_hom_lie: not a Hom-Lie algebra", lie);
    IdentityReport mult = verify_multiplicative(L);
    if (!mult.ok()) throw PreconditionError("induced_hly_from_hom_lie: twist is not multiplicative", mult);

    HLYAlgebra H;
    H.dim = L.dim;
    H.alpha = L.alpha;
    H.binary = L.bracket;
    H.ternary = Tensor::from_basis_map(3, L.dim, L.dim, L.bracket.field, [&](const std::vector<int>& idx) {
        Vec xy = L.bracket.value_at({idx[0], idx[1]});
        return tensor_eval(L.bracket, {xy, L.alpha.column(idx[2])});
    });
    return H;
}

HLYAlgebra yau_twist(const HLYAlgebra& H, const Matrix& phi) {
    check_hly_shapes(H);
    if (phi.rows != H.dim || phi.cols != H.dim) throw DimensionError("yau_twist: phi must be dim x dim");
    IdentityReport morph = is_hly_morphism(phi, H, H);
    // phi only needs to respect the brackets here, not the twist
    IdentityReport bracket_only;
    for (const auto& fl : morph.failures)
        if (fl.identity != "morphism_twist") bracket_only.add(fl.identity, fl.where, fl.residual);
    bracket_only.truncated = morph.truncated;
    if (!bracket_only.ok()) throw PreconditionError("yau_twist: phi is not a morphism", bracket_only);

    HLYAlgebra out;
    out.dim = H.dim;
    out.alpha = compose_linear(phi, H.alpha);
    out.binary = compose_out(phi, H.binary);
    out.ternary = compose_out(compose_linear(phi, phi), H.ternary);
    return out;
}

HomLieAlgebra as_hom_lie(const HLYAlgebra& H) {
    check_hly_shapes(H);
    if (!H.ternary.is_zero()) {
        IdentityReport rep;
        for_each_tuple(3, H.dim, [&](const std::vector<int>& idx) {
            Vec v = H.ternary.value_at(idx);
            if (!is_zero_vec(v)) rep.add("nonzero_ternary", idx, v);
        });
        throw PreconditionError("as_hom_lie: ternary bracket is not zero", rep);
    }
    return HomLieAlgebra{H.dim, H.alpha, H.binary};
}

HLYAlgebra as_hlts(const HLYAlgebra& H) {
    check_hly_shapes(H);
    if (!H.binary.is_zero()) {
        IdentityReport rep;
        for_each_tuple(2, H.dim, [&](const std::vector<int>& idx) {
            Vec v = H.binary.value_at(idx);
            if (!is_zero_vec(v)) rep.add("nonzero_binary", idx, v);
        });
        throw PreconditionError("as_hlts: binary bracket is not zero", rep);
    }
    return H;
}

HLYAlgebra hly_from_hom_lie_brackets(const HomLieAlgebra& L) {
    return HLYAlgebra{L.dim, L.alpha, L.bracket, Tensor(3, L.dim, L.dim, L.bracket.field)};
}

IdentityReport is_hly_morphism(const Matrix& phi, const HLYAlgebra& H1, const HLYAlgebra& H2, int cap) {
    check_hly_shapes(H1);
    check_hly_shapes(H2);
    if (phi.cols != H1.dim || phi.rows != H2.dim)
        throw DimensionError("is_hly_morphism: phi must map H1 to H2");
    IdentityReport rep;
    rep.cap = cap;
    const int n = H1.dim;

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec r = sub_vec(phi.apply(H1.binary.value_at({i, j})),
                            tensor_eval(H2.binary, {phi.column(i), phi.column(j)}));
            if (!is_zero_vec(r)) rep.add("morphism_binary", {i, j}, r);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec r = sub_vec(phi.apply(H1.ternary.value_at({i, j, k})),
                                tensor_eval(H2.ternary, {phi.column(i), phi.column(j), phi.column(k)}));
                if (!is_zero_vec(r)) rep.add("morphism_ternary", {i, j, k}, r);
            }
    Matrix lhs = compose_linear(phi, H1.alpha), rhs = compose_linear(H2.alpha, phi);
    if (lhs != rhs) {
        for (int j = 0; j < n; ++j) {
            Vec r = sub_vec(lhs.column(j), rhs.column(j));
            if (!is_zero_vec(r)) rep.add("morphism_twist", {j}, r);
        }
    }
    return rep;
}

}  // namespace hly
