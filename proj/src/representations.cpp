#include "hly/representations.hpp"

namespace hly {

namespace {

void check_rep_shapes(const HLYAlgebra& H, const HLYRep& R) {
    if (R.algebra_dim() != H.dim) throw DimensionError("rep: rho family size != algebra dim");
    if (int(R.theta.size()) != H.dim * H.dim) throw DimensionError("rep: theta family size != dim^2");
    if (R.beta.rows != R.carrier_dim || R.beta.cols != R.carrier_dim)
        throw DimensionError("rep: beta must be carrier_dim x carrier_dim");
    for (const auto& m : R.rho)
        if (m.rows != R.carrier_dim || m.cols != R.carrier_dim)
            throw DimensionError("rep: rho matrices must act on the carrier");
    for (const auto& m : R.theta)
        if (m.rows != R.carrier_dim || m.cols != R.carrier_dim)
            throw DimensionError("rep: theta matrices must act on the carrier");
}

void report_matrix_failure(IdentityReport& rep, const std::string& name, std::vector<int> where,
                           const Matrix& lhs, const Matrix& rhs) {
    Matrix diff = sub_mat(lhs, rhs);
    if (diff.is_zero()) return;
    // residual recorded column-major as one coordinate vector
    Vec r;
    r.reserve(diff.a.size());
    for (int c = 0; c < diff.cols; ++c)
        for (int rw = 0; rw < diff.rows; ++rw) r.push_back(diff.at(rw, c));
    rep.add(name, std::move(where), std::move(r));
}

}  // namespace

Matrix rho_of(const std::vector<Matrix>& rho, const Vec& x) {
    if (rho.empty()) throw DimensionError("rho_of: empty family");
    Matrix acc(rho[0].rows, rho[0].cols, rho[0].field);
    for (size_t i = 0; i < rho.size(); ++i)
        if (!x[i].is_zero()) acc = add_mat(acc, scale_mat(x[i], rho[i]));
    return acc;
}

Matrix theta_of(const HLYRep& R, const Vec& x, const Vec& y) {
    Matrix acc(R.carrier_dim, R.carrier_dim, R.beta.field);
    const int n = R.algebra_dim();
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            acc = add_mat(acc, scale_mat(x[i] * y[j], R.theta_at(i, j)));
        }
    }
    return acc;
}

Matrix bilinear_of(const std::vector<Matrix>& family, int dim, const Vec& x, const Vec& y) {
    Matrix acc(family[0].rows, family[0].cols, family[0].field);
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            acc = add_mat(acc, scale_mat(x[i] * y[j], family[size_t(i) * dim + j]));
        }
    }
    return acc;
}

std::vector<Matrix> d_map(const HLYRep& R, const Matrix& alpha, const Tensor& binary) {
    const int n = R.algebra_dim();
    std::vector<Matrix> d;
    d.reserve(size_t(n) * n);
    std::vector<Matrix> rho_alpha(n, Matrix());
    for (int i = 0; i < n; ++i) rho_alpha[i] = rho_of(R.rho, alpha.column(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix m = sub_mat(R.theta_at(j, i), R.theta_at(i, j));
            m = add_mat(m, compose_linear(rho_alpha[i], R.rho[j]));
            m = sub_mat(m, compose_linear(rho_alpha[j], R.rho[i]));
            m = sub_mat(m, compose_linear(rho_of(R.rho, binary.value_at({i, j})), R.beta));
            d.push_back(std::move(m));
        }
    return d;
}

IdentityReport verify_hom_lie_rep(const HomLieAlgebra& L, const HomLieRep& R, int cap) {
    if (int(R.rho.size()) != L.dim) throw DimensionError("hom-lie rep: rho family size != dim");
    IdentityReport rep;
    rep.cap = cap;
    const int n = L.dim;
    std::vector<Matrix> rho_alpha(n);
    for (int i = 0; i < n; ++i) rho_alpha[i] = rho_of(R.rho, L.alpha.column(i));

    for (int i = 0; i < n; ++i)
        report_matrix_failure(rep, "rep_rho_twist", {i}, compose_linear(rho_alpha[i], R.beta),
                              compose_linear(R.beta, R.rho[i]));

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix lhs = compose_linear(rho_of(R.rho, L.bracket.value_at({i, j})), R.beta);
            Matrix rhs = sub_mat(compose_linear(rho_alpha[i], R.rho[j]),
                                 compose_linear(rho_alpha[j], R.rho[i]));
            report_matrix_failure(rep, "rep_bracket", {i, j}, lhs, rhs);
        }
    return rep;
}

IdentityReport verify_hly_rep(const HLYAlgebra& H, const HLYRep& R, int cap) {
    check_rep_shapes(H, R);
    IdentityReport rep;
    rep.cap = cap;
    const int n = H.dim;
    const Matrix alpha2 = compose_linear(H.alpha, H.alpha);
    const Matrix beta2 = compose_linear(R.beta, R.beta);
    const std::vector<Matrix> dfam = d_map(R, H.alpha, H.binary);

    auto dd = [&](const Vec& x, const Vec& y) { return bilinear_of(dfam, n, x, y); };
    auto th = [&](const Vec& x, const Vec& y) { return theta_of(R, x, y); };
    auto rh = [&](const Vec& x) { return rho_of(R.rho, x); };

    std::vector<Vec> ae, a2e;
    for (int i = 0; i < n; ++i) {
        ae.push_back(H.alpha.column(i));
        a2e.push_back(alpha2.column(i));
    }
    auto br2 = [&](int i, int j) { return H.binary.value_at({i, j}); };
    auto br3 = [&](int i, int j, int k) { return H.ternary.value_at({i, j, k}); };

    for (int i = 0; i < n; ++i)
        report_matrix_failure(rep, "rep_rho_twist", {i}, compose_linear(rh(ae[i]), R.beta),
                              compose_linear(R.beta, R.rho[i]));

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            report_matrix_failure(rep, "rep_theta_twist", {i, j},
                                  compose_linear(th(ae[i], ae[j]), R.beta),
                                  compose_linear(R.beta, R.theta_at(i, j)));

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // cyclic sum of D([x1,x2], alpha(x3))
                Matrix lhs = dd(br2(i, j), ae[k]);
                lhs = add_mat(lhs, dd(br2(j, k), ae[i]));
                lhs = add_mat(lhs, dd(br2(k, i), ae[j]));
                report_matrix_failure(rep, "rep_d_cyclic", {i, j, k}, lhs,
                                      Matrix(R.carrier_dim, R.carrier_dim, R.beta.field));
            }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // theta([x1,x2], alpha(y1)) o beta = theta(ax1,ay1) rho(x2) - theta(ax2,ay1) rho(x1)
                Matrix lhs = compose_linear(th(br2(i, j), ae[k]), R.beta);
                Matrix rhs = sub_mat(compose_linear(th(ae[i], ae[k]), R.rho[j]),
                                     compose_linear(th(ae[j], ae[k]), R.rho[i]));
                report_matrix_failure(rep, "rep_theta_bracket", {i, j, k}, lhs, rhs);
            }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // D(ax1,ax2) rho(y2) = rho(a^2 y2) D(x1,x2) + rho(<x1,x2,y2>) o beta
                Matrix lhs = compose_linear(dd(ae[i], ae[j]), R.rho[k]);
                Matrix rhs = compose_linear(rh(a2e[k]), dfam[size_t(i) * n + j]);
                rhs = add_mat(rhs, compose_linear(rh(br3(i, j, k)), R.beta));
                report_matrix_failure(rep, "rep_d_rho", {i, j, k}, lhs, rhs);
            }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // theta(ax1, [y1,y2]) o beta = rho(a^2 y1) theta(x1,y2) - rho(a^2 y2) theta(x1,y1)
                Matrix lhs = compose_linear(th(ae[i], br2(j, k)), R.beta);
                Matrix rhs = sub_mat(compose_linear(rh(a2e[j]), R.theta_at(i, k)),
                                     compose_linear(rh(a2e[k]), R.theta_at(i, j)));
                report_matrix_failure(rep, "rep_rho_theta", {i, j, k}, lhs, rhs);
            }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    // D(a^2 x1, a^2 x2) theta(y1,y2) = theta(a^2 y1, a^2 y2) D(x1,x2)
                    //   + theta(<x1,x2,y1>, a^2 y2) o beta^2 + theta(a^2 y1, <x1,x2,y2>) o beta^2
                    Matrix lhs = compose_linear(dd(a2e[i], a2e[j]), R.theta_at(k, l));
                    Matrix rhs = compose_linear(th(a2e[k], a2e[l]), dfam[size_t(i) * n + j]);
                    rhs = add_mat(rhs, compose_linear(th(br3(i, j, k), a2e[l]), beta2));
                    rhs = add_mat(rhs, compose_linear(th(a2e[k], br3(i, j, l)), beta2));
                    report_matrix_failure(rep, "rep_d_theta", {i, j, k, l}, lhs, rhs);
                }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    // theta(a^2 x1, <y1,y2,y3>) o beta^2 = theta(a^2 y2, a^2 y3) theta(x1,y1)
                    //   - theta(a^2 y1, a^2 y3) theta(x1,y2) + D(a^2 y1, a^2 y2) theta(x1,y3)
                    Matrix lhs = compose_linear(th(a2e[i], br3(j, k, l)), beta2);
                    Matrix rhs = compose_linear(th(a2e[k], a2e[l]), R.theta_at(i, j));
                    rhs = sub_mat(rhs, compose_linear(th(a2e[j], a2e[l]), R.theta_at(i, k)));
                    rhs = add_mat(rhs, compose_linear(dd(a2e[j], a2e[k]), R.theta_at(i, l)));
                    report_matrix_failure(rep, "rep_theta_ternary", {i, j, k, l}, lhs, rhs);
                }
    return rep;
}

HLYRep adjoint_rep(const HLYAlgebra& H) {
    IdentityReport ok = verify_hly(H);
    if (!ok.ok()) throw PreconditionError("adjoint_rep: invalid Hom-Lie-Yamaguti presentation", ok);
    HLYRep R;
    R.carrier_dim = H.dim;
    R.beta = H.alpha;
    for (int i = 0; i < H.dim; ++i) {
        Matrix m(H.dim, H.dim, H.binary.field);
        for (int j = 0; j < H.dim; ++j) {
            Vec col = H.binary.value_at({i, j});
            for (int r = 0; r < H.dim; ++r) m.at(r, j) = col[r];
        }
        R.rho.push_back(std::move(m));
    }
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j) {
            Matrix m(H.dim, H.dim, H.binary.field);
            for (int z = 0; z < H.dim; ++z) {
                Vec col = H.ternary.value_at({z, i, j});
                for (int r = 0; r < H.dim; ++r) m.at(r, z) = col[r];
            }
            R.theta.push_back(std::move(m));
        }
    return R;
}

std::vector<Matrix> theta_from_rho(const HomLieRep& R, const Matrix& alpha) {
    const int n = int(R.rho.size());
    std::vector<Matrix> theta;
    theta.reserve(size_t(n) * n);
    std::vector<Matrix> rho_alpha(n);
    for (int j = 0; j < n; ++j) rho_alpha[j] = rho_of(R.rho, alpha.column(j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) theta.push_back(compose_linear(rho_alpha[j], R.rho[i]));
    return theta;
}

HLYRep hly_rep_from_hom_lie_rep(const HomLieRep& R, const Matrix& alpha) {
    HLYRep out;
    out.carrier_dim = R.carrier_dim;
    out.beta = R.beta;
    out.rho = R.rho;
    out.theta = theta_from_rho(R, alpha);
    return out;
}

HLYRep zero_rep(int algebra_dim, int carrier_dim, Field f) {
    HLYRep R;
    R.carrier_dim = carrier_dim;
    R.beta = Matrix::identity(carrier_dim, f);
    R.rho.assign(algebra_dim, Matrix(carrier_dim, carrier_dim, f));
    R.theta.assign(size_t(algebra_dim) * algebra_dim, Matrix(carrier_dim, carrier_dim, f));
    return R;
}

HLYAlgebra twisted_semidirect_raw(const HLYAlgebra& H, const HLYRep& R, const Tensor& F,
                                  const Tensor& G, int dim_cap) {
    check_rep_shapes(H, R);
    const int n = H.dim, m = R.carrier_dim, total = n + m;
    if (total > dim_cap)
        throw EngineError("semidirect: total dimension " + std::to_string(total) +
                          " exceeds the cap " + std::to_string(dim_cap));
    const Field f = H.binary.field;
    const bool twisted = F.arity == 2;
    if (twisted) {
        if (F.in_dim != n || F.out_dim != m || G.arity != 3 || G.in_dim != n || G.out_dim != m)
            throw DimensionError("twisted semidirect: F must be (2,n,m), G must be (3,n,m)");
    }
    const std::vector<Matrix> dfam = d_map(R, H.alpha, H.binary);

    HLYAlgebra P;
    P.dim = total;
    P.alpha = Matrix(total, total, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) P.alpha.at(i, j) = H.alpha.at(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) P.alpha.at(n + i, n + j) = R.beta.at(i, j);

    auto embedA = [&](const Vec& v) {
        Vec r = zero_vec(total, f);
        for (int i = 0; i < n; ++i) r[i] = v[i];
        return r;
    };
    auto embedV = [&](const Vec& v) {
        Vec r = zero_vec(total, f);
        for (int i = 0; i < m; ++i) r[n + i] = v[i];
        return r;
    };

    P.binary = Tensor::from_basis_map(2, total, total, f, [&](const std::vector<int>& idx) {
        int i = idx[0], j = idx[1];
        if (i < n && j < n) {
            Vec v = embedA(H.binary.value_at({i, j}));
            if (twisted) v = add_vec(v, embedV(F.value_at({i, j})));
            return v;
        }
        if (i < n && j >= n) return embedV(R.rho[i].column(j - n));
        if (i >= n && j < n) return embedV(scale_vec(Scalar(-1, 1, f), R.rho[j].column(i - n)));
        return zero_vec(total, f);
    });

    P.ternary = Tensor::from_basis_map(3, total, total, f, [&](const std::vector<int>& idx) {
        int i = idx[0], j = idx[1], k = idx[2];
        int in_v = (i >= n) + (j >= n) + (k >= n);
        if (in_v >= 2) return zero_vec(total, f);
        if (in_v == 0) {
            Vec v = embedA(H.ternary.value_at({i, j, k}));
            if (twisted) v = add_vec(v, embedV(G.value_at({i, j, k})));
            return v;
        }
        if (k >= n) return embedV(dfam[size_t(i) * n + j].column(k - n));
        if (j >= n) return embedV(scale_vec(Scalar(-1, 1, f), R.theta_at(i, k).column(j - n)));
        return embedV(R.theta_at(j, k).column(i - n));
    });
    return P;
}

HLYAlgebra semidirect(const HLYAlgebra& H, const HLYRep& R, int dim_cap) {
    return twisted_semidirect_raw(H, R, Tensor(), Tensor(), dim_cap);
}

IdentityReport verify_rep_morphism(const RepMorphism& m, const HLYAlgebra& H1, const HLYRep& R1,
                                   const HLYAlgebra& H2, const HLYRep& R2, bool literal_twist_line,
                                   int cap) {
    check_rep_shapes(H1, R1);
    check_rep_shapes(H2, R2);
    if (m.phi.cols != H1.dim || m.phi.rows != H2.dim)
        throw DimensionError("rep morphism: phi must map the source algebra to the target");
    if (m.psi.cols != R1.carrier_dim || m.psi.rows != R2.carrier_dim)
        throw DimensionError("rep morphism: psi must map the source carrier to the target");
    IdentityReport rep;
    rep.cap = cap;

    if (literal_twist_line) {
        if (m.phi.cols != R1.carrier_dim || m.psi.rows != m.phi.rows)
            throw DimensionError("rep morphism: literal twist line needs dim A = dim V");
        report_matrix_failure(rep, "repmorph_twist_literal", {}, compose_linear(m.phi, R1.beta),
                              compose_linear(R2.beta, m.psi));
    } else {
        report_matrix_failure(rep, "repmorph_psi_beta", {}, compose_linear(m.psi, R1.beta),
                              compose_linear(R2.beta, m.psi));
        report_matrix_failure(rep, "repmorph_phi_alpha", {}, compose_linear(m.phi, H1.alpha),
                              compose_linear(H2.alpha, m.phi));
    }

    for (int i = 0; i < H1.dim; ++i)
        report_matrix_failure(rep, "repmorph_rho", {i}, compose_linear(m.psi, R1.rho[i]),
                              compose_linear(rho_of(R2.rho, m.phi.column(i)), m.psi));

    for (int i = 0; i < H1.dim; ++i)
        for (int j = 0; j < H1.dim; ++j)
            report_matrix_failure(rep, "repmorph_theta", {i, j}, compose_linear(m.psi, R1.theta_at(i, j)),
                                  compose_linear(theta_of(R2, m.phi.column(i), m.phi.column(j)), m.psi));
    return rep;
}

}  // namespace hly
