#include "hly/linalg.hpp"

namespace hly {

Vec zero_vec(int n, Field f) { return Vec(n, Scalar::zero(f)); }

Vec basis_vec(int n, int i, Field f) {
    Vec v = zero_vec(n, f);
    v[i] = Scalar::one(f);
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec add_vec(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vector size mismatch in add");
    Vec r = a;
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub_vec(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vector size mismatch in sub");
    Vec r = a;
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale_vec(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

Vec concat_vec(const Vec& a, const Vec& b) {
    Vec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Matrix Matrix::identity(int n, Field f) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    return true;
}

Vec Matrix::apply(const Vec& v) const {
    if (int(v.size()) != cols) throw DimensionError("matrix apply: size mismatch");
    Vec r = zero_vec(rows, field);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Vec Matrix::column(int c) const {
    Vec r = zero_vec(rows, field);
    for (int i = 0; i < rows; ++i) r[i] = at(i, c);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix t(cols, rows, field);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix compose_linear(const Matrix& a, const Matrix& b) {
    if (a.field != b.field) throw FieldMismatchError("compose_linear: mixed fields");
    if (a.cols != b.rows) throw DimensionError("compose_linear: inner dimension mismatch");
    Matrix r(a.rows, b.cols, a.field);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols; ++j)
                if (!b.at(k, j).is_zero()) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

Matrix add_mat(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw DimensionError("add_mat: shape mismatch");
    Matrix r = a;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += b.a[i];
    return r;
}

Matrix sub_mat(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw DimensionError("sub_mat: shape mismatch");
    Matrix r = a;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= b.a[i];
    return r;
}

Matrix scale_mat(const Scalar& c, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.a) x *= c;
    return r;
}

Matrix mat_power(const Matrix& m, int k) {
    if (m.rows != m.cols) throw DimensionError("mat_power: not square");
    Matrix r = Matrix::identity(m.rows, m.field);
    for (int i = 0; i < k; ++i) r = compose_linear(r, m);
    return r;
}

Matrix from_columns(const std::vector<Vec>& cols, int nrows, Field f) {
    Matrix m(nrows, int(cols.size()), f);
    for (int j = 0; j < int(cols.size()); ++j) {
        if (int(cols[j].size()) != nrows) throw DimensionError("from_columns: column length mismatch");
        for (int i = 0; i < nrows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
        Scalar inv = m.at(row, col).inverse();
        for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Scalar factor = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= factor * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(const Matrix& m) {
    Matrix w = m;
    return int(rref(w).size());
}

std::vector<Vec> kernel_basis(const Matrix& m) {
    Matrix w = m;
    std::vector<int> pivots = rref(w);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(m.cols, m.field);
        v[free] = Scalar::one(m.field);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -w.at(int(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (int(b.size()) != m.rows) throw DimensionError("solve: rhs length mismatch");
    Matrix aug(m.rows, m.cols + 1, m.field);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;   // inconsistent
    Vec x = zero_vec(m.cols, m.field);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), m.cols);
    return x;
}

}  // namespace hly
