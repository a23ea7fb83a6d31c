#pragma once

// Dense exact linear algebra: coordinate vectors, matrices, Gaussian
// elimination (rank / kernel / solve).  No floating point anywhere.

#include <optional>
#include <vector>

#include "hly/field.hpp"

namespace hly {

using Vec = std::vector<Scalar>;

Vec zero_vec(int n, Field f);
Vec basis_vec(int n, int i, Field f);
bool is_zero_vec(const Vec& v);
Vec add_vec(const Vec& a, const Vec& b);
Vec sub_vec(const Vec& a, const Vec& b);
Vec scale_vec(const Scalar& c, const Vec& v);
Vec concat_vec(const Vec& a, const Vec& b);

struct Matrix {
    Field field;
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> a;   // row-major, rows*cols entries

    Matrix() = default;
    Matrix(int r, int c, Field f) : field(f), rows(r), cols(c), a(size_t(r) * c, Scalar::zero(f)) {}

    static Matrix identity(int n, Field f);

    Scalar& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const Scalar& at(int r, int c) const { return a[size_t(r) * cols + c]; }

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Vec apply(const Vec& v) const;          // rows-long result
    Vec column(int c) const;
    Matrix transpose() const;
};

Matrix compose_linear(const Matrix& a, const Matrix& b);   // a*b, i.e. a after b
Matrix add_mat(const Matrix& a, const Matrix& b);
Matrix sub_mat(const Matrix& a, const Matrix& b);
Matrix scale_mat(const Scalar& c, const Matrix& m);
Matrix mat_power(const Matrix& m, int k);                  // m square, k >= 0

// Matrix whose columns are the given vectors.
Matrix from_columns(const std::vector<Vec>& cols, int nrows, Field f);

int rank(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);

// One exact solution of m x = b, if any (free variables set to zero).
std::optional<Vec> solve(const Matrix& m, const Vec& b);

}  // namespace hly
