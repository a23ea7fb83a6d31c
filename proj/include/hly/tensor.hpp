#pragma once

// Dense structure-constant tensors.  A Tensor of arity k stores a k-linear
// map (K^in_dim)^k -> K^out_dim; arity 2 houses a bilinear bracket's
// constants c_{ij}^m, arity 3 a ternary bracket's d_{ijk}^m.  Target
// dimensions are small (<= 12), so dense storage wins over sparse maps.

#include <functional>
#include <vector>

#include "hly/linalg.hpp"

namespace hly {

struct Tensor {
    Field field;
    int arity = 0;
    int in_dim = 0;
    int out_dim = 0;
    std::vector<Scalar> entries;   // index: ((i1*d + i2)*d + ...)*out_dim + m

    Tensor() = default;
    Tensor(int k, int in, int out, Field f);

    // builds entries from a map on basis tuples
    static Tensor from_basis_map(int k, int in, int out, Field f,
                                 const std::function<Vec(const std::vector<int>&)>& value_at);

    size_t flat(const std::vector<int>& idx, int m) const;
    const Scalar& at(const std::vector<int>& idx, int m) const { return entries[flat(idx, m)]; }
    Scalar& at(const std::vector<int>& idx, int m) { return entries[flat(idx, m)]; }

    // value on a basis tuple, as a coordinate vector
    Vec value_at(const std::vector<int>& idx) const;

    bool is_zero() const;
    bool operator==(const Tensor& o) const;
    bool operator!=(const Tensor& o) const { return !(*this == o); }
};

Tensor add_tensor(const Tensor& a, const Tensor& b);
Tensor scale_tensor(const Scalar& c, const Tensor& t);
Tensor zero_like(const Tensor& t);

// m o t : postcompose the output with a linear map
Tensor compose_out(const Matrix& m, const Tensor& t);

// Multilinear evaluation at coordinate vectors, expanding over supports.
Vec tensor_eval(const Tensor& t, const std::vector<Vec>& args);

// Allocation-free accumulation variants for the coboundary inner loops:
// out += sign * t(args...) and out += sign * m(src), with src pointing at
// out_dim contiguous entries.
void tensor_eval_acc(const Tensor& t, const std::vector<const Vec*>& args, int sign, Vec& out);
void mat_apply_acc(const Matrix& m, const Scalar* src, int sign, Vec& out);

// Iterate all basis tuples of given arity/dimension (row-major counter).
void for_each_tuple(int arity, int dim, const std::function<void(const std::vector<int>&)>& fn);

}  // namespace hly
