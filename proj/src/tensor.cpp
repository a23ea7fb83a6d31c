#include "hly/tensor.hpp"

namespace hly {

Tensor::Tensor(int k, int in, int out, Field f) : field(f), arity(k), in_dim(in), out_dim(out) {
    size_t n = out;
    for (int i = 0; i < k; ++i) n *= size_t(in);
    entries.assign(n, Scalar::zero(f));
}

size_t Tensor::flat(const std::vector<int>& idx, int m) const {
    if (int(idx.size()) != arity) throw DimensionError("tensor index arity mismatch");
    size_t pos = 0;
    for (int s = 0; s < arity; ++s) {
        if (idx[s] < 0 || idx[s] >= in_dim) throw DimensionError("tensor index out of range");
        pos = pos * in_dim + idx[s];
    }
    if (m < 0 || m >= out_dim) throw DimensionError("tensor output index out of range");
    return pos * out_dim + m;
}

Vec Tensor::value_at(const std::vector<int>& idx) const {
    Vec v = zero_vec(out_dim, field);
    size_t base = flat(idx, 0);
    for (int m = 0; m < out_dim; ++m) v[m] = entries[base + m];
    return v;
}

Tensor Tensor::from_basis_map(int k, int in, int out, Field f,
                              const std::function<Vec(const std::vector<int>&)>& value_at) {
    Tensor t(k, in, out, f);
    for_each_tuple(k, in, [&](const std::vector<int>& idx) {
        Vec v = value_at(idx);
        if (int(v.size()) != out) throw DimensionError("from_basis_map: bad value length");
        size_t base = t.flat(idx, 0);
        for (int m = 0; m < out; ++m) t.entries[base + m] = v[m];
    });
    return t;
}

bool Tensor::is_zero() const {
    for (const auto& x : entries)
        if (!x.is_zero()) return false;
    return true;
}

bool Tensor::operator==(const Tensor& o) const {
    return arity == o.arity && in_dim == o.in_dim && out_dim == o.out_dim && entries == o.entries;
}

Tensor add_tensor(const Tensor& a, const Tensor& b) {
    if (a.arity != b.arity || a.in_dim != b.in_dim || a.out_dim != b.out_dim)
        throw DimensionError("add_tensor: shape mismatch");
    Tensor r = a;
    for (size_t i = 0; i < r.entries.size(); ++i) r.entries[i] += b.entries[i];
    return r;
}

Tensor scale_tensor(const Scalar& c, const Tensor& t) {
    Tensor r = t;
    for (auto& x : r.entries) x *= c;
    return r;
}

Tensor zero_like(const Tensor& t) { return Tensor(t.arity, t.in_dim, t.out_dim, t.field); }

Tensor compose_out(const Matrix& m, const Tensor& t) {
    if (m.cols != t.out_dim) throw DimensionError("compose_out: map domain != tensor output");
    Tensor r(t.arity, t.in_dim, m.rows, t.field);
    size_t tuples = t.entries.size() / t.out_dim;
    for (size_t pos = 0; pos < tuples; ++pos) {
        for (int j = 0; j < t.out_dim; ++j) {
            const Scalar& v = t.entries[pos * t.out_dim + j];
            if (v.is_zero()) continue;
            for (int i = 0; i < m.rows; ++i)
                if (!m.at(i, j).is_zero())
                    r.entries[pos * m.rows + i] += m.at(i, j) * v;
        }
    }
    return r;
}

Vec tensor_eval(const Tensor& t, const std::vector<Vec>& args) {
    if (int(args.size()) != t.arity)
        throw DimensionError("tensor_eval: expected " + std::to_string(t.arity) + " arguments, got " +
                             std::to_string(args.size()));
    for (int s = 0; s < t.arity; ++s)
        if (int(args[s].size()) != t.in_dim)
            throw DimensionError("tensor_eval: argument in slot " + std::to_string(s) + " has length " +
                                 std::to_string(args[s].size()) + ", expected " + std::to_string(t.in_dim));

    Vec out = zero_vec(t.out_dim, t.field);
    // expand over supports, slot by slot
    std::vector<int> idx(t.arity, 0);
    std::function<void(int, const Scalar&)> rec = [&](int slot, const Scalar& coeff) {
        if (slot == t.arity) {
            size_t base = t.flat(idx, 0);
            for (int m = 0; m < t.out_dim; ++m)
                if (!t.entries[base + m].is_zero()) out[m] += coeff * t.entries[base + m];
            return;
        }
        for (int i = 0; i < t.in_dim; ++i) {
            if (args[slot][i].is_zero()) continue;
            idx[slot] = i;
            rec(slot + 1, coeff * args[slot][i]);
        }
    };
    rec(0, Scalar::one(t.field));
    return out;
}

void tensor_eval_acc(const Tensor& t, const std::vector<const Vec*>& args, int sign, Vec& out) {
    if (int(args.size()) != t.arity) throw DimensionError("tensor_eval_acc: arity mismatch");
    static thread_local std::vector<int> idx;
    idx.assign(t.arity, 0);
    std::function<void(int, const Scalar&)> rec = [&](int slot, const Scalar& coeff) {
        if (slot == t.arity) {
            size_t base = t.flat(idx, 0);
            for (int m = 0; m < t.out_dim; ++m) {
                const Scalar& e = t.entries[base + m];
                if (e.is_zero()) continue;
                if (sign > 0)
                    out[m] += coeff * e;
                else
                    out[m] -= coeff * e;
            }
            return;
        }
        const Vec& a = *args[slot];
        for (int i = 0; i < t.in_dim; ++i) {
            if (a[i].is_zero()) continue;
            idx[slot] = i;
            rec(slot + 1, coeff * a[i]);
        }
    };
    rec(0, Scalar::one(t.field));
}

void mat_apply_acc(const Matrix& m, const Scalar* src, int sign, Vec& out) {
    for (int c = 0; c < m.cols; ++c) {
        if (src[c].is_zero()) continue;
        for (int r = 0; r < m.rows; ++r) {
            const Scalar& e = m.at(r, c);
            if (e.is_zero()) continue;
            if (sign > 0)
                out[r] += e * src[c];
            else
                out[r] -= e * src[c];
        }
    }
}

void for_each_tuple(int arity, int dim, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(arity, 0);
    if (arity == 0) { fn(idx); return; }
    while (true) {
        fn(idx);
        int s = arity - 1;
        while (s >= 0 && ++idx[s] == dim) idx[s--] = 0;
        if (s < 0) break;
    }
}

}  // namespace hly
