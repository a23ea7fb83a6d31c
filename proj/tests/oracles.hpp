#pragma once

// Test-only oracles, deliberately independent of the engine's evaluation and
// elimination paths: full-enumeration multilinear evaluation (no support
// pruning) and a bottom-up / right-to-left elimination for ranks.

#include <cstdint>
#include <vector>

#include "hly/tensor.hpp"

namespace oracle {

using hly::Field;
using hly::Matrix;
using hly::Scalar;
using hly::Tensor;
using hly::Vec;

// Multilinear evaluation by brute force over every index tuple.
inline Vec naive_eval(const Tensor& t, const std::vector<Vec>& args) {
    Vec out = hly::zero_vec(t.out_dim, t.field);
    std::vector<int> idx(t.arity, 0);
    const size_t tuples = t.entries.size() / t.out_dim;
    for (size_t pos = 0; pos < tuples; ++pos) {
        size_t rest = pos;
        for (int s = t.arity - 1; s >= 0; --s) {
            idx[s] = int(rest % t.in_dim);
            rest /= t.in_dim;
        }
        Scalar coeff = Scalar::one(t.field);
        for (int s = 0; s < t.arity; ++s) coeff = coeff * args[s][idx[s]];
        for (int m = 0; m < t.out_dim; ++m)
            out[m] = out[m] + coeff * t.entries[pos * t.out_dim + m];
    }
    return out;
}

// Rank via elimination that walks columns right-to-left and picks the last
// usable pivot row, a different path from the engine's RREF.
inline int naive_rank(Matrix m) {
    std::vector<bool> used(m.rows, false);
    int rank = 0;
    for (int col = m.cols - 1; col >= 0; --col) {
        int piv = -1;
        for (int r = m.rows - 1; r >= 0; --r)
            if (!used[r] && !m.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        used[piv] = true;
        ++rank;
        for (int r = 0; r < m.rows; ++r) {
            if (r == piv || m.at(r, col).is_zero()) continue;
            Scalar factor = m.at(r, col) / m.at(piv, col);
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = m.at(r, c) - factor * m.at(piv, c);
        }
    }
    return rank;
}

// Deterministic PRNG for property tests.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // integer in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    Scalar rational(std::int64_t max_num = 5, std::int64_t max_den = 3) {
        std::int64_t n = std::int64_t(below(2 * max_num + 1)) - max_num;
        std::int64_t d = std::int64_t(below(max_den)) + 1;
        return Scalar(n, d, Field::rationals());
    }
};

}  // namespace oracle
