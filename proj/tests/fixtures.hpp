#pragma once

// Shared desk fixtures.  Basis vectors e1,e2,e3 are indices 0,1,2.
//
//   zero3 : dim 3, all brackets zero, alpha = id
//   h3    : Heisenberg, [e1,e2] = e3, alpha = id
//   h3q   : twist of h3 by phi = diag(1,2,2): alpha = diag(1,2,2), [e1,e2]' = 2 e3
//   P1    : e1 -> e1, e2 -> 0, e3 -> 0 (weight-zero Rota-Baxter map on h3)

#include "hly/structures.hpp"

namespace fixtures {

using namespace hly;

inline Field Q() { return Field::rationals(); }

inline Scalar q(std::int64_t n, std::int64_t d = 1) { return Scalar(n, d, Q()); }

inline HomLieAlgebra zero3_lie() {
    HomLieAlgebra L;
    L.dim = 3;
    L.alpha = Matrix::identity(3, Q());
    L.bracket = Tensor(2, 3, 3, Q());
    return L;
}

inline HLYAlgebra zero3() {
    return hly_from_hom_lie_brackets(zero3_lie());
}

inline HomLieAlgebra h3() {
    HomLieAlgebra L = zero3_lie();
    L.bracket.at({0, 1}, 2) = q(1);
    L.bracket.at({1, 0}, 2) = q(-1);
    return L;
}

inline Matrix phi122() {
    Matrix m = Matrix::identity(3, Q());
    m.at(1, 1) = q(2);
    m.at(2, 2) = q(2);
    return m;
}

inline HomLieAlgebra h3q() {
    HomLieAlgebra L;
    L.dim = 3;
    L.alpha = phi122();
    L.bracket = Tensor(2, 3, 3, Q());
    L.bracket.at({0, 1}, 2) = q(2);
    L.bracket.at({1, 0}, 2) = q(-2);
    return L;
}

inline Matrix p1() {
    Matrix m(3, 3, Q());
    m.at(0, 0) = q(1);
    return m;
}

}  // namespace fixtures
