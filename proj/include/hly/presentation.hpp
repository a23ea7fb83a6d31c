#pragma once

// JSON interchange for algebra presentations.  Files carry sparse entry
// lists (dense tensors stay in memory only); serialization is canonical:
// entries sorted lexicographically by index tuple, zero entries omitted,
// keys ordered.  parse(serialize(p)) == p and serialize(parse(x)) is a
// fixed point, so fixtures diff cleanly.
//
// Entry formats, all indices 0-based:
//   matrix         [row, col, num, den]
//   arity-2 tensor [i, j, m, num, den]
//   arity-3 tensor [i, j, k, m, num, den]
//   rho family     [x, row, col, num, den]
//   theta family   [x, y, row, col, num, den]
// In GF(p) mode every denominator must be 1.

#include <map>
#include <optional>
#include <string>

#include "hly/deformations.hpp"
#include "hly/ns_algebras.hpp"

namespace hly {

struct ParseError : EngineError {
    explicit ParseError(const std::string& what) : EngineError(what) {}
};

struct Block {
    std::string type;
    std::optional<HomLieAlgebra> hom_lie;
    std::optional<HLYAlgebra> hly;
    std::optional<HLYRep> rep;
    std::optional<CocyclePair> pair;   // raw container; validity is checked where used
    int pair_algebra_dim = 0;
    int pair_carrier_dim = 0;
    std::optional<Matrix> op;          // a plain linear map
    std::optional<Scalar> lambda, mu;
    std::optional<NSHLY> ns_hly;
    std::optional<NSHomLie> ns_lie;
    std::optional<std::vector<Matrix>> deformation;
};

struct PresentationFile {
    std::string format_version = "1";
    Field field;
    std::map<std::string, Block> blocks;
};

PresentationFile parse_presentation(const std::string& text, bool strict = false);
PresentationFile load_presentation(const std::string& path, bool strict = false);
std::string serialize_presentation(const PresentationFile& p);

}  // namespace hly
