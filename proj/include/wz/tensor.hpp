#pragma once

#include "wz/plus.hpp"

#include <tuple>

namespace wz {

using SymbolComb = LinComb<Symbol, CoeffPoly>;

struct TensorKey {
    Symbol left;
    PlusMonomial right;

    bool operator<(const TensorKey& o) const
    {
        if (left != o.left)
            return left < o.left;
        return right < o.right;
    }
    bool operator==(const TensorKey& o) const { return left == o.left && right == o.right; }
};

// Element of T (x) T+.
using Tensor = LinComb<TensorKey, CoeffPoly>;

struct Tensor3Key {
    Symbol left;
    PlusMonomial middle;
    PlusMonomial right;

    bool operator<(const Tensor3Key& o) const
    {
        if (left != o.left)
            return left < o.left;
        if (!(middle == o.middle))
            return middle < o.middle;
        return right < o.right;
    }
    bool operator==(const Tensor3Key& o) const
    {
        return left == o.left && middle == o.middle && right == o.right;
    }
};

// Element of T (x) T+ (x) T+.
using Tensor3 = LinComb<Tensor3Key, CoeffPoly>;

struct PlusPairKey {
    PlusMonomial left;
    PlusMonomial right;

    bool operator<(const PlusPairKey& o) const
    {
        if (!(left == o.left))
            return left < o.left;
        return right < o.right;
    }
    bool operator==(const PlusPairKey& o) const { return left == o.left && right == o.right; }
};

// Element of T+ (x) T+.
using PlusTensor = LinComb<PlusPairKey, CoeffPoly>;

Tensor tensor_product(const Tensor& a, const Tensor& b);
Tensor simple_tensor(const Symbol& s, const PlusMonomial& m, const CoeffPoly& c = CoeffPoly(1));
SymbolComb single(const Symbol& s, const CoeffPoly& c = CoeffPoly(1));

// Highest polynomial degree in (c, c1, c2) over all coefficients.
int coefficient_degree(const Tensor& t);

} // namespace wz
