#include "wz/tensor.hpp"

namespace wz {

Tensor tensor_product(const Tensor& a, const Tensor& b)
{
    Tensor r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b)
            r.add({Symbol::multiply(ka.left, kb.left), ka.right * kb.right}, ca * cb);
    return r;
}

Tensor simple_tensor(const Symbol& s, const PlusMonomial& m, const CoeffPoly& c)
{
    return Tensor({s, m}, c);
}

SymbolComb single(const Symbol& s, const CoeffPoly& c) { return SymbolComb(s, c); }

int coefficient_degree(const Tensor& t)
{
    int d = 0;
    for (const auto& [k, c] : t)
        d = std::max(d, c.degree());
    return d;
}

} // namespace wz
