#pragma once

#include "wz/tensor.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace wz {

// Recursive coproduct Delta: T -> T (x) T+ and the induced Delta+ on T+.
class Coproduct {
public:
    explicit Coproduct(KappaParam kappa = KappaParam()) : kappa_(kappa) {}

    const KappaParam& kappa() const { return kappa_; }

    Tensor operator()(const Symbol& s) const;
    Tensor of_integral(const Symbol& child) const;
    Tensor apply(const SymbolComb& comb) const;

    PlusTensor plus(const PlusGenerator& g) const;
    PlusTensor plus(const PlusMonomial& m) const;

    // (Delta (x) id) and (id (x) Delta+) on a tensor.
    Tensor3 left_then(const Tensor& t) const;
    Tensor3 right_then(const Tensor& t) const;

private:
    KappaParam kappa_;
};

// Rational character on T+ given on generators and extended multiplicatively.
using Character = std::map<PlusGenerator, Q>;

class UndefinedCharacter : public std::runtime_error {
public:
    explicit UndefinedCharacter(const std::string& generator)
        : std::runtime_error("character undefined on generator " + generator)
    {
    }
};

Q evaluate_character(const Character& f, const PlusMonomial& m);

using RationalComb = LinComb<Symbol, Q>;

// Gamma_f tau = (id (x) f) Delta tau.
RationalComb character_action(const Coproduct& delta, const Character& f, const Symbol& s);
RationalComb character_action(const Coproduct& delta, const Character& f, const RationalComb& v);

// (f * g)(sigma) = (f (x) g) Delta+ sigma on the given generators.
Character character_product(const Coproduct& delta, const Character& f, const Character& g,
                            const std::vector<PlusGenerator>& generators);

// Polynomial X^k as a plus monomial.
PlusMonomial x_monomial(int k0, int k1);

} // namespace wz
