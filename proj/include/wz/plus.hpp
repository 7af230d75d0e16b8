#pragma once

#include "wz/coeff_poly.hpp"
#include "wz/lincomb.hpp"
#include "wz/symbol.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wz {

// Generator of the plus algebra: X0, X1 or J_k(tau).
class PlusGenerator {
public:
    enum class Kind { X0, X1, J };

    static PlusGenerator x0();
    static PlusGenerator x1();
    // J_k(tau); empty when tau is polynomial or |k| >= |tau| + 2 at kappa.
    static std::optional<PlusGenerator> jk(int k0, int k1, const Symbol& tau, const KappaParam& kappa);
    // J_k(tau) without the admissibility test; used by the parser.
    static PlusGenerator jk_unchecked(int k0, int k1, const Symbol& tau);

    Kind kind() const { return kind_; }
    int k0() const { return k0_; }
    int k1() const { return k1_; }
    int length() const { return 2 * k0_ + k1_; }
    const Symbol& arg() const { return arg_; }
    Homogeneity homogeneity() const;
    const std::string& str() const { return key_; }

    bool operator==(const PlusGenerator& o) const { return key_ == o.key_; }
    bool operator<(const PlusGenerator& o) const { return key_ < o.key_; }

private:
    PlusGenerator() = default;
    void make_key();

    Kind kind_ = Kind::X0;
    int k0_ = 0;
    int k1_ = 0;
    Symbol arg_;
    std::string key_;
};

// Commutative monomial over plus generators; the empty monomial is the unit.
class PlusMonomial {
public:
    PlusMonomial() { make_key(); }
    explicit PlusMonomial(std::vector<PlusGenerator> factors);
    static PlusMonomial unit() { return PlusMonomial(); }
    static PlusMonomial of(const PlusGenerator& g) { return PlusMonomial({g}); }

    const std::vector<PlusGenerator>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    std::size_t degree() const { return factors_.size(); }
    PlusMonomial operator*(const PlusMonomial& o) const;
    const std::string& str() const { return key_; }

    bool operator==(const PlusMonomial& o) const { return key_ == o.key_; }
    bool operator<(const PlusMonomial& o) const;

private:
    void make_key();

    std::vector<PlusGenerator> factors_;
    std::string key_;
};

using PlusElement = LinComb<PlusMonomial, CoeffPoly>;

PlusElement plus_product(const PlusElement& a, const PlusElement& b);
PlusElement plus_one();
PlusElement plus_of(const PlusGenerator& g);

} // namespace wz
