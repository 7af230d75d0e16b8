#include "wz/plus.hpp"

#include <algorithm>

namespace wz {

PlusGenerator PlusGenerator::x0()
{
    PlusGenerator g;
    g.kind_ = Kind::X0;
    g.make_key();
    return g;
}

PlusGenerator PlusGenerator::x1()
{
    PlusGenerator g;
    g.kind_ = Kind::X1;
    g.make_key();
    return g;
}

std::optional<PlusGenerator> PlusGenerator::jk(int k0, int k1, const Symbol& tau, const KappaParam& kappa)
{
    if (tau.is_polynomial())
        return std::nullopt;
    Q bound = tau.homogeneity().at(kappa) + 2;
    if (!(Q(2 * k0 + k1) < bound))
        return std::nullopt;
    return jk_unchecked(k0, k1, tau);
}

PlusGenerator PlusGenerator::jk_unchecked(int k0, int k1, const Symbol& tau)
{
    PlusGenerator g;
    g.kind_ = Kind::J;
    g.k0_ = k0;
    g.k1_ = k1;
    g.arg_ = tau;
    g.make_key();
    return g;
}

Homogeneity PlusGenerator::homogeneity() const
{
    switch (kind_) {
    case Kind::X0:
        return {4, 0};
    case Kind::X1:
        return {2, 0};
    case Kind::J:
        break;
    }
    return arg_.homogeneity() + Homogeneity{4 - 2 * length(), 0};
}

void PlusGenerator::make_key()
{
    switch (kind_) {
    case Kind::X0:
        key_ = "X0";
        return;
    case Kind::X1:
        key_ = "X1";
        return;
    case Kind::J:
        break;
    }
    const std::string a = arg_.str();
    if (k0_ == 0 && k1_ == 0)
        key_ = "J(" + a + ")";
    else if (k0_ == 0 && k1_ == 1)
        key_ = "J'(" + a + ")";
    else if (k0_ == 0 && k1_ == 2)
        key_ = "J''(" + a + ")";
    else if (k0_ == 1 && k1_ == 0)
        key_ = "Jdot(" + a + ")";
    else
        key_ = "Jk((" + std::to_string(k0_) + "," + std::to_string(k1_) + ")," + a + ")";
}

PlusMonomial::PlusMonomial(std::vector<PlusGenerator> factors) : factors_(std::move(factors))
{
    std::sort(factors_.begin(), factors_.end());
    make_key();
}

PlusMonomial PlusMonomial::operator*(const PlusMonomial& o) const
{
    std::vector<PlusGenerator> f = factors_;
    f.insert(f.end(), o.factors_.begin(), o.factors_.end());
    return PlusMonomial(std::move(f));
}

bool PlusMonomial::operator<(const PlusMonomial& o) const
{
    if (factors_.size() != o.factors_.size())
        return factors_.size() < o.factors_.size();
    return key_ < o.key_;
}

void PlusMonomial::make_key()
{
    if (factors_.empty()) {
        key_ = "1";
        return;
    }
    key_.clear();
    for (std::size_t i = 0; i < factors_.size();) {
        std::size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i])
            ++j;
        if (!key_.empty())
            key_ += "*";
        key_ += factors_[i].str();
        if (j - i > 1)
            key_ += "^" + std::to_string(j - i);
        i = j;
    }
}

PlusElement plus_product(const PlusElement& a, const PlusElement& b)
{
    PlusElement r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            r.add(ma * mb, ca * cb);
    return r;
}

PlusElement plus_one() { return PlusElement(PlusMonomial::unit(), CoeffPoly(1)); }

PlusElement plus_of(const PlusGenerator& g) { return PlusElement(PlusMonomial::of(g), CoeffPoly(1)); }

} // namespace wz
