#include "wz/symbol.hpp"

#include <algorithm>
#include <stdexcept>

namespace wz {

namespace {

const Homogeneity kXiHom{-3, -1};

std::string poly_string(int k0, int k1)
{
    std::string s;
    auto put = [&](const char* name, int p) {
        if (p == 0)
            return;
        if (!s.empty())
            s += "*";
        s += name;
        if (p > 1)
            s += "^" + std::to_string(p);
    };
    put("X0", k0);
    put("X1", k1);
    return s;
}

} // namespace

Symbol::Symbol() : Symbol(one()) {}

Symbol Symbol::one()
{
    static const Symbol s = build(false, 0, 0, {});
    return s;
}

Symbol Symbol::xi()
{
    static const Symbol s = build(true, 0, 0, {});
    return s;
}

Symbol Symbol::poly(int k0, int k1)
{
    if (k0 < 0 || k1 < 0)
        throw std::invalid_argument("negative multiindex");
    return build(false, k0, k1, {});
}

std::optional<Symbol> Symbol::integrate(const Symbol& tau)
{
    if (tau.is_polynomial())
        return std::nullopt;
    return build(false, 0, 0, {tau});
}

Symbol Symbol::multiply(const Symbol& a, const Symbol& b)
{
    if (a.has_xi() && b.has_xi())
        throw std::domain_error("product " + a.str() + " * " + b.str() + " carries two noise factors");
    std::vector<Symbol> ints = a.integrals();
    ints.insert(ints.end(), b.integrals().begin(), b.integrals().end());
    return build(a.has_xi() || b.has_xi(), a.k0() + b.k0(), a.k1() + b.k1(), std::move(ints));
}

Symbol::Kind Symbol::kind() const
{
    const bool poly = node_->k0 != 0 || node_->k1 != 0;
    const std::size_t n = node_->ints.size();
    if (!node_->xi && !poly && n == 0)
        return Kind::One;
    if (node_->xi && !poly && n == 0)
        return Kind::Xi;
    if (!node_->xi && poly && n == 0)
        return Kind::Poly;
    if (!node_->xi && !poly && n == 1)
        return Kind::Int;
    return Kind::Product;
}

Symbol Symbol::without_poly() const
{
    if (node_->k0 == 0 && node_->k1 == 0)
        return *this;
    return build(node_->xi, 0, 0, node_->ints);
}

bool Symbol::operator<(const Symbol& o) const
{
    if (node_ == o.node_)
        return false;
    const auto& a = node_->hom;
    const auto& b = o.node_->hom;
    if (!(a == b))
        return asymptotic_less(a, b);
    return node_->key < o.node_->key;
}

Symbol Symbol::build(bool xi, int k0, int k1, std::vector<Symbol> ints)
{
    std::sort(ints.begin(), ints.end());
    auto node = std::make_shared<Node>();
    node->xi = xi;
    node->k0 = k0;
    node->k1 = k1;
    node->hom = Homogeneity{2 * (2 * k0 + k1), 0};
    if (xi)
        node->hom = node->hom + kXiHom;
    for (const auto& c : ints)
        node->hom = node->hom + c.homogeneity() + Homogeneity{4, 0};

    struct Factor {
        Homogeneity hom;
        std::string text;
        int power;
    };
    std::vector<Factor> factors;
    if (xi)
        factors.push_back({kXiHom, "Xi", 1});
    if (k0 != 0 || k1 != 0)
        factors.push_back({Homogeneity{2 * (2 * k0 + k1), 0}, poly_string(k0, k1), 1});
    for (const auto& c : ints) {
        std::string t = "I[" + c.str() + "]";
        if (!factors.empty() && factors.back().text == t)
            ++factors.back().power;
        else
            factors.push_back({c.homogeneity() + Homogeneity{4, 0}, t, 1});
    }
    std::stable_sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
        if (!(a.hom == b.hom))
            return asymptotic_less(a.hom, b.hom);
        return a.text < b.text;
    });
    std::string key;
    for (const auto& f : factors) {
        if (!key.empty())
            key += "*";
        key += f.text;
        if (f.power > 1)
            key += "^" + std::to_string(f.power);
    }
    node->key = key.empty() ? "1" : key;
    node->ints = std::move(ints);
    Symbol s(one_tag{});
    s.node_ = std::move(node);
    return s;
}

Homogeneity homogeneity(const Symbol& s) { return s.homogeneity(); }

} // namespace wz
