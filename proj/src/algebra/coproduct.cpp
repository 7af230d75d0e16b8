#include "wz/coproduct.hpp"

namespace wz {

namespace {

Q inverse_factorial(int a, int b) { return Q(1) / (factorial(a) * factorial(b)); }

// Delta X_i = X_i (x) 1 + 1 (x) X_i.
Tensor delta_x(bool time)
{
    Symbol x = time ? Symbol::poly(1, 0) : Symbol::poly(0, 1);
    PlusGenerator g = time ? PlusGenerator::x0() : PlusGenerator::x1();
    Tensor t = simple_tensor(x, PlusMonomial::unit());
    t.add({Symbol::one(), PlusMonomial::of(g)}, CoeffPoly(1));
    return t;
}

PlusTensor plus_product(const PlusTensor& a, const PlusTensor& b)
{
    PlusTensor r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b)
            r.add({ka.left * kb.left, ka.right * kb.right}, ca * cb);
    return r;
}

} // namespace

PlusMonomial x_monomial(int k0, int k1)
{
    std::vector<PlusGenerator> f;
    for (int i = 0; i < k0; ++i)
        f.push_back(PlusGenerator::x0());
    for (int i = 0; i < k1; ++i)
        f.push_back(PlusGenerator::x1());
    return PlusMonomial(std::move(f));
}

Tensor Coproduct::operator()(const Symbol& s) const
{
    Tensor t = simple_tensor(Symbol::one(), PlusMonomial::unit());
    if (s.has_xi())
        t = simple_tensor(Symbol::xi(), PlusMonomial::unit());
    for (int i = 0; i < s.k0(); ++i)
        t = tensor_product(t, delta_x(true));
    for (int i = 0; i < s.k1(); ++i)
        t = tensor_product(t, delta_x(false));
    for (const auto& child : s.integrals())
        t = tensor_product(t, of_integral(child));
    return t;
}

Tensor Coproduct::of_integral(const Symbol& child) const
{
    Tensor r;
    for (const auto& [key, c] : (*this)(child)) {
        if (auto integ = Symbol::integrate(key.left))
            r.add({*integ, key.right}, c);
    }
    const Q bound = child.homogeneity().at(kappa_) + 2;
    for (int m0 = 0; Q(2 * m0) < bound; ++m0)
        for (int m1 = 0; Q(2 * m0 + m1) < bound; ++m1) {
            auto j = PlusGenerator::jk(m0, m1, child, kappa_);
            if (!j)
                continue;
            for (int l0 = 0; l0 <= m0; ++l0)
                for (int l1 = 0; l1 <= m1; ++l1) {
                    Q coeff = inverse_factorial(l0, l1) * inverse_factorial(m0 - l0, m1 - l1);
                    PlusMonomial right = x_monomial(m0 - l0, m1 - l1) * PlusMonomial::of(*j);
                    r.add({Symbol::poly(l0, l1), right}, CoeffPoly(coeff));
                }
        }
    return r;
}

Tensor Coproduct::apply(const SymbolComb& comb) const
{
    Tensor r;
    for (const auto& [s, c] : comb)
        r += (*this)(s).scaled(c);
    return r;
}

PlusTensor Coproduct::plus(const PlusGenerator& g) const
{
    PlusTensor r;
    if (g.kind() != PlusGenerator::Kind::J) {
        r.add({PlusMonomial::of(g), PlusMonomial::unit()}, CoeffPoly(1));
        r.add({PlusMonomial::unit(), PlusMonomial::of(g)}, CoeffPoly(1));
        return r;
    }
    // Delta+ J_k tau = sum_n (J_{k+n} (x) (-X)^n/n!) Delta tau + 1 (x) J_k tau.
    for (const auto& [key, c] : (*this)(g.arg())) {
        const Q bound = key.left.homogeneity().at(kappa_) + 2;
        for (int n0 = 0; Q(2 * (g.k0() + n0) + g.k1()) < bound; ++n0)
            for (int n1 = 0; Q(2 * (g.k0() + n0) + g.k1() + n1) < bound; ++n1) {
                auto j = PlusGenerator::jk(g.k0() + n0, g.k1() + n1, key.left, kappa_);
                if (!j)
                    continue;
                Q coeff = inverse_factorial(n0, n1);
                if ((n0 + n1) % 2 == 1)
                    coeff = -coeff;
                r.add({PlusMonomial::of(*j), x_monomial(n0, n1) * key.right}, c * CoeffPoly(coeff));
            }
    }
    r.add({PlusMonomial::unit(), PlusMonomial::of(g)}, CoeffPoly(1));
    return r;
}

PlusTensor Coproduct::plus(const PlusMonomial& m) const
{
    PlusTensor r;
    r.add({PlusMonomial::unit(), PlusMonomial::unit()}, CoeffPoly(1));
    for (const auto& g : m.factors())
        r = plus_product(r, plus(g));
    return r;
}

Tensor3 Coproduct::left_then(const Tensor& t) const
{
    Tensor3 r;
    for (const auto& [key, c] : t)
        for (const auto& [k2, c2] : (*this)(key.left))
            r.add({k2.left, k2.right, key.right}, c * c2);
    return r;
}

Tensor3 Coproduct::right_then(const Tensor& t) const
{
    Tensor3 r;
    for (const auto& [key, c] : t)
        for (const auto& [k2, c2] : plus(key.right))
            r.add({key.left, k2.left, k2.right}, c * c2);
    return r;
}

Q evaluate_character(const Character& f, const PlusMonomial& m)
{
    Q r(1);
    for (const auto& g : m.factors()) {
        auto it = f.find(g);
        if (it == f.end())
            throw UndefinedCharacter(g.str());
        r *= it->second;
    }
    return r;
}

RationalComb character_action(const Coproduct& delta, const Character& f, const Symbol& s)
{
    RationalComb r;
    for (const auto& [key, c] : delta(s)) {
        if (!c.is_constant())
            throw std::domain_error("character action needs rational coefficients");
        r.add(key.left, c.constant_term() * evaluate_character(f, key.right));
    }
    return r;
}

RationalComb character_action(const Coproduct& delta, const Character& f, const RationalComb& v)
{
    RationalComb r;
    for (const auto& [s, c] : v)
        r += character_action(delta, f, s).scaled(c);
    return r;
}

Character character_product(const Coproduct& delta, const Character& f, const Character& g,
                            const std::vector<PlusGenerator>& generators)
{
    Character h;
    for (const auto& gen : generators) {
        Q v(0);
        for (const auto& [key, c] : delta.plus(gen))
            v += c.constant_term() * evaluate_character(f, key.left) * evaluate_character(g, key.right);
        h[gen] = v;
    }
    return h;
}

} // namespace wz
