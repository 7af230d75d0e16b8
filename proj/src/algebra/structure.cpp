#include "wz/structure.hpp"

#include <algorithm>
#include <set>

namespace wz {

namespace named {

namespace {
Symbol I(const Symbol& s) { return *Symbol::integrate(s); }
Symbol mul(const Symbol& a, const Symbol& b) { return Symbol::multiply(a, b); }
} // namespace

Symbol xi() { return Symbol::xi(); }
Symbol one() { return Symbol::one(); }
Symbol x1() { return Symbol::poly(0, 1); }
Symbol i_xi() { return I(xi()); }
Symbol xi2() { return mul(xi(), i_xi()); }
Symbol xi3() { return mul(xi(), I(xi2())); }
Symbol xi3b() { return mul(xi2(), i_xi()); }
Symbol xi_x() { return mul(xi(), x1()); }
Symbol xi4() { return mul(xi(), I(xi3())); }
Symbol xi4b() { return mul(xi3b(), i_xi()); }
Symbol xi4c() { return mul(xi(), I(xi3b())); }
Symbol xi4e() { return mul(xi2(), I(xi2())); }
Symbol xi22() { return mul(xi(), I(i_xi())); }
Symbol xi2x() { return mul(xi(), I(xi_x())); }
Symbol x_xi2() { return mul(xi2(), x1()); }
Symbol i_xi_sq() { return mul(i_xi(), i_xi()); }
Symbol i_xi2() { return I(xi2()); }

std::vector<Symbol> w0_list()
{
    return {xi(),  xi2(),  xi3(),   xi3b(),    xi_x(),    xi4(),   xi4c(), xi4e(), xi4b(),
            xi2x(), x_xi2(), one(), i_xi_sq(), i_xi2(), xi22(), i_xi(), x1()};
}

std::vector<Symbol> w_star_list() { return {xi(), xi2(), xi3(), xi3b(), xi_x(), i_xi()}; }

} // namespace named

namespace {

bool contains(const std::vector<Symbol>& v, const Symbol& s)
{
    return std::binary_search(v.begin(), v.end(), s);
}

} // namespace

std::vector<Symbol> StructureSets::non_positive() const
{
    std::vector<Symbol> r;
    for (const auto& s : W)
        if (s.homogeneity().at(kappa) <= Q(0))
            r.push_back(s);
    return r;
}

bool StructureSets::in_W(const Symbol& s) const { return contains(W, s); }
bool StructureSets::in_W0(const Symbol& s) const { return contains(W0, s); }
bool StructureSets::in_W_star(const Symbol& s) const { return contains(W_star, s); }

StructureSets generate_structure(const KappaParam& kappa, Homogeneity zeta)
{
    StructureSets out;
    out.kappa = kappa;
    out.zeta = zeta;

    // U is grown up to zeta + 3/2 + kappa so that Xi*U is complete below zeta.
    const Q bound = (zeta + Homogeneity{3, 1}).at(kappa);
    const Q cap = zeta.at(kappa);
    auto fits = [&](const Symbol& s) { return s.homogeneity().at(kappa) <= bound; };

    std::set<Symbol> u;
    std::vector<Symbol> frontier;
    auto insert = [&](const Symbol& s) {
        if (s.poly_length() > kMaxPolyLength || !fits(s))
            return;
        if (u.insert(s).second)
            frontier.push_back(s);
    };
    insert(Symbol::one());
    insert(Symbol::poly(1, 0));
    insert(Symbol::poly(0, 1));
    while (!frontier.empty()) {
        std::vector<Symbol> current;
        current.swap(frontier);
        for (const auto& s : current) {
            if (auto i = Symbol::integrate(s))
                insert(*i);
            if (auto i = Symbol::integrate(Symbol::multiply(Symbol::xi(), s)))
                insert(*i);
            std::vector<Symbol> snapshot(u.begin(), u.end());
            for (const auto& t : snapshot)
                insert(Symbol::multiply(s, t));
        }
    }

    std::set<Symbol> w;
    for (const auto& s : u) {
        if (s.homogeneity().at(kappa) <= cap) {
            out.U.push_back(s);
            w.insert(s);
        }
        Symbol xs = Symbol::multiply(Symbol::xi(), s);
        if (xs.homogeneity().at(kappa) <= cap)
            w.insert(xs);
    }
    out.W.assign(w.begin(), w.end());

    std::set<PlusGenerator> plus;
    plus.insert(PlusGenerator::x0());
    plus.insert(PlusGenerator::x1());
    for (const auto& s : out.W) {
        const Q b = s.homogeneity().at(kappa) + 2;
        for (int k0 = 0; Q(2 * k0) < b; ++k0)
            for (int k1 = 0; Q(2 * k0 + k1) < b; ++k1)
                if (auto g = PlusGenerator::jk(k0, k1, s, kappa))
                    plus.insert(*g);
    }
    out.W_plus.assign(plus.begin(), plus.end());

    for (const auto& s : named::w0_list())
        if (s.homogeneity().at(kappa) <= cap)
            out.W0.push_back(s);
    std::sort(out.W0.begin(), out.W0.end());
    for (const auto& s : named::w_star_list())
        if (s.homogeneity().at(kappa) <= cap)
            out.W_star.push_back(s);
    std::sort(out.W_star.begin(), out.W_star.end());
    return out;
}

} // namespace wz
