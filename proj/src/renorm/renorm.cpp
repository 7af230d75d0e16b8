#include "wz/renorm.hpp"

#include "wz/notation.hpp"

#include <json.hpp>

#include <algorithm>

namespace wz {

namespace {

bool in_list(const std::vector<Symbol>& v, const Symbol& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

const std::vector<Symbol>& w0()
{
    static const std::vector<Symbol> list = named::w0_list();
    return list;
}

const std::vector<Symbol>& w_star()
{
    static const std::vector<Symbol> list = named::w_star_list();
    return list;
}

void require_w0(const Symbol& s)
{
    if (!in_list(w0(), s))
        throw RenormDomainError("symbol outside W0: " + s.str());
}

SymbolComb only_on(const Symbol& target, const Symbol& s)
{
    require_w0(s);
    return s == target ? single(Symbol::one()) : SymbolComb();
}

Symbol times_poly(const Symbol& s, int k0, int k1) { return Symbol::multiply(s, Symbol::poly(k0, k1)); }

} // namespace

LTable default_L_table()
{
    using namespace named;
    LTable t;
    t[xi2()] = single(one());
    t[xi3()] = single(i_xi());
    t[xi3b()] = single(i_xi(), CoeffPoly(2));
    t[xi4b()] = single(i_xi_sq(), CoeffPoly(3));
    t[xi4e()] = single(i_xi2()) + single(i_xi_sq());
    t[xi4()] = single(i_xi2()) + single(xi22());
    t[xi4c()] = single(i_xi_sq()) + single(xi22(), CoeffPoly(2));
    t[xi2x()] = single(x1());
    t[x_xi2()] = single(x1());
    return t;
}

RenormSpec RenormSpec::c_only()
{
    RenormSpec s;
    s.c1 = CoeffPoly();
    s.c2 = CoeffPoly();
    return s;
}

RenormSpec RenormSpec::identity()
{
    RenormSpec s;
    s.c = CoeffPoly();
    s.c1 = CoeffPoly();
    s.c2 = CoeffPoly();
    return s;
}

SymbolComb apply_L(const Symbol& s)
{
    static const LTable table = default_L_table();
    return apply_L(table, s);
}

SymbolComb apply_L(const LTable& table, const Symbol& s)
{
    require_w0(s);
    auto it = table.find(s);
    return it == table.end() ? SymbolComb() : it->second;
}

SymbolComb apply_L1(const Symbol& s) { return only_on(named::xi4(), s); }
SymbolComb apply_L2(const Symbol& s) { return only_on(named::xi4e(), s); }

SymbolComb apply_L(const LTable& table, const SymbolComb& v)
{
    SymbolComb r;
    for (const auto& [s, c] : v)
        r += apply_L(table, s).scaled(c);
    return r;
}

SymbolComb apply_L1(const SymbolComb& v)
{
    SymbolComb r;
    for (const auto& [s, c] : v)
        r += apply_L1(s).scaled(c);
    return r;
}

SymbolComb apply_L2(const SymbolComb& v)
{
    SymbolComb r;
    for (const auto& [s, c] : v)
        r += apply_L2(s).scaled(c);
    return r;
}

SymbolComb apply_M(const RenormSpec& spec, const Symbol& s)
{
    Symbol base = s.without_poly();
    if (!in_list(w0(), s) && in_list(w0(), base) && !base.is_one()) {
        SymbolComb r;
        for (const auto& [t, c] : apply_M(spec, base))
            r.add(times_poly(t, s.k0(), s.k1()), c);
        return r;
    }
    if (!in_list(w0(), s) && s.is_polynomial())
        return single(s);
    require_w0(s);
    SymbolComb r = single(s);
    r -= apply_L(spec.L, s).scaled(spec.c);
    r -= apply_L1(s).scaled(spec.c1);
    r -= apply_L2(s).scaled(spec.c2);
    return r;
}

SymbolComb apply_M(const RenormSpec& spec, const SymbolComb& v)
{
    SymbolComb r;
    for (const auto& [s, c] : v)
        r += apply_M(spec, s).scaled(c);
    return r;
}

PlusElement hat_M(const RenormSpec& spec, const PlusMonomial& m)
{
    PlusElement r = plus_one();
    for (const auto& g : m.factors()) {
        if (g.kind() != PlusGenerator::Kind::J) {
            r = plus_product(r, plus_of(g));
            continue;
        }
        if (!in_list(w_star(), g.arg()))
            throw RenormDomainError("hatM undefined on " + g.str());
        PlusElement image;
        for (const auto& [t, c] : apply_M(spec, g.arg())) {
            if (auto j = PlusGenerator::jk(g.k0(), g.k1(), t, spec.kappa))
                image.add(PlusMonomial::of(*j), c);
        }
        r = plus_product(r, image);
    }
    return r;
}

PlusElement hat_M(const RenormSpec& spec, const PlusElement& v)
{
    PlusElement r;
    for (const auto& [m, c] : v)
        r += hat_M(spec, m).scaled(c);
    return r;
}

Tensor delta_M(const RenormSpec& spec, const Symbol& s)
{
    require_w0(s);
    Tensor r;
    for (const auto& [t, c] : apply_M(spec, s))
        r.add({t, PlusMonomial::unit()}, c);
    Q weight_x1sq(0);
    Q weight_x0(0);
    if (s == named::xi4()) {
        weight_x1sq = Q(1, 2);
        weight_x0 = Q(1);
    } else if (s == named::xi4c()) {
        weight_x1sq = Q(1);
        weight_x0 = Q(2);
    }
    if (weight_x1sq != Q(0)) {
        Symbol xi = named::xi();
        Symbol ixi = named::i_xi();
        auto jpp = PlusMonomial::of(PlusGenerator::jk_unchecked(0, 2, ixi));
        auto jdot = PlusMonomial::of(PlusGenerator::jk_unchecked(1, 0, ixi));
        r.add({times_poly(xi, 0, 2), jpp}, spec.c * CoeffPoly(weight_x1sq));
        r.add({times_poly(xi, 1, 0), jdot}, spec.c * CoeffPoly(weight_x0));
    }
    return r;
}

Tensor delta_then_multiply(const Coproduct& delta, const Tensor& t)
{
    Tensor r;
    for (const auto& [key, c] : t)
        for (const auto& [k2, c2] : delta(key.left))
            r.add({k2.left, k2.right * key.right}, c * c2);
    return r;
}

Tensor apply_M_hatM(const RenormSpec& spec, const Tensor& t)
{
    Tensor r;
    for (const auto& [key, c] : t) {
        SymbolComb left = apply_M(spec, key.left);
        PlusElement right = hat_M(spec, key.right);
        for (const auto& [s, cs] : left)
            for (const auto& [m, cm] : right)
                r.add({s, m}, c * cs * cm);
    }
    return r;
}

std::vector<CheckEntry> GroupCheckReport::failures() const
{
    std::vector<CheckEntry> out;
    for (const auto& e : entries)
        if (!e.pass)
            out.push_back(e);
    return out;
}

std::string GroupCheckReport::to_json() const
{
    nlohmann::json j;
    j["pass"] = pass;
    j["entries"] = nlohmann::json::array();
    for (const auto& e : entries)
        j["entries"].push_back(
            {{"identity", e.identity}, {"subject", e.subject}, {"pass", e.pass}, {"residual", e.residual}});
    return j.dump(2);
}

GroupCheckReport verify_group_membership(const RenormSpec& spec, const StructureSets& st)
{
    Coproduct delta(st.kappa);
    GroupCheckReport report;
    auto record = [&](std::string identity, std::string subject, std::string residual) {
        bool ok = residual == "0";
        report.entries.push_back({std::move(identity), std::move(subject), ok, std::move(residual)});
        report.pass = report.pass && ok;
    };

    // Generators of T0+: X0, X1 and admissible J_k(tau) with tau in W_star.
    std::vector<PlusGenerator> gens{PlusGenerator::x0(), PlusGenerator::x1()};
    for (const auto& tau : st.W_star) {
        const Q bound = tau.homogeneity().at(st.kappa) + 2;
        for (int k0 = 0; Q(2 * k0) < bound; ++k0)
            for (int k1 = 0; Q(2 * k0 + k1) < bound; ++k1)
                if (auto g = PlusGenerator::jk(k0, k1, tau, st.kappa))
                    gens.push_back(*g);
    }

    // hatM J_k(tau) = mult (J_k (x) I) DeltaM tau.
    for (const auto& g : gens) {
        if (g.kind() != PlusGenerator::Kind::J)
            continue;
        PlusElement rhs;
        for (const auto& [key, c] : delta_M(spec, g.arg())) {
            if (auto j = PlusGenerator::jk(g.k0(), g.k1(), key.left, st.kappa))
                rhs.add(PlusMonomial::of(*j) * key.right, c);
        }
        record("hatM-J", g.str(), format(hat_M(spec, PlusMonomial::of(g)) - rhs));
    }

    // Multiplicativity of hatM on all monomials of degree <= 2.
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a; b < gens.size(); ++b) {
            PlusMonomial ma = PlusMonomial::of(gens[a]);
            PlusMonomial mb = PlusMonomial::of(gens[b]);
            PlusElement lhs = hat_M(spec, ma * mb);
            PlusElement rhs = plus_product(hat_M(spec, ma), hat_M(spec, mb));
            record("hatM-mult", (ma * mb).str(), format(lhs - rhs));
        }

    for (const auto& tau : st.W0) {
        Tensor dm = delta_M(spec, tau);
        Tensor lhs = delta_then_multiply(delta, dm);
        Tensor rhs = apply_M_hatM(spec, delta(tau));
        record("coproduct", tau.str(), format(lhs - rhs));

        Tensor bad;
        for (const auto& [key, c] : dm) {
            if (key.left == tau && key.right.is_unit())
                continue;
            if (!less_at(tau.homogeneity(), key.left.homogeneity(), st.kappa))
                bad.add(key, c);
        }
        Tensor diag;
        diag.add({tau, PlusMonomial::unit()}, dm.coeff({tau, PlusMonomial::unit()}) - CoeffPoly(1));
        record("triangular", tau.str(), format(bad + diag));
    }
    return report;
}

} // namespace wz
