#include "wz/notation.hpp"

#include <cctype>

namespace wz {

namespace {

class Reader {
public:
    explicit Reader(const std::string& text) : t_(text) {}

    bool done()
    {
        skip();
        return i_ >= t_.size();
    }
    bool peek(const std::string& s)
    {
        skip();
        return t_.compare(i_, s.size(), s) == 0;
    }
    bool accept(const std::string& s)
    {
        if (!peek(s))
            return false;
        i_ += s.size();
        return true;
    }
    void expect(const std::string& s)
    {
        if (!accept(s))
            fail("expected '" + s + "'");
    }
    int integer()
    {
        skip();
        std::size_t j = i_;
        if (j < t_.size() && t_[j] == '-')
            ++j;
        while (j < t_.size() && std::isdigit(static_cast<unsigned char>(t_[j])))
            ++j;
        if (j == i_)
            fail("expected integer");
        int v = std::stoi(t_.substr(i_, j - i_));
        i_ = j;
        return v;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at position " + std::to_string(i_) + " in '" + t_ + "'");
    }
    std::size_t pos() const { return i_; }
    const std::string& text() const { return t_; }
    void seek(std::size_t p) { i_ = p; }

private:
    void skip()
    {
        while (i_ < t_.size() && t_[i_] == ' ')
            ++i_;
    }

    std::string t_;
    std::size_t i_ = 0;
};

RawTree read_product(Reader& r);

RawTree read_atom(Reader& r)
{
    if (r.accept("I[")) {
        RawTree inner = read_product(r);
        r.expect("]");
        return RawTree::integral(std::move(inner));
    }
    if (r.accept("Xi"))
        return RawTree::xi();
    if (r.accept("X0"))
        return RawTree::poly(1, 0);
    if (r.accept("X1"))
        return RawTree::poly(0, 1);
    if (r.accept("1"))
        return RawTree::one();
    r.fail("expected symbol factor");
}

RawTree read_product(Reader& r)
{
    std::vector<RawTree> factors;
    do {
        RawTree a = read_atom(r);
        int power = 1;
        if (r.accept("^"))
            power = r.integer();
        if (power < 0)
            r.fail("negative power");
        for (int p = 0; p < power; ++p)
            factors.push_back(a);
    } while (r.accept("*"));
    if (factors.size() == 1)
        return factors.front();
    return RawTree::product(std::move(factors));
}

Symbol read_symbol(Reader& r)
{
    SymbolComb v = normalize(read_product(r));
    if (v.size() != 1)
        r.fail("symbol evaluates to zero");
    return v.begin()->first;
}

PlusGenerator read_generator(Reader& r)
{
    if (r.accept("X0"))
        return PlusGenerator::x0();
    if (r.accept("X1"))
        return PlusGenerator::x1();
    int k0 = 0;
    int k1 = 0;
    if (r.accept("Jk((")) {
        k0 = r.integer();
        r.expect(",");
        k1 = r.integer();
        r.expect("),");
    } else if (r.accept("J''(")) {
        k1 = 2;
    } else if (r.accept("J'(")) {
        k1 = 1;
    } else if (r.accept("Jdot(")) {
        k0 = 1;
    } else if (!r.accept("J(")) {
        r.fail("expected plus generator");
    }
    Symbol s = read_symbol(r);
    r.expect(")");
    return PlusGenerator::jk_unchecked(k0, k1, s);
}

PlusMonomial read_monomial(Reader& r)
{
    if (r.peek("1")) {
        r.accept("1");
        return PlusMonomial::unit();
    }
    std::vector<PlusGenerator> f;
    do {
        PlusGenerator g = read_generator(r);
        int power = 1;
        if (r.accept("^"))
            power = r.integer();
        for (int p = 0; p < power; ++p)
            f.push_back(g);
    } while (r.accept("*"));
    return PlusMonomial(std::move(f));
}

CoeffPoly read_coefficient(Reader& r, bool negate)
{
    CoeffPoly c(negate ? -1 : 1);
    if (r.accept("(")) {
        std::size_t start = r.pos();
        int depth = 1;
        std::size_t j = start;
        const auto& t = r.text();
        while (j < t.size() && depth > 0) {
            if (t[j] == '(')
                ++depth;
            if (t[j] == ')')
                --depth;
            ++j;
        }
        if (depth != 0)
            r.fail("unbalanced coefficient");
        c = c * parse_coeff_poly(t.substr(start, j - 1 - start));
        r.seek(j);
    }
    return c;
}

std::string coefficient_prefix(const CoeffPoly& c, bool first)
{
    // A leading sign is pulled out of single-term coefficients.
    std::string s;
    CoeffPoly body = c;
    bool negative = false;
    if (c.terms().size() == 1 && c.terms().begin()->second < Q(0)) {
        negative = true;
        body = -c;
    }
    if (first)
        s = negative ? "-" : "";
    else
        s = negative ? " - " : " + ";
    if (body != CoeffPoly(1))
        s += "(" + body.str() + ") ";
    return s;
}

} // namespace

SymbolComb normalize(const RawTree& raw)
{
    switch (raw.kind) {
    case RawTree::Kind::One:
        return single(Symbol::one());
    case RawTree::Kind::Xi:
        return single(Symbol::xi());
    case RawTree::Kind::Poly:
        return single(Symbol::poly(raw.k0, raw.k1));
    case RawTree::Kind::Int: {
        SymbolComb inner = normalize(raw.children.at(0));
        SymbolComb out;
        for (const auto& [s, c] : inner)
            if (auto i = Symbol::integrate(s))
                out.add(*i, c);
        return out;
    }
    case RawTree::Kind::Product: {
        SymbolComb acc = single(Symbol::one());
        for (const auto& f : raw.children) {
            SymbolComb fv = normalize(f);
            SymbolComb next;
            for (const auto& [a, ca] : acc)
                for (const auto& [b, cb] : fv)
                    next.add(Symbol::multiply(a, b), ca * cb);
            acc = next;
        }
        return acc;
    }
    }
    return {};
}

RawTree parse_raw_symbol(const std::string& text)
{
    Reader r(text);
    RawTree t = read_product(r);
    if (!r.done())
        r.fail("trailing input");
    return t;
}

Symbol parse_symbol(const std::string& text)
{
    Reader r(text);
    Symbol s = read_symbol(r);
    if (!r.done())
        r.fail("trailing input");
    return s;
}

PlusMonomial parse_monomial(const std::string& text)
{
    Reader r(text);
    PlusMonomial m = read_monomial(r);
    if (!r.done())
        r.fail("trailing input");
    return m;
}

Tensor parse_tensor(const std::string& text)
{
    Reader r(text);
    Tensor t;
    if (r.accept("0")) {
        if (!r.done())
            r.fail("trailing input");
        return t;
    }
    bool negate = r.accept("-");
    while (true) {
        CoeffPoly c = read_coefficient(r, negate);
        Symbol s = read_symbol(r);
        r.expect("(x)");
        PlusMonomial m = read_monomial(r);
        t.add({s, m}, c);
        if (r.done())
            break;
        if (r.accept("+"))
            negate = false;
        else if (r.accept("-"))
            negate = true;
        else
            r.fail("expected '+' or '-'");
    }
    return t;
}

SymbolComb parse_symbol_comb(const std::string& text)
{
    Reader r(text);
    SymbolComb v;
    if (r.accept("0")) {
        if (!r.done())
            r.fail("trailing input");
        return v;
    }
    bool negate = r.accept("-");
    while (true) {
        CoeffPoly c = read_coefficient(r, negate);
        v += normalize(read_product(r)).scaled(c);
        if (r.done())
            break;
        if (r.accept("+"))
            negate = false;
        else if (r.accept("-"))
            negate = true;
        else
            r.fail("expected '+' or '-'");
    }
    return v;
}

std::string format(const Symbol& s) { return s.str(); }

std::string format(const PlusMonomial& m) { return m.str(); }

std::string format(const Tensor& t)
{
    if (t.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : t) {
        out += coefficient_prefix(c, first) + k.left.str() + " (x) " + k.right.str();
        first = false;
    }
    return out;
}

std::string format(const SymbolComb& v)
{
    if (v.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : v) {
        out += coefficient_prefix(c, first) + s.str();
        first = false;
    }
    return out;
}

std::string format(const PlusElement& v)
{
    if (v.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : v) {
        out += coefficient_prefix(c, first) + m.str();
        first = false;
    }
    return out;
}

} // namespace wz
