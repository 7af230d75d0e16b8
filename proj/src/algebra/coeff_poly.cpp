#include "wz/coeff_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace wz {

CoeffPoly::CoeffPoly(const Q& constant)
{
    if (constant != Q(0))
        terms_[{0, 0, 0}] = constant;
}

CoeffPoly CoeffPoly::var(int index)
{
    CoeffPoly p;
    Exponents e{0, 0, 0};
    e.at(index) = 1;
    p.terms_[e] = Q(1);
    return p;
}

CoeffPoly CoeffPoly::operator+(const CoeffPoly& o) const
{
    CoeffPoly r = *this;
    for (const auto& [e, q] : o.terms_) {
        auto& slot = r.terms_[e];
        slot += q;
        if (slot == Q(0))
            r.terms_.erase(e);
    }
    return r;
}

CoeffPoly CoeffPoly::operator-() const
{
    CoeffPoly r = *this;
    for (auto& [e, q] : r.terms_)
        q = -q;
    return r;
}

CoeffPoly CoeffPoly::operator-(const CoeffPoly& o) const { return *this + (-o); }

CoeffPoly CoeffPoly::operator*(const CoeffPoly& o) const
{
    CoeffPoly r;
    for (const auto& [ea, qa] : terms_)
        for (const auto& [eb, qb] : o.terms_) {
            Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            auto& slot = r.terms_[e];
            slot += qa * qb;
            if (slot == Q(0))
                r.terms_.erase(e);
        }
    return r;
}

bool CoeffPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

Q CoeffPoly::constant_term() const
{
    auto it = terms_.find({0, 0, 0});
    return it == terms_.end() ? Q(0) : it->second;
}

int CoeffPoly::degree() const
{
    int d = 0;
    for (const auto& [e, q] : terms_)
        d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

double CoeffPoly::evaluate(double c, double c1, double c2) const
{
    double s = 0;
    for (const auto& [e, q] : terms_)
        s += to_double(q) * std::pow(c, e[0]) * std::pow(c1, e[1]) * std::pow(c2, e[2]);
    return s;
}

CoeffPoly CoeffPoly::substitute(const Q& c, const Q& c1, const Q& c2) const
{
    Q s(0);
    const Q vals[3] = {c, c1, c2};
    for (const auto& [e, q] : terms_) {
        Q t = q;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < e[i]; ++j)
                t *= vals[i];
        s += t;
    }
    return CoeffPoly(s);
}

std::string CoeffPoly::str() const
{
    if (terms_.empty())
        return "0";
    static const char* names[3] = {"c", "c1", "c2"};
    std::string out;
    for (const auto& [e, q] : terms_) {
        std::string mono;
        for (int i = 0; i < 3; ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += names[i];
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        Q mag = q < Q(0) ? -q : q;
        std::string term;
        if (mono.empty())
            term = to_string(mag);
        else if (mag == Q(1))
            term = mono;
        else
            term = to_string(mag) + "*" + mono;
        if (q < Q(0))
            out += "-";
        else if (!out.empty())
            out += "+";
        out += term;
    }
    return out;
}

CoeffPoly parse_coeff_poly(const std::string& text)
{
    std::string t;
    for (char ch : text)
        if (ch != ' ')
            t += ch;
    if (t.empty())
        throw std::invalid_argument("empty coefficient");
    CoeffPoly result;
    std::size_t i = 0;
    while (i < t.size()) {
        int sign = 1;
        if (t[i] == '+' || t[i] == '-') {
            sign = t[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < t.size() && t[j] != '+' && t[j] != '-')
            ++j;
        std::string term = t.substr(i, j - i);
        i = j;
        if (term.empty())
            throw std::invalid_argument("malformed coefficient '" + text + "'");
        CoeffPoly p(sign);
        std::size_t a = 0;
        while (a <= term.size()) {
            std::size_t b = term.find('*', a);
            if (b == std::string::npos)
                b = term.size();
            std::string f = term.substr(a, b - a);
            a = b + 1;
            int power = 1;
            auto caret = f.find('^');
            if (caret != std::string::npos) {
                power = std::stoi(f.substr(caret + 1));
                f = f.substr(0, caret);
            }
            CoeffPoly base;
            if (f == "c")
                base = CoeffPoly::c();
            else if (f == "c1")
                base = CoeffPoly::c1();
            else if (f == "c2")
                base = CoeffPoly::c2();
            else
                base = CoeffPoly(parse_rational(f));
            for (int k = 0; k < power; ++k)
                p = p * base;
            if (b == term.size())
                break;
        }
        result = result + p;
    }
    return result;
}

} // namespace wz
