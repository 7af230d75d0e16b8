#include "wz/homogeneity.hpp"

#include <cctype>
#include <stdexcept>

namespace wz {

KappaParam::KappaParam(const Q& v) : value_(v)
{
    if (!(v > Q(0)) || !(v < Q(1, 10)))
        throw std::invalid_argument("kappa must satisfy 0 < kappa < 1/10, got " + to_string(v));
}

std::string Homogeneity::str() const
{
    std::string s;
    Q a(twice_int_part, 2);
    if (a != Q(0) || kappa_mult == 0)
        s = to_string(a);
    if (kappa_mult != 0) {
        if (kappa_mult > 0 && !s.empty())
            s += "+";
        if (kappa_mult == -1)
            s += "-";
        else if (kappa_mult != 1)
            s += std::to_string(kappa_mult);
        s += "k";
    }
    return s;
}

Homogeneity parse_homogeneity(const std::string& text)
{
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            t += ch;
    if (t.empty())
        throw std::invalid_argument("empty homogeneity");
    Q constant(0);
    int kappa = 0;
    std::size_t i = 0;
    while (i < t.size()) {
        std::size_t j = i + 1;
        while (j < t.size() && t[j] != '+' && t[j] != '-')
            ++j;
        std::string term = t.substr(i, j - i);
        i = j;
        if (!term.empty() && term.back() == 'k') {
            std::string c = term.substr(0, term.size() - 1);
            if (c.empty() || c == "+")
                kappa += 1;
            else if (c == "-")
                kappa -= 1;
            else
                kappa += static_cast<int>(std::stoi(c));
        } else {
            constant += parse_rational(term[0] == '+' ? term.substr(1) : term);
        }
    }
    Q twice = constant * 2;
    if (twice.denominator() != 1)
        throw std::invalid_argument("homogeneity constant must be a half-integer: " + text);
    return {static_cast<int>(twice.numerator()), kappa};
}

} // namespace wz
