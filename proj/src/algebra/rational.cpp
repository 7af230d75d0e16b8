#include "wz/rational.hpp"

#include <stdexcept>

namespace wz {

namespace {

std::int64_t parse_int(const std::string& s, const std::string& whole)
{
    if (s.empty())
        throw std::invalid_argument("malformed rational '" + whole + "'");
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+')
        i = 1;
    if (i == s.size())
        throw std::invalid_argument("malformed rational '" + whole + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw std::invalid_argument("malformed rational '" + whole + "'");
    return std::stoll(s);
}

} // namespace

Q parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Q(parse_int(text, text));
    auto num = parse_int(text.substr(0, slash), text);
    auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    return Q(num, den);
}

std::string to_string(const Q& q)
{
    if (q.denominator() == 1)
        return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

double to_double(const Q& q)
{
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

Q factorial(int n)
{
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return Q(r);
}

} // namespace wz
