#pragma once

#include "wz/rational.hpp"

#include <compare>
#include <string>

namespace wz {

// Regularity parameter kappa, 0 < kappa < 1/10.
class KappaParam {
public:
    KappaParam() : value_(1, 20) {}
    explicit KappaParam(const Q& v);

    const Q& value() const { return value_; }

private:
    Q value_;
};

// Exact grading a + q*kappa, stored as (2a, q).
struct Homogeneity {
    int twice_int_part = 0;
    int kappa_mult = 0;

    static Homogeneity of(int twice_int, int kappa) { return {twice_int, kappa}; }

    Q at(const KappaParam& k) const { return Q(twice_int_part, 2) + Q(kappa_mult) * k.value(); }
    Q at_zero() const { return Q(twice_int_part, 2); }

    Homogeneity operator+(const Homogeneity& o) const
    {
        return {twice_int_part + o.twice_int_part, kappa_mult + o.kappa_mult};
    }
    Homogeneity operator-(const Homogeneity& o) const
    {
        return {twice_int_part - o.twice_int_part, kappa_mult - o.kappa_mult};
    }
    bool operator==(const Homogeneity&) const = default;

    std::string str() const;
};

// Order valid for every sufficiently small kappa; used only for canonical layout.
inline bool asymptotic_less(const Homogeneity& a, const Homogeneity& b)
{
    if (a.twice_int_part != b.twice_int_part)
        return a.twice_int_part < b.twice_int_part;
    return a.kappa_mult < b.kappa_mult;
}

inline bool less_at(const Homogeneity& a, const Homogeneity& b, const KappaParam& k)
{
    return a.at(k) < b.at(k);
}

inline bool less_equal_at(const Homogeneity& a, const Homogeneity& b, const KappaParam& k)
{
    return a.at(k) <= b.at(k);
}

// Parses forms like "-3/2-k", "2", "-4k", "1/2-3k".
Homogeneity parse_homogeneity(const std::string& text);

} // namespace wz
