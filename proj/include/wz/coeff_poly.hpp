#pragma once

#include "wz/rational.hpp"

#include <array>
#include <map>
#include <string>

namespace wz {

// Polynomial in the renormalisation constants c, c1, c2 with rational coefficients.
class CoeffPoly {
public:
    using Exponents = std::array<int, 3>;

    struct Order {
        bool operator()(const Exponents& a, const Exponents& b) const
        {
            int da = a[0] + a[1] + a[2];
            int db = b[0] + b[1] + b[2];
            if (da != db)
                return da < db;
            return a > b;
        }
    };

    CoeffPoly() = default;
    CoeffPoly(const Q& constant);
    CoeffPoly(std::int64_t constant) : CoeffPoly(Q(constant)) {}
    CoeffPoly(int constant) : CoeffPoly(Q(constant)) {}

    static CoeffPoly c() { return var(0); }
    static CoeffPoly c1() { return var(1); }
    static CoeffPoly c2() { return var(2); }
    static CoeffPoly var(int index);

    CoeffPoly operator+(const CoeffPoly& o) const;
    CoeffPoly operator-(const CoeffPoly& o) const;
    CoeffPoly operator-() const;
    CoeffPoly operator*(const CoeffPoly& o) const;
    bool operator==(const CoeffPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const CoeffPoly& o) const { return !(*this == o); }

    bool zero() const { return terms_.empty(); }
    bool is_constant() const;
    Q constant_term() const;
    int degree() const;
    double evaluate(double c, double c1, double c2) const;
    CoeffPoly substitute(const Q& c, const Q& c1, const Q& c2) const;

    const std::map<Exponents, Q, Order>& terms() const { return terms_; }

    // Terms joined without spaces, e.g. "1-2*c+1/2*c*c1".
    std::string str() const;

private:
    std::map<Exponents, Q, Order> terms_;
};

inline bool is_zero(const CoeffPoly& p) { return p.zero(); }

CoeffPoly parse_coeff_poly(const std::string& text);

} // namespace wz
