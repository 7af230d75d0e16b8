#pragma once

#include "wz/plus.hpp"

#include <vector>

namespace wz {

struct StructureSets {
    KappaParam kappa;
    Homogeneity zeta;
    std::vector<Symbol> W;
    std::vector<Symbol> U;
    std::vector<PlusGenerator> W_plus;
    std::vector<Symbol> W0;
    std::vector<Symbol> W_star;

    // Elements of W with homogeneity <= 0 at kappa, sorted.
    std::vector<Symbol> non_positive() const;
    bool in_W(const Symbol& s) const;
    bool in_W0(const Symbol& s) const;
    bool in_W_star(const Symbol& s) const;
};

inline constexpr int kMaxPolyLength = 6;

StructureSets generate_structure(const KappaParam& kappa = KappaParam(), Homogeneity zeta = {4, 0});

// Symbols that carry names in the renormalisation tables.
namespace named {
Symbol xi();
Symbol one();
Symbol x1();
Symbol i_xi();       // I[Xi]
Symbol xi2();        // Xi I[Xi]
Symbol xi3();        // Xi I[Xi I[Xi]]
Symbol xi3b();       // Xi I[Xi]^2
Symbol xi_x();       // X1 Xi
Symbol xi4();        // Xi I[Xi I[Xi I[Xi]]]
Symbol xi4b();       // Xi I[Xi]^3
Symbol xi4c();       // Xi I[Xi I[Xi]^2]
Symbol xi4e();       // Xi I[Xi] I[Xi I[Xi]]
Symbol xi22();       // Xi I[I[Xi]]
Symbol xi2x();       // Xi I[X1 Xi]
Symbol x_xi2();      // X1 Xi I[Xi]
Symbol i_xi_sq();    // I[Xi]^2
Symbol i_xi2();      // I[Xi I[Xi]]
std::vector<Symbol> w0_list();
std::vector<Symbol> w_star_list();
} // namespace named

} // namespace wz
