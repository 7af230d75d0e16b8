#pragma once

#include "wz/coproduct.hpp"
#include "wz/structure.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wz {

class RenormDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Values of L on W0; symbols absent from the table are mapped to zero.
using LTable = std::map<Symbol, SymbolComb>;

LTable default_L_table();

// M = I - c L - c1 L1 - c2 L2 with c, c1, c2 symbolic or concrete.
struct RenormSpec {
    CoeffPoly c = CoeffPoly::c();
    CoeffPoly c1 = CoeffPoly::c1();
    CoeffPoly c2 = CoeffPoly::c2();
    LTable L = default_L_table();
    KappaParam kappa;

    static RenormSpec symbolic() { return {}; }
    // Only the L generator switched on: M = exp(-cL) = I - cL.
    static RenormSpec c_only();
    static RenormSpec identity();
};

SymbolComb apply_L(const Symbol& s);
SymbolComb apply_L(const LTable& table, const Symbol& s);
SymbolComb apply_L1(const Symbol& s);
SymbolComb apply_L2(const Symbol& s);
// Linear extensions; zero outside W0 is an error.
SymbolComb apply_L(const LTable& table, const SymbolComb& v);
SymbolComb apply_L1(const SymbolComb& v);
SymbolComb apply_L2(const SymbolComb& v);

// M on W0, extended by M(X^k tau) = X^k M tau.
SymbolComb apply_M(const RenormSpec& spec, const Symbol& s);
SymbolComb apply_M(const RenormSpec& spec, const SymbolComb& v);

// Multiplicative lift on monomials over X0, X1 and J_k(tau), tau in W_star.
PlusElement hat_M(const RenormSpec& spec, const PlusMonomial& m);
PlusElement hat_M(const RenormSpec& spec, const PlusElement& v);

Tensor delta_M(const RenormSpec& spec, const Symbol& s);

// (I (x) mult)(Delta (x) I) t.
Tensor delta_then_multiply(const Coproduct& delta, const Tensor& t);
// (M (x) hatM) t.
Tensor apply_M_hatM(const RenormSpec& spec, const Tensor& t);

struct CheckEntry {
    std::string identity; // "hatM-J", "hatM-mult", "coproduct", "triangular"
    std::string subject;
    bool pass = true;
    std::string residual; // canonical ASCII, "0" on success
};

struct GroupCheckReport {
    std::vector<CheckEntry> entries;
    bool pass = true;

    std::vector<CheckEntry> failures() const;
    std::string to_json() const;
};

GroupCheckReport verify_group_membership(const RenormSpec& spec, const StructureSets& st);

} // namespace wz
