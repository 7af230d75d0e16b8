#pragma once

#include "wz/homogeneity.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wz {

// Canonical tree term: Xi^e * X^k * prod_i I[child_i] with e in {0,1}.
// The product is stored flattened with polynomial factors merged.
class Symbol {
public:
    enum class Kind { One, Xi, Poly, Int, Product };

    Symbol();

    static Symbol one();
    static Symbol xi();
    static Symbol poly(int k0, int k1);
    // I(tau); empty when tau is a pure polynomial since I(X^k) = 0.
    static std::optional<Symbol> integrate(const Symbol& tau);
    // Throws std::domain_error when both factors carry Xi.
    static Symbol multiply(const Symbol& a, const Symbol& b);

    Kind kind() const;
    bool has_xi() const { return node_->xi; }
    int k0() const { return node_->k0; }
    int k1() const { return node_->k1; }
    int poly_length() const { return 2 * node_->k0 + node_->k1; }
    const std::vector<Symbol>& integrals() const { return node_->ints; }
    // Only meaningful when kind() == Int.
    const Symbol& child() const { return node_->ints.front(); }
    bool is_polynomial() const { return !node_->xi && node_->ints.empty(); }
    bool is_one() const { return is_polynomial() && node_->k0 == 0 && node_->k1 == 0; }

    // The symbol with its polynomial factor removed.
    Symbol without_poly() const;

    const Homogeneity& homogeneity() const { return node_->hom; }
    const std::string& str() const { return node_->key; }

    bool operator==(const Symbol& o) const { return node_ == o.node_ || node_->key == o.node_->key; }
    bool operator!=(const Symbol& o) const { return !(*this == o); }
    // Homogeneity (small-kappa order) first, serialisation second.
    bool operator<(const Symbol& o) const;

private:
    struct Node {
        bool xi = false;
        int k0 = 0;
        int k1 = 0;
        std::vector<Symbol> ints;
        Homogeneity hom;
        std::string key;
    };

    struct one_tag {};
    explicit Symbol(one_tag) {}

    static Symbol build(bool xi, int k0, int k1, std::vector<Symbol> ints);

    std::shared_ptr<const Node> node_;
};

Homogeneity homogeneity(const Symbol& s);

} // namespace wz
