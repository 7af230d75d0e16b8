#pragma once

#include "wz/tensor.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace wz {

// Unsorted tree as written by a user, before canonicalisation.
struct RawTree {
    enum class Kind { One, Xi, Poly, Int, Product };
    Kind kind = Kind::One;
    int k0 = 0;
    int k1 = 0;
    std::vector<RawTree> children;

    static RawTree one() { return {}; }
    static RawTree xi() { return {Kind::Xi, 0, 0, {}}; }
    static RawTree poly(int a, int b) { return {Kind::Poly, a, b, {}}; }
    static RawTree integral(RawTree c) { return {Kind::Int, 0, 0, {std::move(c)}}; }
    static RawTree product(std::vector<RawTree> f) { return {Kind::Product, 0, 0, std::move(f)}; }
};

// Canonical form, or the empty combination when an I[X^k] subterm occurs.
SymbolComb normalize(const RawTree& raw);

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

RawTree parse_raw_symbol(const std::string& text);
// Throws ParseError when the text denotes the zero element.
Symbol parse_symbol(const std::string& text);
PlusMonomial parse_monomial(const std::string& text);
Tensor parse_tensor(const std::string& text);
SymbolComb parse_symbol_comb(const std::string& text);

std::string format(const Symbol& s);
std::string format(const PlusMonomial& m);
std::string format(const Tensor& t);
std::string format(const SymbolComb& v);
std::string format(const PlusElement& v);

} // namespace wz
