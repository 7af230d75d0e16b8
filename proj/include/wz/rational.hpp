#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace wz {

using Q = boost::rational<std::int64_t>;

// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
Q parse_rational(const std::string& text);
std::string to_string(const Q& q);
double to_double(const Q& q);

inline bool is_zero(const Q& q) { return q == Q(0); }

Q factorial(int n);

} // namespace wz
