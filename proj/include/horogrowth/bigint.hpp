#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace horogrowth {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Parses an optionally signed decimal integer; throws ParseError on junk.
BigInt parse_decimal(const std::string& text);

/// 3^k as an arbitrary-precision integer.
BigInt pow3(unsigned k);

}  // namespace horogrowth
