#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lrlab {

/// Multiplicities of tensor powers overflow 64 bits quickly, so every
/// coefficient is an arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }
BigInt parse_bigint(const std::string& text);

std::string to_string(const Rational& q);

/// lcm{1, ..., l}
std::uint64_t lcm_upto(int l);

}  // namespace lrlab
