#include "lrlab/numeric.hpp"

#include <cctype>
#include <numeric>

#include "lrlab/error.hpp"

namespace lrlab {

BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw Error(Errc::ParseError, "empty integer");
  std::size_t i = text[0] == '-' ? 1 : 0;
  if (i == text.size()) throw Error(Errc::ParseError, "bad integer '" + text + "'");
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(Errc::ParseError, "bad integer '" + text + "'");
    }
  }
  return BigInt(text);
}

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::uint64_t lcm_upto(int l) {
  if (l < 1) throw Error(Errc::IndexOutOfRange, "lcm_upto needs l >= 1");
  std::uint64_t acc = 1;
  for (int k = 2; k <= l; ++k) acc = std::lcm(acc, static_cast<std::uint64_t>(k));
  return acc;
}

}  // namespace lrlab
