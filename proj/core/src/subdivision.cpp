#include "lrlab/subdivision.hpp"

#include <cctype>

#include "lrlab/error.hpp"

namespace lrlab {

Subdivision::Subdivision(int l, unsigned breakpoints) : l_(l), mask_(breakpoints) {
  if (l < 1 || l > 31) throw Error(Errc::IndexOutOfRange, "subdivision length must be in 1..31");
  if (l < 32 && (breakpoints >> (l - 1)) != 0) {
    throw Error(Errc::IndexOutOfRange, "breakpoint mask exceeds l-1 bits");
  }
  int start = 1;
  for (int i = 1; i < l; ++i) {
    if ((breakpoints >> (i - 1)) & 1U) {
      intervals_.push_back({start, i});
      start = i + 1;
    }
  }
  intervals_.push_back({start, l});
}

Subdivision::Subdivision(std::vector<Interval> intervals) : l_(0), mask_(0), intervals_(std::move(intervals)) {
  if (intervals_.empty()) throw Error(Errc::IndexOutOfRange, "subdivision needs at least one interval");
  int expected = 1;
  for (const Interval& iv : intervals_) {
    if (iv.first != expected || iv.last < iv.first) {
      throw Error(Errc::IndexOutOfRange, "intervals must be consecutive and non-empty");
    }
    expected = iv.last + 1;
  }
  l_ = expected - 1;
  if (l_ > 31) throw Error(Errc::IndexOutOfRange, "subdivision length must be in 1..31");
  for (std::size_t k = 0; k + 1 < intervals_.size(); ++k) mask_ |= 1U << (intervals_[k].last - 1);
}

int Subdivision::block_of(int alpha) const {
  for (std::size_t k = 0; k < intervals_.size(); ++k) {
    if (intervals_[k].contains(alpha)) return static_cast<int>(k) + 1;
  }
  throw Error(Errc::IndexOutOfRange, "row " + std::to_string(alpha) + " outside 1.." + std::to_string(l_));
}

std::vector<Subdivision> enumerate_subdivisions(int l) {
  if (l < 1 || l > 31) throw Error(Errc::IndexOutOfRange, "subdivision length must be in 1..31");
  std::vector<Subdivision> out;
  const unsigned count = 1U << (l - 1);
  out.reserve(count);
  for (unsigned mask = 0; mask < count; ++mask) out.emplace_back(l, mask);
  return out;
}

std::string to_string(const Subdivision& j) {
  std::string out = "{";
  for (int k = 1; k <= j.count(); ++k) {
    if (k > 1) out += ',';
    out += '(';
    const Interval& iv = j.interval(k);
    for (int x = iv.first; x <= iv.last; ++x) {
      if (x > iv.first) out += ',';
      out += std::to_string(x);
    }
    out += ')';
  }
  return out + "}";
}

Subdivision parse_subdivision(std::string_view text, int l) {
  // Both accepted spellings reduce to blocks of integers; '|' or ')' closes a block.
  std::vector<std::vector<int>> blocks(1);
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      blocks.back().push_back(v);
      continue;
    }
    if (c == '|' || c == ')') {
      if (!blocks.back().empty()) blocks.emplace_back();
    } else if (c != ',' && c != '(' && c != '{' && c != '}' && !std::isspace(static_cast<unsigned char>(c))) {
      throw Error(Errc::ParseError, "subdivision '" + std::string(text) + "': unexpected '" + c + "'");
    }
    ++i;
  }
  if (blocks.back().empty()) blocks.pop_back();
  std::vector<Interval> intervals;
  for (const auto& b : blocks) {
    for (std::size_t k = 1; k < b.size(); ++k) {
      if (b[k] != b[k - 1] + 1) throw Error(Errc::ParseError, "subdivision blocks must be consecutive");
    }
    intervals.push_back({b.front(), b.back()});
  }
  if (intervals.empty()) throw Error(Errc::ParseError, "empty subdivision");
  Subdivision j(std::move(intervals));
  if (j.length() != l) {
    throw Error(Errc::IndexOutOfRange, "subdivision covers 1.." + std::to_string(j.length()) + ", expected 1.." + std::to_string(l));
  }
  return j;
}

}  // namespace lrlab
