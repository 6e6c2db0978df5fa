#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lrlab {

/// Closed interval [first, last] of {1..l}, 1-based.
struct Interval {
  int first = 1;
  int last = 1;

  int size() const noexcept { return last - first + 1; }
  bool contains(int x) const noexcept { return first <= x && x <= last; }
  bool operator==(const Interval&) const = default;
};

/// A splitting of {1..l} into consecutive non-empty intervals I_1, ..., I_ι.
class Subdivision {
 public:
  /// Breakpoint mask: bit (i-1) set means an interval ends at i, for
  /// 1 <= i < l.
  Subdivision(int l, unsigned breakpoints);
  /// Throws IndexOutOfRange unless the intervals tile {1..l} in order.
  explicit Subdivision(std::vector<Interval> intervals);

  static Subdivision trivial(int l) { return Subdivision(l, 0U); }
  static Subdivision singletons(int l) { return Subdivision(l, (1U << (l - 1)) - 1U); }

  int length() const noexcept { return l_; }
  /// ι
  int count() const noexcept { return static_cast<int>(intervals_.size()); }
  /// I_k, 1-based.
  const Interval& interval(int k) const { return intervals_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  unsigned breakpoints() const noexcept { return mask_; }

  /// J(α): the index k with α ∈ I_k. Throws IndexOutOfRange outside {1..l}.
  int block_of(int alpha) const;

  bool operator==(const Subdivision& other) const noexcept {
    return l_ == other.l_ && mask_ == other.mask_;
  }

 private:
  int l_;
  unsigned mask_;
  std::vector<Interval> intervals_;
};

/// All 2^{l-1} subdivisions ordered by breakpoint mask.
std::vector<Subdivision> enumerate_subdivisions(int l);

/// "{(1,2),(3)}"
std::string to_string(const Subdivision& j);
/// Accepts "1,2|3" (blocks separated by '|') or the rendered "{(1,2),(3)}".
Subdivision parse_subdivision(std::string_view text, int l);

}  // namespace lrlab
