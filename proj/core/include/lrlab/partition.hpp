#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lrlab {

/// A box (row, col) of a Young diagram, both 1-based.
struct Cell {
  int row = 1;
  int col = 1;

  auto operator<=>(const Cell&) const = default;
};

/// A partition in canonical form: weakly decreasing positive parts with
/// trailing zeros stripped. The empty partition is the unit Λ^0.
class Partition {
 public:
  Partition() = default;

  /// Validates and canonicalizes; throws NegativeEntry / NotWeaklyDecreasing.
  explicit Partition(std::span<const int> raw);
  Partition(std::initializer_list<int> raw);

  const std::vector<int>& parts() const noexcept { return parts_; }
  /// Strict length (number of nonzero parts).
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int weight() const noexcept { return weight_; }

  /// a_i with 1-based i; zero beyond the strict length.
  int operator[](int i) const noexcept {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  /// Parts zero-padded to exactly l entries (l must be >= length()).
  std::vector<int> padded(int l) const;

  bool operator==(const Partition& other) const noexcept { return parts_ == other.parts_; }
  /// Lexicographic on parts.
  std::strong_ordering operator<=>(const Partition& other) const noexcept {
    return parts_ <=> other.parts_;
  }

  std::size_t hash() const noexcept;

 private:
  struct Trusted {};
  Partition(Trusted, std::vector<int> parts);
  friend Partition make_partition_unchecked(std::vector<int> parts);

  std::vector<int> parts_;
  int weight_ = 0;
};

/// For internal callers that already guarantee the canonical form
/// (weakly decreasing, non-negative); trailing zeros are still stripped.
Partition make_partition_unchecked(std::vector<int> parts);

Partition make_partition(std::span<const int> raw);

/// Orders terms of LR elements: descending lexicographic.
struct DescendingLex {
  bool operator()(const Partition& a, const Partition& b) const noexcept { return a > b; }
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept { return p.hash(); }
};

/// Λ^r = (1, ..., 1) with r ones.
Partition column(int r);
/// D(l) = Λ^l, the full column of height l.
inline Partition determinant(int l) { return column(l); }

Partition conjugate(const Partition& a);
Partition add_pointwise(const Partition& a, const Partition& b);
Partition scale(const Partition& a, int n);

/// Λ^{ã_1}, Λ^{ã_2}, ... ; their pointwise sum is the input.
std::vector<Partition> column_decomposition(const Partition& a);

enum class Dominance { Greater, Less, Equal, Incomparable, DifferentWeight };

std::string_view dominance_name(Dominance d) noexcept;

/// Prefix-sum comparison; partitions of different strict length are
/// zero-padded, only equal weight is required.
Dominance dominance_compare(const Partition& a, const Partition& b);

/// a ≽ b (Greater or Equal).
bool dominates(const Partition& a, const Partition& b);

struct DiagramDifference {
  std::vector<Cell> only_first;   // Y(A) \ Y(B)
  std::vector<Cell> only_second;  // Y(B) \ Y(A)
};

/// Cells are listed row by row, left to right.
DiagramDifference diagram_difference(const Partition& a, const Partition& b);

/// |A \ B| = |Y(A) \ Y(B)|.
int distance(const Partition& a, const Partition& b);

/// P^0 = A, ..., P^k = B with k = |A \ B|, each step moving one cell from the
/// last row β ≤ α with a_β > b_β to the first row α with a_α < b_α.
/// Throws NotComparable unless A ≽ B.
std::vector<Partition> interpolating_sequence(const Partition& a, const Partition& b);

/// A[I] for the interval I = (first..last) of {1..l}, as a partition of
/// length |I| (zero-padded parts indexed by I).
std::vector<int> restrict_parts(const Partition& a, int first, int last);
Partition restrict(const Partition& a, int first, int last);

/// Text form "[4,2,1]"; the unit renders as "[]".
std::string to_string(const Partition& p);
Partition parse_partition(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace lrlab

template <>
struct std::hash<lrlab::Partition> {
  std::size_t operator()(const lrlab::Partition& p) const noexcept { return p.hash(); }
};
