#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>

#include "lrlab/numeric.hpp"
#include "lrlab/partition.hpp"

namespace lrlab {

/// Optional length cap l; set means "element of the quotient ℒ(l)".
using Cap = std::optional<int>;

using TermMap = std::map<Partition, BigInt, DescendingLex>;

/// A finite non-negative combination of partitions: an element of ℒ, or of
/// ℒ(l) when a cap is set. Terms iterate in descending lexicographic order
/// and zero multiplicities are never stored.
class LRElement {
 public:
  LRElement() = default;
  explicit LRElement(Cap cap) : cap_(cap) {}
  /// {P : 1}; dropped to zero when P is longer than the cap.
  static LRElement of(const Partition& p, Cap cap = std::nullopt);
  /// Throws CapMismatch if a term is longer than the cap or a multiplicity is
  /// negative; zeros are dropped.
  LRElement(TermMap terms, Cap cap);

  const TermMap& terms() const noexcept { return terms_; }
  Cap cap() const noexcept { return cap_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// m_P, zero when absent.
  BigInt multiplicity(const Partition& p) const;
  bool contains(const Partition& p) const { return terms_.count(p) != 0; }

  /// Adds m·P (m >= 0); silently ignored when P exceeds the cap.
  void add_term(const Partition& p, const BigInt& m);

  TermMap::const_iterator begin() const noexcept { return terms_.begin(); }
  TermMap::const_iterator end() const noexcept { return terms_.end(); }

  bool operator==(const LRElement& other) const = default;

 private:
  TermMap terms_;
  Cap cap_;
};

/// ⊕. Caps must agree (CapMismatch otherwise).
LRElement element_add(const LRElement& m, const LRElement& n);

/// a • M: prepend a to every term, dropping the ones that stop being
/// partitions.
LRElement bullet_prepend(int a, const LRElement& m);

/// A ∔ M: pointwise addition of A to every term.
LRElement shift_add(const Partition& a, const LRElement& m);

/// Image in ℒ(l): drops terms longer than l.
LRElement truncate_to_length(const LRElement& m, int l);

/// M ⊲ N: every multiplicity of M is at most the one in N.
bool leq_elementwise(const LRElement& m, const LRElement& n);
/// {P : 1} ⊲ N.
inline bool in_support(const Partition& p, const LRElement& n) { return n.contains(p); }

/// Sum of all multiplicities.
BigInt total_multiplicity(const LRElement& m);

namespace detail {

/// Signed combinations used only inside the product engine (unitriangular
/// change of basis). Never part of a public result.
using SignedTerms = std::map<Partition, BigInt, DescendingLex>;

void accumulate(SignedTerms& into, const Partition& p, const BigInt& m);

}  // namespace detail

}  // namespace lrlab
