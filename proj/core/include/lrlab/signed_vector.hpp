#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrlab/partition.hpp"
#include "lrlab/subdivision.hpp"

namespace lrlab {

/// Integer vector of explicit length; holds χ(A), χ_J(A), E_J, F_J and the
/// intermediate sums that build H_J.
class SignedVector {
 public:
  SignedVector() = default;
  explicit SignedVector(std::vector<long long> entries) : entries_(std::move(entries)) {}
  static SignedVector zeros(int l) { return SignedVector(std::vector<long long>(static_cast<std::size_t>(l), 0)); }
  /// Partition zero-padded to l.
  static SignedVector from_partition(const Partition& a, int l);

  int length() const noexcept { return static_cast<int>(entries_.size()); }
  const std::vector<long long>& entries() const noexcept { return entries_; }
  long long operator[](int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }
  long long& operator[](int i) { return entries_.at(static_cast<std::size_t>(i - 1)); }

  /// Entrywise; lengths must agree (IndexOutOfRange otherwise).
  SignedVector operator+(const SignedVector& other) const;
  SignedVector operator+(const Partition& p) const { return *this + from_partition(p, length()); }

  bool is_partition() const noexcept;
  /// The canonical partition if entries are non-negative and weakly decreasing.
  std::optional<Partition> to_partition() const;

  bool operator==(const SignedVector&) const = default;

 private:
  std::vector<long long> entries_;
};

std::string to_string(const SignedVector& v);

/// χ(A) = (-a_l, ..., -a_1).
SignedVector chi(const Partition& a, int l);
/// χ(A[I_1]) ∘ ... ∘ χ(A[I_ι]).
SignedVector chi_J(const Partition& a, const Subdivision& j);
/// E_J(m): -1 at the last row of I_m.
SignedVector e_vector(const Subdivision& j, int m);
/// F_J(n): +1 at the first row of I_n.
SignedVector f_vector(const Subdivision& j, int n);

}  // namespace lrlab
