#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lrlab/partition.hpp"

namespace lrlab::lab {

struct PropertyResult {
  int n = 0;
  bool holds = true;
  std::optional<Partition> counterexample;  // first failing B in enumeration order
  std::size_t candidates = 0;               // number of B ≼ nA checked
};

/// Does every B ∈ 𝒫(l) with B ≼ nA occur in A^⊗n (computed in ℒ(l))?
PropertyResult property_holds(const Partition& a, int n, int l);

struct ExponentSearch {
  int n_max = 0;
  /// Smallest N with the property for every n in [N, n_max].
  std::optional<int> threshold;
  std::vector<PropertyResult> by_n;  // entry n-1 is exponent n

  /// True when no exponent below the threshold succeeds.
  bool monotone() const;
};

/// Requires n_max >= l (IndexOutOfRange otherwise).
ExponentSearch minimal_uniform_exponent(const Partition& a, int l, int n_max);

struct BoundDetails {
  std::uint64_t bound = 1;       // max(1, L(l)·|𝒥|·M)
  std::uint64_t max_term = 0;    // M = max (k_P + 1) n_P over Φ
  std::size_t fractional_points = 0;  // |Φ|
  std::size_t simplicial_cones = 0;
  int rank = 0;
};

/// Reproduces N_A = L(l)|𝒥|M from the simplicial decomposition of the cone
/// spanned by the G_J(A). Supported for l <= 3 (UnsupportedLength).
BoundDetails theorem_bound(const Partition& a, int l);

}  // namespace lrlab::lab
