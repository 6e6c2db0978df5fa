#pragma once

#include <optional>

#include "lrlab/partition.hpp"
#include "lrlab/signed_vector.hpp"
#include "lrlab/subdivision.hpp"

namespace lrlab {

/// G_J(A) = (L/|I_1|)|A[I_1]| D[I_1] ∘ ... ∘ (L/|I_ι|)|A[I_ι]| D[I_ι] with
/// L = lcm{1..l}. Block-constant; always a partition.
Partition build_G(const Partition& a, const Subdivision& j);

/// H_J(A, m, n) = G_J(A) + E_J(m) + F_J(n). `partition` is empty when the sum
/// is not weakly decreasing and non-negative.
struct HConstruction {
  int m = 0;
  int n = 0;
  SignedVector entries;
  std::optional<Partition> partition;

  bool is_partition() const noexcept { return partition.has_value(); }
};

/// Column-indexed form: m = J(ã_β), n = J(ã_δ + 1).
/// Requires 1 <= δ < β, ã_β > 0 and ã_δ + 1 <= l; throws IndexOutOfRange.
HConstruction build_H(const Partition& a, const Subdivision& j, int beta, int delta);

/// Raw (m, n) form, 1 <= m, n <= ι.
HConstruction build_H_raw(const Partition& a, const Subdivision& j, int m, int n);

}  // namespace lrlab
