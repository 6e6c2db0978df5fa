#pragma once

#include <cstddef>
#include <cstdint>

#include "lrlab/partition.hpp"

namespace lrlab::lab {

/// Certificate that every summand of b^⊗(tM) occurs in a^⊗(tN) in ℒ(d).
struct TransferWitness {
  int m = 0;  // M = |a| / gcd
  int n = 0;  // N = |b| / gcd, so M|b| = N|a|
  int t = 0;
  std::size_t support_b = 0;  // |supp b^⊗(tM)|
  std::size_t support_a = 0;  // |supp a^⊗(tN)|
};

/// Requires |b|·a ≽ |a|·b and lengths <= d (HypothesisFails), finds the
/// smallest t <= t_max (NotFoundWithin otherwise).
TransferWitness transfer_witness(const Partition& a, const Partition& b, int d, int t_max);

/// Re-checks up to `samples` summands of b^⊗(tM), drawn with a fixed seed,
/// against a^⊗(tN) using the tableau rule for the final factor. Returns the
/// number confirmed; every sampled summand must be confirmed.
std::size_t spot_check_witness(const TransferWitness& w, const Partition& a, const Partition& b, int d,
                               std::size_t samples = 10, std::uint64_t seed = 0x5eed);

}  // namespace lrlab::lab
