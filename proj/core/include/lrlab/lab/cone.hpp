#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lrlab/numeric.hpp"
#include "lrlab/partition.hpp"
#include "lrlab/subdivision.hpp"

namespace lrlab::lab {

struct ConeCertificate {
  bool member = false;
  std::optional<int> n;  // B ≼ nA
  /// Non-zero coefficients κ_J with Σ κ_J G_J(A) = B.
  std::optional<std::vector<std::pair<Subdivision, Rational>>> decomposition;
};

/// G_J(A) for every subdivision J of {1..l}, in subdivision order.
std::vector<Partition> cone_generators(const Partition& a, int l);

/// Member iff |A| divides |B| and B ≼ (|B|/|A|)A.
ConeCertificate cone_membership(const Partition& b, const Partition& a, int l);

/// Non-negative rational κ with Σ κ_J G_J(A) = B, searching generator subsets
/// of size <= l in increasing size. Throws NoDecomposition if B is in the cone
/// but no combination exists, HypothesisFails if B is not a member.
ConeCertificate cone_generator_decomposition(const Partition& b, const Partition& a, int l);

/// Exact residual check of a decomposition.
bool certificate_reproduces(const ConeCertificate& cert, const Partition& b, const Partition& a, int l);

}  // namespace lrlab::lab
