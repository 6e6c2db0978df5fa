#pragma once

#include "lrlab/element.hpp"
#include "lrlab/numeric.hpp"
#include "lrlab/partition.hpp"

namespace lrlab {

/// c^C_{AB}: the number of LR skew tableaux of shape C/A and content B
/// (semistandard, reverse reading word a lattice word). Enumerates fillings
/// directly; does not expand A ⊗ B.
BigInt lr_coefficient(const Partition& a, const Partition& b, const Partition& c);

/// A ⊗ B from the tableau rule, one lr_coefficient per candidate shape C.
/// Independent of the column recursion in product.hpp.
LRElement mul_tableau(const Partition& a, const Partition& b, Cap cap = std::nullopt);

}  // namespace lrlab
