#pragma once

#include "lrlab/numeric.hpp"
#include "lrlab/partition.hpp"

namespace lrlab {

/// Dimension of S_P applied to a d-dimensional space (hook-content formula);
/// zero when P has more than d rows.
BigInt gl_dimension(const Partition& p, int d);

}  // namespace lrlab
