#pragma once

#include <optional>
#include <vector>

#include "lrlab/partition.hpp"

namespace lrlab {

/// Partitions of n with at most max_length parts (unbounded if unset), in
/// descending lexicographic order.
std::vector<Partition> partitions_of(int n, std::optional<int> max_length = std::nullopt);

/// All partitions with weight in [0, max_weight], grouped by weight.
std::vector<Partition> partitions_up_to(int max_weight, std::optional<int> max_length = std::nullopt);

/// Every B with |B| = |top|, at most l parts and B ≼ top, by prefix-bounded
/// backtracking. Descending lexicographic order.
std::vector<Partition> dominated_partitions(const Partition& top, int l);

/// One-cell moves P ≻ P' with |P \ P'| = 1.
struct CellMove {
  Partition lower;    // P'
  int removed_row;    // ρ(P \ P')
  int added_row;      // ρ(P' \ P)
};

/// All P' ≻-below P at distance one with at most max_length parts.
std::vector<CellMove> single_cell_descents(const Partition& p, std::optional<int> max_length = std::nullopt);

}  // namespace lrlab
