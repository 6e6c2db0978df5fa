#include "lrlab/enumerate.hpp"

#include <algorithm>
#include <functional>

#include "lrlab/error.hpp"

namespace lrlab {

std::vector<Partition> partitions_of(int n, std::optional<int> max_length) {
  if (n < 0) throw Error(Errc::IndexOutOfRange, "negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  const int len_cap = max_length.value_or(n);
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(make_partition_unchecked(cur));
      return;
    }
    if (static_cast<int>(cur.size()) == len_cap) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight, std::optional<int> max_length) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto block = partitions_of(w, max_length);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::vector<Partition> dominated_partitions(const Partition& top, int l) {
  if (l < 0) throw Error(Errc::IndexOutOfRange, "negative length");
  std::vector<Partition> out;
  const int total = top.weight();
  std::vector<int> prefix_top(static_cast<std::size_t>(l) + 1, 0);
  for (int i = 1; i <= l; ++i) prefix_top[static_cast<std::size_t>(i)] = prefix_top[static_cast<std::size_t>(i - 1)] + top[i];
  if (top.length() > l) {
    // Prefix sums of any B ∈ 𝒫(l) reach |B| by row l, which top does not.
    return out;
  }
  std::vector<int> cur;
  std::function<void(int, int, int)> rec = [&](int row, int used, int max_part) {
    if (used == total) {
      out.push_back(make_partition_unchecked(cur));
      return;
    }
    if (row > l) return;
    const int remaining = total - used;
    const int rows_left = l - row + 1;
    int hi = std::min({max_part, remaining, prefix_top[static_cast<std::size_t>(row)] - used});
    // Rows row..l must absorb the rest with parts <= p.
    for (int p = hi; p >= 1 && static_cast<long long>(p) * rows_left >= remaining; --p) {
      cur.push_back(p);
      rec(row + 1, used + p, p);
      cur.pop_back();
    }
  };
  rec(1, 0, total);
  return out;
}

std::vector<CellMove> single_cell_descents(const Partition& p, std::optional<int> max_length) {
  std::vector<CellMove> out;
  const int rows = p.length() + 1;
  std::vector<int> cur = p.padded(rows);
  for (int b = 1; b <= p.length(); ++b) {
    for (int a = b + 1; a <= rows; ++a) {
      std::vector<int> q = cur;
      --q[static_cast<std::size_t>(b - 1)];
      ++q[static_cast<std::size_t>(a - 1)];
      if (!std::is_sorted(q.begin(), q.end(), std::greater<>())) continue;
      Partition lower = make_partition_unchecked(std::move(q));
      if (max_length && lower.length() > *max_length) continue;
      out.push_back({std::move(lower), b, a});
    }
  }
  return out;
}

}  // namespace lrlab
