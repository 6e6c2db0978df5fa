#include "lrlab/tableau.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace lrlab {

namespace {

struct Filler {
  const Partition& inner;
  const Partition& content;
  const Partition& outer;
  std::vector<Cell> cells;               // reverse reading order
  std::vector<std::vector<int>> value;   // value[row-1][col-1], 0 = unfilled or inner
  std::vector<int> used;                 // used[v] for v in 1..content.length()
  std::uint64_t count = 0;

  bool in_skew(int row, int col) const {
    return row >= 1 && col > inner[row] && col <= outer[row];
  }

  void run(std::size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    const auto [row, col] = cells[idx];
    int lo = 1;
    if (in_skew(row - 1, col)) lo = value[static_cast<std::size_t>(row - 2)][static_cast<std::size_t>(col - 1)] + 1;
    int hi = content.length();
    if (in_skew(row, col + 1)) hi = std::min(hi, value[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)]);
    for (int v = lo; v <= hi; ++v) {
      auto& uv = used[static_cast<std::size_t>(v)];
      if (uv >= content[v]) continue;
      if (v > 1 && uv + 1 > used[static_cast<std::size_t>(v - 1)]) continue;
      ++uv;
      value[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] = v;
      run(idx + 1);
      value[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] = 0;
      --uv;
    }
  }
};

bool contains_shape(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 1; i <= inner.length(); ++i) {
    if (inner[i] > outer[i]) return false;
  }
  return true;
}

}  // namespace

BigInt lr_coefficient(const Partition& a, const Partition& b, const Partition& c) {
  if (c.weight() != a.weight() + b.weight()) return 0;
  if (!contains_shape(c, a) || !contains_shape(c, b)) return 0;
  Filler f{a, b, c, {}, {}, {}, 0};
  f.value.resize(static_cast<std::size_t>(c.length()));
  for (int i = 1; i <= c.length(); ++i) {
    f.value[static_cast<std::size_t>(i - 1)].assign(static_cast<std::size_t>(c[i]), 0);
    for (int j = c[i]; j > a[i]; --j) f.cells.push_back({i, j});
  }
  f.used.assign(static_cast<std::size_t>(b.length()) + 1, 0);
  f.run(0);
  return BigInt(f.count);
}

LRElement mul_tableau(const Partition& a, const Partition& b, Cap cap) {
  LRElement out(cap);
  const int total = a.weight() + b.weight();
  int max_rows = a.length() + b.length();
  if (cap) max_rows = std::min(max_rows, *cap);
  std::vector<int> rows;
  std::function<void(int, int)> extend = [&](int row, int remaining) {
    if (remaining == 0) {
      const Partition c = make_partition_unchecked(rows);
      if (BigInt k = lr_coefficient(a, b, c); k != 0) out.add_term(c, k);
      return;
    }
    if (row > max_rows) return;
    const int lo = std::max(a[row], b[row]);
    int hi = std::min(remaining, a[row] + b.first());
    if (row > 1) hi = std::min(hi, rows.back());
    for (int v = hi; v >= std::max(lo, 1); --v) {
      rows.push_back(v);
      extend(row + 1, remaining - v);
      rows.pop_back();
    }
  };
  extend(1, total);
  return out;
}

}  // namespace lrlab
