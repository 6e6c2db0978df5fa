#include "lrlab/constructions.hpp"

#include <string>

#include "lrlab/error.hpp"
#include "lrlab/numeric.hpp"

namespace lrlab {

Partition build_G(const Partition& a, const Subdivision& j) {
  const int l = j.length();
  if (a.length() > l) throw Error(Errc::IndexOutOfRange, to_string(a) + " is longer than " + std::to_string(l));
  const auto big_l = static_cast<long long>(lcm_upto(l));
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(l));
  for (const Interval& iv : j.intervals()) {
    long long block_weight = 0;
    for (int i = iv.first; i <= iv.last; ++i) block_weight += a[i];
    const long long value = big_l / iv.size() * block_weight;
    for (int i = iv.first; i <= iv.last; ++i) parts.push_back(static_cast<int>(value));
  }
  // Block averages of a weakly decreasing sequence decrease, so this is canonical.
  return make_partition_unchecked(std::move(parts));
}

HConstruction build_H_raw(const Partition& a, const Subdivision& j, int m, int n) {
  HConstruction h;
  h.m = m;
  h.n = n;
  h.entries = SignedVector::from_partition(build_G(a, j), j.length()) + e_vector(j, m) + f_vector(j, n);
  h.partition = h.entries.to_partition();
  return h;
}

HConstruction build_H(const Partition& a, const Subdivision& j, int beta, int delta) {
  const int l = j.length();
  const Partition cols = conjugate(a);
  if (delta < 1 || delta >= beta) {
    throw Error(Errc::IndexOutOfRange, "need 1 <= delta < beta");
  }
  if (cols[beta] <= 0) {
    throw Error(Errc::IndexOutOfRange, "column " + std::to_string(beta) + " of " + to_string(a) + " is empty");
  }
  if (cols[delta] + 1 > l) {
    throw Error(Errc::IndexOutOfRange, "column " + std::to_string(delta) + " of " + to_string(a) +
                                           " has height " + std::to_string(cols[delta]) + ", so ã_δ+1 > " +
                                           std::to_string(l));
  }
  return build_H_raw(a, j, j.block_of(cols[beta]), j.block_of(cols[delta] + 1));
}

}  // namespace lrlab
