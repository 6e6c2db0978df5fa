#include "lrlab/lab/transfer.hpp"

#include <numeric>
#include <random>

#include "lrlab/error.hpp"
#include "lrlab/power.hpp"
#include "lrlab/tableau.hpp"

namespace lrlab::lab {

TransferWitness transfer_witness(const Partition& a, const Partition& b, int d, int t_max) {
  if (a.length() > d || b.length() > d) throw Error(Errc::HypothesisFails, "partition longer than d");
  if (a.weight() == 0 || b.weight() == 0) throw Error(Errc::HypothesisFails, "a and b must be non-empty");
  if (!dominates(scale(a, b.weight()), scale(b, a.weight()))) {
    throw Error(Errc::HypothesisFails, "|b|a does not dominate |a|b");
  }
  const int g = std::gcd(a.weight(), b.weight());
  TransferWitness w;
  w.m = a.weight() / g;
  w.n = b.weight() / g;
  for (int t = 1; t <= t_max; ++t) {
    const LRElement pb = tensor_power(b, t * w.m, d);
    const LRElement pa = tensor_power(a, t * w.n, d);
    bool inside = true;
    for (const auto& [c, mult] : pb) {
      if (!pa.contains(c)) {
        inside = false;
        break;
      }
    }
    if (inside) {
      w.t = t;
      w.support_b = pb.size();
      w.support_a = pa.size();
      return w;
    }
  }
  throw Error(Errc::NotFoundWithin, "no witness with t <= " + std::to_string(t_max));
}

std::size_t spot_check_witness(const TransferWitness& w, const Partition& a, const Partition& b, int d,
                               std::size_t samples, std::uint64_t seed) {
  const LRElement pb = tensor_power(b, w.t * w.m, d);
  const int k = w.t * w.n;
  const LRElement prefix = tensor_power(a, k - 1, d);
  std::vector<Partition> summands;
  for (const auto& [c, mult] : pb) summands.push_back(c);

  std::mt19937_64 rng(seed);
  const std::size_t count = std::min(samples, summands.size());
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (summands.size() - i));
    std::swap(summands[i], summands[j]);
  }
  std::size_t confirmed = 0;
  for (std::size_t i = 0; i < count; ++i) {
    for (const auto& [dpart, mult] : prefix) {
      if (lr_coefficient(dpart, a, summands[i]) > 0) {
        ++confirmed;
        break;
      }
    }
  }
  return confirmed;
}

}  // namespace lrlab::lab
