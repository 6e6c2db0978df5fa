#include "lrlab/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "lrlab/error.hpp"

namespace lrlab {

namespace {

void strip_zeros(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

Partition::Partition(std::span<const int> raw) : parts_(raw.begin(), raw.end()) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw Error(Errc::NegativeEntry, "entry " + std::to_string(i + 1) + " is negative");
    }
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw Error(Errc::NotWeaklyDecreasing,
                  "entry " + std::to_string(i + 1) + " < entry " + std::to_string(i + 2));
    }
  }
  strip_zeros(parts_);
  weight_ = sum_of(parts_);
}

Partition::Partition(std::initializer_list<int> raw)
    : Partition(std::span<const int>(raw.begin(), raw.size())) {}

Partition::Partition(Trusted, std::vector<int> parts) : parts_(std::move(parts)) {
  strip_zeros(parts_);
  weight_ = sum_of(parts_);
}

Partition make_partition_unchecked(std::vector<int> parts) {
  return Partition(Partition::Trusted{}, std::move(parts));
}

Partition make_partition(std::span<const int> raw) { return Partition(raw); }

std::vector<int> Partition::padded(int l) const {
  std::vector<int> out(parts_);
  if (static_cast<int>(out.size()) < l) out.resize(static_cast<std::size_t>(l), 0);
  return out;
}

std::size_t Partition::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int p : parts_) {
    h ^= static_cast<std::size_t>(p) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Partition column(int r) {
  if (r < 0) throw Error(Errc::IndexOutOfRange, "negative column height");
  return make_partition_unchecked(std::vector<int>(static_cast<std::size_t>(r), 1));
}

Partition conjugate(const Partition& a) {
  std::vector<int> out(static_cast<std::size_t>(a.first()), 0);
  for (int part : a.parts()) {
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return make_partition_unchecked(std::move(out));
}

Partition add_pointwise(const Partition& a, const Partition& b) {
  const int l = std::max(a.length(), b.length());
  std::vector<int> out = a.padded(l);
  for (int i = 0; i < b.length(); ++i) out[static_cast<std::size_t>(i)] += b.parts()[static_cast<std::size_t>(i)];
  return make_partition_unchecked(std::move(out));
}

Partition scale(const Partition& a, int n) {
  if (n < 0) throw Error(Errc::IndexOutOfRange, "negative scale");
  std::vector<int> out(a.parts());
  for (int& p : out) p *= n;
  return make_partition_unchecked(std::move(out));
}

std::vector<Partition> column_decomposition(const Partition& a) {
  std::vector<Partition> out;
  for (const Partition heights = conjugate(a); int height : heights.parts()) out.push_back(column(height));
  return out;
}

std::string_view dominance_name(Dominance d) noexcept {
  switch (d) {
    case Dominance::Greater: return "Greater";
    case Dominance::Less: return "Less";
    case Dominance::Equal: return "Equal";
    case Dominance::Incomparable: return "Incomparable";
    case Dominance::DifferentWeight: return "DifferentWeight";
  }
  return "Unknown";
}

Dominance dominance_compare(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return Dominance::DifferentWeight;
  if (a == b) return Dominance::Equal;
  bool a_above = false;
  bool b_above = false;
  int sa = 0;
  int sb = 0;
  const int l = std::max(a.length(), b.length());
  for (int i = 1; i <= l; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) a_above = true;
    if (sb > sa) b_above = true;
  }
  if (a_above && b_above) return Dominance::Incomparable;
  return a_above ? Dominance::Greater : Dominance::Less;
}

bool dominates(const Partition& a, const Partition& b) {
  const Dominance d = dominance_compare(a, b);
  return d == Dominance::Greater || d == Dominance::Equal;
}

DiagramDifference diagram_difference(const Partition& a, const Partition& b) {
  DiagramDifference out;
  const int l = std::max(a.length(), b.length());
  for (int i = 1; i <= l; ++i) {
    for (int j = b[i] + 1; j <= a[i]; ++j) out.only_first.push_back({i, j});
    for (int j = a[i] + 1; j <= b[i]; ++j) out.only_second.push_back({i, j});
  }
  return out;
}

int distance(const Partition& a, const Partition& b) {
  int d = 0;
  const int l = std::max(a.length(), b.length());
  for (int i = 1; i <= l; ++i) d += std::max(0, a[i] - b[i]);
  return d;
}

std::vector<Partition> interpolating_sequence(const Partition& a, const Partition& b) {
  if (!dominates(a, b)) {
    throw Error(Errc::NotComparable, to_string(a) + " does not dominate " + to_string(b));
  }
  std::vector<Partition> seq{a};
  const int l = std::max(a.length(), b.length());
  std::vector<int> cur = a.padded(l);
  const std::vector<int> target = b.padded(l);
  while (cur != target) {
    int alpha = 0;
    while (cur[static_cast<std::size_t>(alpha)] >= target[static_cast<std::size_t>(alpha)]) ++alpha;
    int beta = alpha;
    while (cur[static_cast<std::size_t>(beta)] <= target[static_cast<std::size_t>(beta)]) --beta;
    --cur[static_cast<std::size_t>(beta)];
    ++cur[static_cast<std::size_t>(alpha)];
    seq.push_back(make_partition_unchecked(cur));
  }
  return seq;
}

std::vector<int> restrict_parts(const Partition& a, int first, int last) {
  if (first < 1 || last < first) throw Error(Errc::IndexOutOfRange, "bad interval");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(last - first + 1));
  for (int i = first; i <= last; ++i) out.push_back(a[i]);
  return out;
}

Partition restrict(const Partition& a, int first, int last) {
  return make_partition_unchecked(restrict_parts(a, first, last));
}

std::string to_string(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  out += ']';
  return out;
}

Partition parse_partition(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return Error(Errc::ParseError, "partition '" + std::string(text) + "': " + why);
  };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size() || text[i] != '[') throw fail("expected '['");
  ++i;
  std::vector<int> raw;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == '-') throw Error(Errc::NegativeEntry, "partition '" + std::string(text) + "' has a negative entry");
      std::size_t start = i;
      long long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1'000'000) throw fail("part too large");
        ++i;
      }
      if (i == start) throw fail("expected a number");
      raw.push_back(static_cast<int>(value));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw fail("expected ',' or ']'");
    }
  }
  skip_ws();
  if (i != text.size()) throw fail("trailing characters");
  return Partition(std::span<const int>(raw));
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

}  // namespace lrlab
