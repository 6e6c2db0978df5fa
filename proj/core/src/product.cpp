#include "lrlab/product.hpp"

#include <algorithm>
#include <stdexcept>

#include "lrlab/error.hpp"

namespace lrlab {

namespace {

int cap_key(Cap cap) { return cap ? *cap : -1; }

Cap sub_cap(Cap cap) { return cap ? Cap(*cap - 1) : std::nullopt; }

bool exceeds(const Partition& p, Cap cap) { return cap && p.length() > *cap; }

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

}  // namespace

std::size_t ProductEngine::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = k.a.hash();
  h = mix(h, k.b.hash());
  h = mix(h, static_cast<std::size_t>(k.r));
  return mix(h, static_cast<std::size_t>(k.cap + 1));
}

std::size_t ProductEngine::PowerKeyHash::operator()(const PowerKey& k) const noexcept {
  std::size_t h = mix(k.base.hash(), static_cast<std::size_t>(k.exponent));
  return mix(h, static_cast<std::size_t>(cap_key(k.cap) + 1));
}

template <class Map, class K>
typename Map::mapped_type ProductEngine::lookup(const Map& map, std::shared_mutex& mu, const K& key) {
  std::shared_lock lock(mu);
  auto it = map.find(key);
  return it == map.end() ? nullptr : it->second;
}

template <class Map, class K, class V>
V ProductEngine::insert(Map& map, std::shared_mutex& mu, const K& key, V value) {
  std::unique_lock lock(mu);
  // A concurrent worker may have filled the slot with an equal value.
  auto [it, inserted] = map.try_emplace(key, std::move(value));
  return it->second;
}

std::shared_ptr<const LRElement> ProductEngine::mul_by_column(const Partition& a, int r, Cap cap) {
  if (r < 0) throw Error(Errc::IndexOutOfRange, "negative column height");
  if (exceeds(a, cap)) return std::make_shared<const LRElement>(cap);
  if (r == 0) return std::make_shared<const LRElement>(LRElement::of(a, cap));
  if (a.empty()) return std::make_shared<const LRElement>(LRElement::of(column(r), cap));

  const Key key{a, Partition{}, r, cap_key(cap)};
  if (auto hit = lookup(column_cache_, column_mu_, key)) return hit;

  const int a1 = a.first();
  const Partition rest = make_partition_unchecked(std::vector<int>(a.parts().begin() + 1, a.parts().end()));
  const Cap inner = sub_cap(cap);

  LRElement out(cap);
  // (a_1 + 1) ∘ (A_2 ⊗ Λ^{r-1}): every term starts with at most a_2 + 1 <= a_1 + 1.
  for (const auto held = mul_by_column(rest, r - 1, inner); const auto& [p, m] : *held) {
    std::vector<int> parts{a1 + 1};
    parts.insert(parts.end(), p.parts().begin(), p.parts().end());
    out.add_term(make_partition_unchecked(std::move(parts)), m);
  }
  // (a_1) • (A_2 ⊗ Λ^r)
  for (const auto held = mul_by_column(rest, r, inner); const auto& [p, m] : *held) {
    if (p.first() > a1) continue;
    std::vector<int> parts{a1};
    parts.insert(parts.end(), p.parts().begin(), p.parts().end());
    out.add_term(make_partition_unchecked(std::move(parts)), m);
  }
  return insert(column_cache_, column_mu_, key, std::make_shared<const LRElement>(std::move(out)));
}

LRElement ProductEngine::apply_columns(const LRElement& m, const Partition& columns_of) {
  LRElement cur = m;
  for (const Partition heights = conjugate(columns_of); int height : heights.parts()) {
    LRElement next(cur.cap());
    for (const auto& [p, k] : cur) {
      for (const auto held = mul_by_column(p, height, cur.cap()); const auto& [q, j] : *held) next.add_term(q, k * j);
    }
    cur = std::move(next);
  }
  return cur;
}

std::shared_ptr<const detail::SignedTerms> ProductEngine::column_basis(const Partition& b, Cap cap) {
  if (exceeds(b, cap)) return std::make_shared<const detail::SignedTerms>();
  const Key key{b, Partition{}, 0, cap_key(cap)};
  if (auto hit = lookup(basis_cache_, basis_mu_, key)) return hit;

  // Column product of B is B plus strictly dominated terms; peel those off.
  const LRElement columns = apply_columns(LRElement::of(Partition{}, cap), b);
  detail::SignedTerms x;
  detail::accumulate(x, b, 1);
  for (const auto& [c, m] : columns) {
    if (c == b) continue;
    for (const auto held = column_basis(c, cap); const auto& [d, y] : *held) detail::accumulate(x, d, -(m * y));
  }
  return insert(basis_cache_, basis_mu_, key, std::make_shared<const detail::SignedTerms>(std::move(x)));
}

std::shared_ptr<const LRElement> ProductEngine::mul(const Partition& a, const Partition& b, Cap cap) {
  if (exceeds(a, cap) || exceeds(b, cap)) return std::make_shared<const LRElement>(cap);
  if (b.empty()) return std::make_shared<const LRElement>(LRElement::of(a, cap));
  if (b.first() == 1) return mul_by_column(a, b.length(), cap);

  const Key key{a, b, 0, cap_key(cap)};
  if (auto hit = lookup(product_cache_, product_mu_, key)) return hit;

  detail::SignedTerms acc;
  const LRElement start = LRElement::of(a, cap);
  for (const auto held = column_basis(b, cap); const auto& [c, x] : *held) {
    for (const auto& [d, k] : apply_columns(start, c)) detail::accumulate(acc, d, x * k);
  }
  TermMap terms;
  for (auto& [p, m] : acc) {
    if (m < 0) throw std::logic_error("negative structure constant for " + to_string(p));
    terms.emplace(p, std::move(m));
  }
  return insert(product_cache_, product_mu_, key, std::make_shared<const LRElement>(std::move(terms), cap));
}

LRElement ProductEngine::mul(const LRElement& m, const Partition& b) {
  LRElement out(m.cap());
  for (const auto& [p, k] : m) {
    for (const auto held = mul(p, b, m.cap()); const auto& [q, j] : *held) out.add_term(q, k * j);
  }
  return out;
}

std::shared_ptr<const LRElement> ProductEngine::find_power(const Partition& a, int n, Cap cap) const {
  return lookup(power_cache_, power_mu_, PowerKey{a, n, cap});
}

void ProductEngine::store_power(const Partition& a, int n, Cap cap, std::shared_ptr<const LRElement> value) {
  insert(power_cache_, power_mu_, PowerKey{a, n, cap}, std::move(value));
}

std::vector<std::pair<ProductEngine::PowerKey, std::shared_ptr<const LRElement>>> ProductEngine::power_entries() const {
  std::vector<std::pair<PowerKey, std::shared_ptr<const LRElement>>> out;
  {
    std::shared_lock lock(power_mu_);
    out.assign(power_cache_.begin(), power_cache_.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    const auto kx = std::tuple(x.first.base, x.first.exponent, cap_key(x.first.cap));
    const auto ky = std::tuple(y.first.base, y.first.exponent, cap_key(y.first.cap));
    return kx < ky;
  });
  return out;
}

ProductEngine::Stats ProductEngine::stats() const {
  Stats s;
  {
    std::shared_lock lock(column_mu_);
    s.column_entries = column_cache_.size();
  }
  {
    std::shared_lock lock(basis_mu_);
    s.basis_entries = basis_cache_.size();
  }
  {
    std::shared_lock lock(product_mu_);
    s.product_entries = product_cache_.size();
  }
  {
    std::shared_lock lock(power_mu_);
    s.power_entries = power_cache_.size();
  }
  return s;
}

void ProductEngine::clear() {
  std::scoped_lock lock(column_mu_, basis_mu_, product_mu_, power_mu_);
  column_cache_.clear();
  basis_cache_.clear();
  product_cache_.clear();
  power_cache_.clear();
}

ProductEngine& default_engine() {
  static ProductEngine engine;
  return engine;
}

LRElement mul_by_column(const Partition& a, int r, Cap cap) { return *default_engine().mul_by_column(a, r, cap); }

LRElement mul(const Partition& a, const Partition& b, Cap cap) { return *default_engine().mul(a, b, cap); }

}  // namespace lrlab
