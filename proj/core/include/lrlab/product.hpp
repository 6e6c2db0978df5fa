#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <unordered_map>

#include "lrlab/element.hpp"
#include "lrlab/partition.hpp"

namespace lrlab {

/// Memoized product machinery for ℒ and ℒ(l). All caches are guarded for
/// concurrent use; a cache hit never changes a result.
class ProductEngine {
 public:
  ProductEngine() = default;
  ProductEngine(const ProductEngine&) = delete;
  ProductEngine& operator=(const ProductEngine&) = delete;

  /// A ⊗ Λ^r via A⊗Λ^r = (a_1+1)∘(A_2⊗Λ^{r-1}) ⊕ (a_1)•(A_2⊗Λ^r).
  std::shared_ptr<const LRElement> mul_by_column(const Partition& a, int r, Cap cap);

  /// Column products ⊗_i Λ^{c̃_i} applied to the element.
  LRElement apply_columns(const LRElement& m, const Partition& columns_of);

  /// A ⊗ B: A times the column product of B, corrected through the
  /// unitriangular change of basis between column products and partitions.
  std::shared_ptr<const LRElement> mul(const Partition& a, const Partition& b, Cap cap);

  /// M ⊗ B, summing over the terms of M.
  LRElement mul(const LRElement& m, const Partition& b);

  /// Expresses B as a signed combination of column products:
  /// B = Σ_C x_C ⊗_i Λ^{c̃_i}, restricted to ℒ(cap).
  std::shared_ptr<const detail::SignedTerms> column_basis(const Partition& b, Cap cap);

  struct Stats {
    std::size_t column_entries = 0;
    std::size_t basis_entries = 0;
    std::size_t product_entries = 0;
    std::size_t power_entries = 0;
  };
  Stats stats() const;
  void clear();

  // Tensor power memo, keyed by (A, n, cap). Filled by tensor_power.
  std::shared_ptr<const LRElement> find_power(const Partition& a, int n, Cap cap) const;
  void store_power(const Partition& a, int n, Cap cap, std::shared_ptr<const LRElement> value);

  struct PowerKey {
    Partition base;
    int exponent;
    Cap cap;
    bool operator==(const PowerKey&) const = default;
  };
  /// Snapshot of the power memo, sorted by key (for persistence).
  std::vector<std::pair<PowerKey, std::shared_ptr<const LRElement>>> power_entries() const;

 private:
  struct Key {
    Partition a;
    Partition b;
    int r;
    int cap;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  struct PowerKeyHash {
    std::size_t operator()(const PowerKey& k) const noexcept;
  };

  template <class Map, class K>
  static typename Map::mapped_type lookup(const Map& map, std::shared_mutex& mu, const K& key);
  template <class Map, class K, class V>
  static V insert(Map& map, std::shared_mutex& mu, const K& key, V value);

  mutable std::shared_mutex column_mu_;
  std::unordered_map<Key, std::shared_ptr<const LRElement>, KeyHash> column_cache_;
  mutable std::shared_mutex basis_mu_;
  std::unordered_map<Key, std::shared_ptr<const detail::SignedTerms>, KeyHash> basis_cache_;
  mutable std::shared_mutex product_mu_;
  std::unordered_map<Key, std::shared_ptr<const LRElement>, KeyHash> product_cache_;
  mutable std::shared_mutex power_mu_;
  std::unordered_map<PowerKey, std::shared_ptr<const LRElement>, PowerKeyHash> power_cache_;
};

/// Process-wide engine shared by the free functions below and theorem-lab.
ProductEngine& default_engine();

/// A ⊗ Λ^r, truncated to the cap.
LRElement mul_by_column(const Partition& a, int r, Cap cap = std::nullopt);

/// A ⊗ B by the column recursion (fast path).
LRElement mul(const Partition& a, const Partition& b, Cap cap = std::nullopt);

}  // namespace lrlab
