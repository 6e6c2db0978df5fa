#pragma once

#include <cstddef>
#include <filesystem>

#include "lrlab/element.hpp"
#include "lrlab/partition.hpp"
#include "lrlab/product.hpp"

namespace lrlab {

/// Stored-term limit for tensor powers. Defaults to 5'000'000, or the value
/// of LRLAB_BUDGET when set.
void set_term_budget(std::size_t terms);
std::size_t term_budget() noexcept;

/// A^⊗n with the cap applied after every multiplication. Intermediate powers
/// are memoized in the engine. Throws BudgetExceeded when a partial product
/// holds more terms than term_budget().
LRElement tensor_power(const Partition& a, int n, Cap cap = std::nullopt);
LRElement tensor_power(ProductEngine& engine, const Partition& a, int n, Cap cap);

/// On-disk memo of tensor powers. Text format, first line "LRPOW1"; then per
/// entry a line "E <partition> <n> <cap|-> <terms>" followed by one
/// "<partition> <multiplicity>" line per term.
inline constexpr const char* kPowerCacheMagic = "LRPOW1";

/// Loads entries into the engine. A missing file loads nothing; a file with a
/// different header is treated as stale and ignored (returns 0). Throws
/// CacheFormat on a corrupt body.
std::size_t load_power_cache(const std::filesystem::path& path, ProductEngine& engine);
/// Writes every memoized power, sorted by key.
std::size_t save_power_cache(const std::filesystem::path& path, const ProductEngine& engine);

}  // namespace lrlab
