#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "lrlab/dimension.hpp"
#include "lrlab/error.hpp"
#include "lrlab/parallel.hpp"
#include "lrlab/power.hpp"
#include "lrlab/product.hpp"

using namespace lrlab;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(parts); }

LRElement E(std::initializer_list<std::pair<Partition, int>> terms, Cap cap = std::nullopt) {
  TermMap map;
  for (const auto& [p, m] : terms) map[p] += m;
  return LRElement(std::move(map), cap);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lrlab_test_" + name);
}
}  // namespace

TEST_CASE("power examples") {
  CHECK(tensor_power(P({2}), 2, 2) == E({{P({4}), 1}, {P({3, 1}), 1}, {P({2, 2}), 1}}, 2));
  CHECK(tensor_power(P({3, 1}), 0) == E({{Partition{}, 1}}));
  CHECK(tensor_power(P({1}), 3) == E({{P({3}), 1}, {P({2, 1}), 2}, {P({1, 1, 1}), 1}}));
  CHECK(tensor_power(P({1, 1}), 4, 2) == E({{P({4, 4}), 1}}, 2));
}

TEST_CASE("powers of a box count standard tableaux") {
  const LRElement m = tensor_power(P({1}), 6);
  CHECK(m.multiplicity(P({3, 2, 1})) == 16);
  CHECK(m.multiplicity(P({3, 3})) == 5);
  BigInt squares = 0;
  for (const auto& [p, k] : m) squares += k * k;
  CHECK(squares == 720);
}

TEST_CASE("large multiplicities stay exact") {
  // In L(3) only shapes with at most three rows survive, and those carry the
  // whole of dim_3((2,1))^n = 8^n.
  const LRElement m = tensor_power(P({2, 1}), 30, 3);
  BigInt largest = 0, weighted = 0;
  for (const auto& [p, k] : m) {
    largest = std::max(largest, k);
    weighted += k * gl_dimension(p, 3);
  }
  CHECK(largest > BigInt(std::numeric_limits<std::uint64_t>::max()));
  CHECK(weighted == boost::multiprecision::pow(BigInt(8), 30));
}

TEST_CASE("power matches repeated products") {
  LRElement acc = LRElement::of(Partition{}, 3);
  for (int n = 1; n <= 5; ++n) {
    acc = default_engine().mul(acc, P({2, 1}));
    CHECK(tensor_power(P({2, 1}), n, 3) == acc);
  }
}

TEST_CASE("results do not depend on worker count") {
  ProductEngine serial_engine, parallel_engine;
  set_worker_count(1);
  const LRElement serial = tensor_power(serial_engine, P({3, 1}), 6, 3);
  set_worker_count(4);
  const LRElement parallel = tensor_power(parallel_engine, P({3, 1}), 6, 3);
  set_worker_count(1);
  CHECK(serial == parallel);
}

TEST_CASE("budget") {
  ProductEngine engine;
  const std::size_t saved = term_budget();
  set_term_budget(10);
  try {
    tensor_power(engine, P({1}), 8, std::nullopt);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }
  set_term_budget(saved);
}

TEST_CASE("power cache round trip") {
  const auto path = temp_file("roundtrip.cache");
  std::filesystem::remove(path);
  ProductEngine source;
  const LRElement big = tensor_power(source, P({2, 1}), 5, 3);
  tensor_power(source, P({1}), 4, std::nullopt);
  const std::size_t written = save_power_cache(path, source);
  CHECK(written == source.power_entries().size());

  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == kPowerCacheMagic);

  ProductEngine target;
  CHECK(load_power_cache(path, target) == written);
  REQUIRE(target.find_power(P({2, 1}), 5, 3));
  CHECK(*target.find_power(P({2, 1}), 5, 3) == big);
  CHECK(tensor_power(target, P({2, 1}), 5, 3) == big);
  std::filesystem::remove(path);
}

TEST_CASE("stale and corrupt cache files") {
  ProductEngine engine;
  CHECK(load_power_cache(temp_file("missing.cache"), engine) == 0);

  const auto stale = temp_file("stale.cache");
  std::ofstream(stale) << "LRPOW0\nE [1] 2 - 1\n[2] 1\n";
  CHECK(load_power_cache(stale, engine) == 0);
  std::filesystem::remove(stale);

  const auto corrupt = temp_file("corrupt.cache");
  std::ofstream(corrupt) << "LRPOW1\nE [1] 2 - 3\n[2] 1\n";
  try {
    load_power_cache(corrupt, engine);
    FAIL("expected CacheFormat");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CacheFormat);
  }
  std::filesystem::remove(corrupt);
}
