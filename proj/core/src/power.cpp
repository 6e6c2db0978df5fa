#include "lrlab/power.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "lrlab/error.hpp"
#include "lrlab/parallel.hpp"

namespace lrlab {

namespace {

constexpr std::size_t kDefaultBudget = 5'000'000;

std::size_t budget_from_env() {
  if (const char* env = std::getenv("LRLAB_BUDGET"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

std::atomic<std::size_t>& budget_slot() {
  static std::atomic<std::size_t> slot{budget_from_env()};
  return slot;
}

// M ⊗ A, split over chunks of M's terms and summed back in chunk order.
LRElement multiply_step(ProductEngine& engine, const LRElement& cur, const Partition& a) {
  std::vector<const TermMap::value_type*> terms;
  terms.reserve(cur.size());
  for (const auto& t : cur) terms.push_back(&t);
  const std::size_t chunks = std::min<std::size_t>(terms.size(), static_cast<std::size_t>(worker_count()) * 4);
  if (chunks <= 1) return engine.mul(cur, a);
  auto partials = parallel_map(chunks, [&](std::size_t c) {
    LRElement part(cur.cap());
    for (std::size_t i = c; i < terms.size(); i += chunks) {
      const auto& [p, k] = *terms[i];
      for (const auto held = engine.mul(p, a, cur.cap()); const auto& [q, j] : *held) part.add_term(q, k * j);
    }
    return part;
  });
  LRElement out(cur.cap());
  for (const LRElement& part : partials) {
    for (const auto& [q, j] : part) out.add_term(q, j);
  }
  return out;
}

std::string cap_token(Cap cap) { return cap ? std::to_string(*cap) : std::string("-"); }

}  // namespace

void set_term_budget(std::size_t terms) { budget_slot().store(terms == 0 ? kDefaultBudget : terms); }

std::size_t term_budget() noexcept { return budget_slot().load(); }

LRElement tensor_power(ProductEngine& engine, const Partition& a, int n, Cap cap) {
  if (n < 0) throw Error(Errc::IndexOutOfRange, "negative exponent");
  if (n == 0) return LRElement::of(Partition{}, cap);

  int k = n;
  std::shared_ptr<const LRElement> start;
  for (; k >= 1; --k) {
    if ((start = engine.find_power(a, k, cap))) break;
  }
  if (k == n) return *start;

  LRElement cur = start ? *start : LRElement::of(Partition{}, cap);
  for (int step = k + 1; step <= n; ++step) {
    cur = multiply_step(engine, cur, a);
    if (cur.size() > term_budget()) {
      throw Error(Errc::BudgetExceeded, to_string(a) + "^" + std::to_string(step) + " has " +
                                            std::to_string(cur.size()) + " terms (budget " +
                                            std::to_string(term_budget()) + ")");
    }
    engine.store_power(a, step, cap, std::make_shared<const LRElement>(cur));
  }
  return cur;
}

LRElement tensor_power(const Partition& a, int n, Cap cap) { return tensor_power(default_engine(), a, n, cap); }

std::size_t load_power_cache(const std::filesystem::path& path, ProductEngine& engine) {
  std::ifstream in(path);
  if (!in) return 0;
  std::string header;
  if (!std::getline(in, header) || header != kPowerCacheMagic) return 0;

  auto corrupt = [&](const std::string& why) {
    return Error(Errc::CacheFormat, path.string() + ": " + why);
  };
  std::size_t loaded = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream head(line);
    std::string tag, base_text, cap_text;
    int exponent = 0;
    std::size_t count = 0;
    if (!(head >> tag >> base_text >> exponent >> cap_text >> count) || tag != "E") throw corrupt("bad entry header");
    const Partition base = parse_partition(base_text);
    Cap cap;
    if (cap_text != "-") cap = std::stoi(cap_text);
    TermMap terms;
    for (std::size_t i = 0; i < count; ++i) {
      if (!std::getline(in, line)) throw corrupt("truncated entry");
      std::istringstream row(line);
      std::string p_text, m_text;
      if (!(row >> p_text >> m_text)) throw corrupt("bad term line");
      terms.emplace(parse_partition(p_text), parse_bigint(m_text));
    }
    engine.store_power(base, exponent, cap, std::make_shared<const LRElement>(std::move(terms), cap));
    ++loaded;
  }
  return loaded;
}

std::size_t save_power_cache(const std::filesystem::path& path, const ProductEngine& engine) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(Errc::CacheFormat, "cannot write " + path.string());
  out << kPowerCacheMagic << '\n';
  const auto entries = engine.power_entries();
  for (const auto& [key, value] : entries) {
    out << "E " << to_string(key.base) << ' ' << key.exponent << ' ' << cap_token(key.cap) << ' ' << value->size()
        << '\n';
    for (const auto& [p, m] : *value) out << to_string(p) << ' ' << to_decimal(m) << '\n';
  }
  return entries.size();
}

}  // namespace lrlab
