#include "lrlab/element.hpp"

#include "lrlab/error.hpp"

namespace lrlab {

namespace {

bool fits(const Partition& p, Cap cap) { return !cap || p.length() <= *cap; }

std::string cap_text(Cap cap) { return cap ? std::to_string(*cap) : std::string("none"); }

}  // namespace

LRElement LRElement::of(const Partition& p, Cap cap) {
  LRElement e(cap);
  e.add_term(p, 1);
  return e;
}

LRElement::LRElement(TermMap terms, Cap cap) : cap_(cap) {
  for (auto& [p, m] : terms) {
    if (m < 0) throw Error(Errc::CapMismatch, "negative multiplicity for " + to_string(p));
    if (!fits(p, cap)) throw Error(Errc::CapMismatch, to_string(p) + " is longer than cap " + cap_text(cap));
    if (m != 0) terms_.emplace(p, std::move(m));
  }
}

BigInt LRElement::multiplicity(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LRElement::add_term(const Partition& p, const BigInt& m) {
  if (m == 0 || !fits(p, cap_)) return;
  auto [it, inserted] = terms_.try_emplace(p, m);
  if (!inserted) it->second += m;
}

LRElement element_add(const LRElement& m, const LRElement& n) {
  if (m.cap() != n.cap()) {
    throw Error(Errc::CapMismatch, "caps " + cap_text(m.cap()) + " and " + cap_text(n.cap()));
  }
  LRElement out = m;
  for (const auto& [p, k] : n) out.add_term(p, k);
  return out;
}

LRElement bullet_prepend(int a, const LRElement& m) {
  if (a < 0) throw Error(Errc::NegativeEntry, "bullet_prepend needs a >= 0");
  // (a)∘A has one more row; in ℒ(l) the prepended row may push it past the cap.
  LRElement out(m.cap());
  for (const auto& [p, k] : m) {
    if (p.first() > a) continue;
    std::vector<int> parts;
    parts.reserve(p.parts().size() + 1);
    parts.push_back(a);
    parts.insert(parts.end(), p.parts().begin(), p.parts().end());
    out.add_term(make_partition_unchecked(std::move(parts)), k);
  }
  return out;
}

LRElement shift_add(const Partition& a, const LRElement& m) {
  if (m.cap() && a.length() > *m.cap()) {
    throw Error(Errc::CapMismatch, to_string(a) + " is longer than cap " + cap_text(m.cap()));
  }
  LRElement out(m.cap());
  for (const auto& [p, k] : m) out.add_term(add_pointwise(a, p), k);
  return out;
}

LRElement truncate_to_length(const LRElement& m, int l) {
  if (l < 0) throw Error(Errc::IndexOutOfRange, "negative length cap");
  Cap cap = m.cap() ? Cap(std::min(*m.cap(), l)) : Cap(l);
  LRElement out(cap);
  for (const auto& [p, k] : m) out.add_term(p, k);
  return out;
}

bool leq_elementwise(const LRElement& m, const LRElement& n) {
  for (const auto& [p, k] : m) {
    if (k > n.multiplicity(p)) return false;
  }
  return true;
}

BigInt total_multiplicity(const LRElement& m) {
  BigInt sum = 0;
  for (const auto& [p, k] : m) sum += k;
  return sum;
}

namespace detail {

void accumulate(SignedTerms& into, const Partition& p, const BigInt& m) {
  if (m == 0) return;
  auto [it, inserted] = into.try_emplace(p, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) into.erase(it);
  }
}

}  // namespace detail

}  // namespace lrlab
