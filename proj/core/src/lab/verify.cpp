#include "lrlab/lab/verify.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <set>
#include <utility>

#include "lrlab/constructions.hpp"
#include "lrlab/enumerate.hpp"
#include "lrlab/error.hpp"
#include "lrlab/parallel.hpp"
#include "lrlab/power.hpp"
#include "lrlab/product.hpp"
#include "lrlab/signed_vector.hpp"

namespace lrlab::lab {

namespace {

using Instance = std::function<std::optional<Failure>()>;

struct Sweep {
  std::vector<Instance> instances;
  std::vector<std::string> notes;
};

struct LemmaInfo {
  LemmaId id;
  std::string_view name;
  Bounds defaults;
};

const std::array<LemmaInfo, 14>& lemma_table() {
  static const std::array<LemmaInfo, 14> table{{
      {LemmaId::Smaller, "SMALLER", {6, {}, {}, {}}},
      {LemmaId::Chi, "CHI", {5, 3, {}, {}}},
      {LemmaId::ATensorL, "ATENSORL", {5, 3, {}, {}}},
      {LemmaId::Exchange, "EXCHANGE", {{}, 5, {}, {}}},
      {LemmaId::GInTensor, "G_IN_TENSOR", {4, 3, {}, {}}},
      {LemmaId::HInTensor, "H_IN_TENSOR", {4, 3, {}, {}}},
      {LemmaId::HMultP, "H_MULT_P", {4, 3, {}, {}}},
      {LemmaId::AMultPP, "A_MULT_PP", {4, 3, 2, {}}},
      {LemmaId::MultPlus, "MULT_PLUS", {6, {}, {}, {}}},
      {LemmaId::MultInert, "MULT_INERT", {6, {}, {}, {}}},
      {LemmaId::MultCirc, "MULT_CIRC", {6, 4, {}, {}}},
      {LemmaId::PSeq, "PSEQ", {8, {}, {}, {}}},
      {LemmaId::ChiSymmetry, "CHI_SYMMETRY", {4, 3, {}, 4}},
      {LemmaId::HighestTerm, "HIGHEST_TERM", {6, {}, {}, {}}},
  }};
  return table;
}

const LemmaInfo& info(LemmaId id) {
  for (const auto& e : lemma_table()) {
    if (e.id == id) return e;
  }
  throw Error(Errc::UnknownLemma, "unregistered lemma id");
}

std::string str(int v) { return std::to_string(v); }

Failure failure(std::vector<std::pair<std::string, std::string>> inputs, std::string reason) {
  return Failure{std::move(inputs), std::move(reason)};
}

bool in(const Partition& p, const LRElement& m) { return m.contains(p); }

Partition signed_to_partition(const SignedVector& v) { return *v.to_partition(); }

// ---------------------------------------------------------------------------

// A¹ ≻ A² and C¹ ≺ C², each at distance one, with ρ(A¹\A²) <= ρ(C²\C¹) and
// ρ(C¹\C²) <= ρ(A²\A¹): A¹ ⊗ C¹ ⊳ A² + C².
Sweep sweep_smaller(const Bounds& b) {
  struct Move {
    Partition upper;
    CellMove move;
  };
  std::vector<Move> moves;
  for (const Partition& p : partitions_up_to(*b.max_weight)) {
    for (CellMove& m : single_cell_descents(p)) moves.push_back({p, std::move(m)});
  }
  Sweep s;
  std::size_t literal = 0;
  for (const Move& a : moves) {
    for (const Move& c : moves) {
      // Literal hypothesis set: both pairs moving a cell downward with
      // ρ(A¹\A²) >= ρ(C²\C¹) and ρ(C¹\C²) >= ρ(A²\A¹).
      if (a.move.removed_row >= c.move.added_row && c.move.removed_row >= a.move.added_row) ++literal;

      // Checked form: C¹ = c.lower, C² = c.upper.
      if (a.move.removed_row <= c.move.removed_row && c.move.added_row <= a.move.added_row) {
        s.instances.push_back([a1 = a.upper, a2 = a.move.lower, c1 = c.move.lower, c2 = c.upper]() -> std::optional<Failure> {
          const Partition target = add_pointwise(a2, c2);
          if (in(target, mul(a1, c1))) return std::nullopt;
          return failure({{"A1", to_string(a1)}, {"A2", to_string(a2)}, {"C1", to_string(c1)}, {"C2", to_string(c2)}},
                         "A2+C2 = " + to_string(target) + " missing from A1 (x) C1");
        });
      }
    }
  }
  s.notes.push_back("hypotheses with C1 > C2, rho(A1\\A2) >= rho(C2\\C1), rho(C1\\C2) >= rho(A2\\A1) admit " +
                    std::to_string(literal) + " instances (the row inequalities contradict a downward move)");
  s.notes.push_back("checked: A1 > A2, C1 < C2 at distance one, rho(A1\\A2) <= rho(C2\\C1), rho(C1\\C2) <= rho(A2\\A1)");
  return s;
}

// A + χ(B) a partition ⇒ (A + χ(B)) ⊗ B ⊳ A in ℒ(l).
Sweep sweep_chi(const Bounds& b) {
  Sweep s;
  for (int l = 1; l <= *b.max_length; ++l) {
    const auto parts = partitions_up_to(*b.max_weight, l);
    for (const Partition& a : parts) {
      for (const Partition& bb : parts) {
        const SignedVector v = SignedVector::from_partition(a, l) + chi(bb, l);
        if (!v.is_partition()) continue;
        s.instances.push_back([a, bb, l, base = signed_to_partition(v)]() -> std::optional<Failure> {
          if (in(a, mul(base, bb, l))) return std::nullopt;
          return failure({{"A", to_string(a)}, {"B", to_string(bb)}, {"l", str(l)}},
                         "A missing from (A+chi(B)) (x) B = " + to_string(base) + " (x) B");
        });
      }
    }
  }
  return s;
}

// |A| D(l) ⊲ A^⊗l and |A| D(l) + χ(A) ⊲ A^⊗(l-1).
Sweep sweep_atensorl(const Bounds& b) {
  Sweep s;
  for (int l = 1; l <= *b.max_length; ++l) {
    for (const Partition& a : partitions_up_to(*b.max_weight, l)) {
      s.instances.push_back([a, l]() -> std::optional<Failure> {
        const Partition full = scale(determinant(l), a.weight());
        if (!in(full, tensor_power(a, l, l))) {
          return failure({{"A", to_string(a)}, {"l", str(l)}}, "|A|D(l) = " + to_string(full) + " missing from A^l");
        }
        const SignedVector v = SignedVector::from_partition(full, l) + chi(a, l);
        const auto dual = v.to_partition();
        if (!dual || !in(*dual, tensor_power(a, l - 1, l))) {
          return failure({{"A", to_string(a)}, {"l", str(l)}},
                         "|A|D(l)+chi(A) = " + to_string(v) + " missing from A^(l-1)");
        }
        return std::nullopt;
      });
    }
  }
  return s;
}

// (Λ^r + Λ^{l-t}) ⊗ (Λ^s + Λ^{l-u}) ⊳ D(l) + Λ^{r+s-1} + Λ^{l-t-u+1},
// with multiplicity 1 when rstu = 0 and 2 otherwise.
Sweep sweep_exchange(const Bounds& b) {
  Sweep s;
  for (int l = 1; l <= *b.max_length; ++l) {
    for (int r = 0; r <= l; ++r)
      for (int ss = 0; ss <= l; ++ss)
        for (int t = 0; t <= l; ++t)
          for (int u = 0; u <= l; ++u) {
            if (r + ss <= 0 || t + u <= 0 || r + t <= 0 || ss + u <= 0 || r + ss + t + u > l) continue;
            s.instances.push_back([=]() -> std::optional<Failure> {
              const Partition x = add_pointwise(column(r), column(l - t));
              const Partition y = add_pointwise(column(ss), column(l - u));
              const Partition target =
                  add_pointwise(add_pointwise(determinant(l), column(r + ss - 1)), column(l - t - u + 1));
              const BigInt got = mul(x, y, l).multiplicity(target);
              const int expected = (r * ss * t * u == 0) ? 1 : 2;
              if (got == expected) return std::nullopt;
              return failure({{"l", str(l)}, {"r", str(r)}, {"s", str(ss)}, {"t", str(t)}, {"u", str(u)}},
                             "multiplicity of " + to_string(target) + " is " + to_decimal(got) + ", expected " +
                                 std::to_string(expected));
            });
          }
  }
  s.notes.push_back("also checks the exact multiplicity: 1 when rstu = 0, otherwise 2");
  return s;
}

// G_J(A) ⊲ A^⊗L(l) and G_J(A) + χ_J(A) ⊲ A^⊗(L(l)-1).
Sweep sweep_g_in_tensor(const Bounds& b) {
  Sweep s;
  for (int l = 1; l <= *b.max_length; ++l) {
    const int big_l = static_cast<int>(lcm_upto(l));
    for (const Partition& a : partitions_up_to(*b.max_weight, l)) {
      for (const Subdivision& j : enumerate_subdivisions(l)) {
        s.instances.push_back([a, j, l, big_l]() -> std::optional<Failure> {
          const Partition g = build_G(a, j);
          auto inputs = [&] {
            return std::vector<std::pair<std::string, std::string>>{{"A", to_string(a)}, {"l", str(l)}, {"J", to_string(j)}};
          };
          if (!in(g, tensor_power(a, big_l, l))) return failure(inputs(), "G_J(A) = " + to_string(g) + " missing from A^L");
          const SignedVector v = SignedVector::from_partition(g, l) + chi_J(a, j);
          const auto p = v.to_partition();
          if (!p) return failure(inputs(), "G_J(A)+chi_J(A) = " + to_string(v) + " is not a partition");
          if (!in(*p, tensor_power(a, big_l - 1, l))) {
            return failure(inputs(), "G_J(A)+chi_J(A) = " + to_string(*p) + " missing from A^(L-1)");
          }
          return std::nullopt;
        });
      }
    }
  }
  return s;
}

// 1 <= δ < β, ã_β > 0, m = J(ã_β), n = J(ã_δ+1): H_J(A,m,n) is a partition
// and lies in A^⊗L(l).
Sweep sweep_h_in_tensor(const Bounds& b) {
  Sweep s;
  for (int l = 1; l <= *b.max_length; ++l) {
    const int big_l = static_cast<int>(lcm_upto(l));
    for (const Partition& a : partitions_up_to(*b.max_weight, l)) {
      const Partition cols = conjugate(a);
      for (const Subdivision& j : enumerate_subdivisions(l)) {
        for (int beta = 2; beta <= cols.length(); ++beta) {
          for (int delta = 1; delta < beta; ++delta) {
            if (cols[delta] + 1 > l) continue;
            s.instances.push_back([a, j, l, big_l, beta, delta]() -> std::optional<Failure> {
              const HConstruction h = build_H(a, j, beta, delta);
              std::vector<std::pair<std::string, std::string>> inputs{
                  {"A", to_string(a)}, {"l", str(l)}, {"J", to_string(j)}, {"beta", str(beta)}, {"delta", str(delta)}};
              if (!h.partition) return failure(std::move(inputs), "H = " + to_string(h.entries) + " is not a partition");
              if (!in(*h.partition, tensor_power(a, big_l, l))) {
                return failure(std::move(inputs), "H = " + to_string(*h.partition) + " missing from A^L");
              }
              return std::nullopt;
            });
          }
        }
      }
    }
  }
  return s;
}

// H_J(A,m,n) a partition, P ≻ P' at distance one, J(ρ(P\P')) <= m,
// n <= J(ρ(P'\P)), m < n or (m = n and |I_m| > 1): H ⊗ P ⊳ G_J(A) + P'.
Sweep sweep_h_mult_p(const Bounds& b) {
  Sweep s;
  for (int l = 1; l <= *b.max_length; ++l) {
    const auto parts = partitions_up_to(*b.max_weight, l);
    for (const Partition& a : parts) {
      for (const Subdivision& j : enumerate_subdivisions(l)) {
        for (int m = 1; m <= j.count(); ++m) {
          for (int n = m; n <= j.count(); ++n) {
            if (m == n && j.interval(m).size() <= 1) continue;
            const HConstruction h = build_H_raw(a, j, m, n);
            if (!h.partition) continue;
            for (const Partition& p : parts) {
              for (const CellMove& mv : single_cell_descents(p, l)) {
                if (j.block_of(mv.removed_row) > m || n > j.block_of(mv.added_row)) continue;
                s.instances.push_back([a, j, l, m, n, hp = *h.partition, p, pl = mv.lower]() -> std::optional<Failure> {
                  const Partition target = add_pointwise(build_G(a, j), pl);
                  if (in(target, mul(hp, p, l))) return std::nullopt;
                  return failure({{"A", to_string(a)}, {"l", str(l)}, {"J", to_string(j)}, {"m", str(m)}, {"n", str(n)},
                                  {"P", to_string(p)}, {"P'", to_string(pl)}},
                                 "G_J(A)+P' = " + to_string(target) + " missing from H (x) P");
                });
              }
            }
          }
        }
      }
    }
  }
  return s;
}

// A ≻ B at distance k: A^⊗(kL) ⊗ A ⊳ k G_J(A) + B.
Sweep sweep_a_mult_pp(const Bounds& b) {
  Sweep s;
  for (int l = 1; l <= *b.max_length; ++l) {
    const int big_l = static_cast<int>(lcm_upto(l));
    for (const Partition& a : partitions_up_to(*b.max_weight, l)) {
      for (const Partition& lower : dominated_partitions(a, l)) {
        if (lower == a) continue;
        const int k = distance(a, lower);
        if (k > *b.max_distance) continue;
        for (const Subdivision& j : enumerate_subdivisions(l)) {
          s.instances.push_back([a, lower, k, j, l, big_l]() -> std::optional<Failure> {
            const Partition target = add_pointwise(scale(build_G(a, j), k), lower);
            if (in(target, tensor_power(a, k * big_l + 1, l))) return std::nullopt;
            return failure({{"A", to_string(a)}, {"B", to_string(lower)}, {"l", str(l)}, {"J", to_string(j)}},
                           "kG_J(A)+B = " + to_string(target) + " missing from A^(kL+1)");
          });
        }
      }
    }
  }
  s.notes.push_back("exponent k*L(r) evaluated with r = l, i.e. k*lcm(1..l)");
  return s;
}

// Every partition tuple with total weight <= w, in a fixed order.
std::vector<std::vector<Partition>> tuples_up_to(int w, int arity) {
  std::vector<std::vector<Partition>> out;
  std::vector<Partition> cur;
  std::function<void(int)> rec = [&](int budget) {
    if (static_cast<int>(cur.size()) == arity) {
      out.push_back(cur);
      return;
    }
    for (const Partition& p : partitions_up_to(budget)) {
      cur.push_back(p);
      rec(budget - p.weight());
      cur.pop_back();
    }
  };
  rec(w);
  return out;
}

// A_i ⊲ B_i ⊗ C_i ⇒ A_1 + A_2 ⊲ (B_1+B_2) ⊗ (C_1+C_2).
Sweep sweep_mult_plus(const Bounds& b) {
  Sweep s;
  for (auto& t : tuples_up_to(*b.max_weight, 4)) {
    s.instances.push_back([t]() -> std::optional<Failure> {
      const LRElement big = mul(add_pointwise(t[0], t[2]), add_pointwise(t[1], t[3]));
      const LRElement first = mul(t[0], t[1]);
      const LRElement second = mul(t[2], t[3]);
      for (const auto& [a1, m1] : first) {
        for (const auto& [a2, m2] : second) {
          if (!in(add_pointwise(a1, a2), big)) {
            return failure({{"B1", to_string(t[0])}, {"C1", to_string(t[1])}, {"B2", to_string(t[2])},
                            {"C2", to_string(t[3])}, {"A1", to_string(a1)}, {"A2", to_string(a2)}},
                           "A1+A2 missing from (B1+B2) (x) (C1+C2)");
          }
        }
      }
      return std::nullopt;
    });
  }
  s.notes.push_back("max_weight bounds |B1|+|C1|+|B2|+|C2|");
  return s;
}

// (A + B) ⊗ C ⊳ A ∔ (B ⊗ C), with multiplicities.
Sweep sweep_mult_inert(const Bounds& b) {
  Sweep s;
  for (auto& t : tuples_up_to(*b.max_weight, 3)) {
    s.instances.push_back([t]() -> std::optional<Failure> {
      const LRElement lhs = mul(add_pointwise(t[0], t[1]), t[2]);
      const LRElement rhs = shift_add(t[0], mul(t[1], t[2]));
      if (leq_elementwise(rhs, lhs)) return std::nullopt;
      return failure({{"A", to_string(t[0])}, {"B", to_string(t[1])}, {"C", to_string(t[2])}},
                     "A +' (B (x) C) not below (A+B) (x) C");
    });
  }
  s.notes.push_back("max_weight bounds |A|+|B|+|C|");
  return s;
}

// A_i ⊲ B[I_i] ⊗ C[I_i] ⇒ A_1 ∘ ... ∘ A_ι ∈ 𝒫(l) and ⊲ B ⊗ C in ℒ(l).
Sweep sweep_mult_circ(const Bounds& b) {
  Sweep s;
  for (int l = 1; l <= *b.max_length; ++l) {
    const auto parts = partitions_up_to(*b.max_weight, l);
    for (const Partition& bb : parts) {
      for (const Partition& cc : parts) {
        if (bb.weight() + cc.weight() > *b.max_weight) continue;
        for (const Subdivision& j : enumerate_subdivisions(l)) {
          s.instances.push_back([bb, cc, j, l]() -> std::optional<Failure> {
            const LRElement whole = mul(bb, cc, l);
            std::vector<std::vector<std::vector<int>>> choices;
            for (const Interval& iv : j.intervals()) {
              std::vector<std::vector<int>> block;
              const LRElement local = mul(restrict(bb, iv.first, iv.last), restrict(cc, iv.first, iv.last), iv.size());
              for (const auto& [p, m] : local) block.push_back(p.padded(iv.size()));
              choices.push_back(std::move(block));
            }
            std::vector<int> cur;
            std::optional<Failure> bad;
            std::function<void(std::size_t)> rec = [&](std::size_t k) {
              if (bad) return;
              if (k == choices.size()) {
                const SignedVector v(std::vector<long long>(cur.begin(), cur.end()));
                const auto p = v.to_partition();
                if (!p || !in(*p, whole)) {
                  bad = failure({{"B", to_string(bb)}, {"C", to_string(cc)}, {"l", str(l)}, {"J", to_string(j)},
                                 {"concatenation", to_string(v)}},
                                p ? "concatenation missing from B (x) C" : "concatenation is not a partition");
                }
                return;
              }
              for (const auto& piece : choices[k]) {
                cur.insert(cur.end(), piece.begin(), piece.end());
                rec(k + 1);
                cur.resize(cur.size() - piece.size());
              }
            };
            rec(0);
            return bad;
          });
        }
      }
    }
  }
  s.notes.push_back("max_weight bounds |B|+|C|");
  return s;
}

bool cells_subset(const std::vector<Cell>& sub, const std::vector<Cell>& super) {
  const std::set<Cell> s(super.begin(), super.end());
  for (const Cell& c : sub) {
    if (!s.count(c)) return false;
  }
  return true;
}

// Interpolating sequences: length k+1, unit steps, strict descent, and the
// cell containments between any two members.
Sweep sweep_pseq(const Bounds& b) {
  Sweep s;
  for (int w = 0; w <= *b.max_weight; ++w) {
    const auto parts = partitions_of(w);
    for (const Partition& a : parts) {
      for (const Partition& bb : parts) {
        if (!dominates(a, bb)) continue;
        s.instances.push_back([a, bb]() -> std::optional<Failure> {
          auto fail = [&](const std::string& why) { return failure({{"A", to_string(a)}, {"B", to_string(bb)}}, why); };
          const auto seq = interpolating_sequence(a, bb);
          const int k = distance(a, bb);
          if (static_cast<int>(seq.size()) != k + 1) return fail("sequence length differs from k+1");
          if (seq.front() != a || seq.back() != bb) return fail("endpoints differ");
          for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            if (distance(seq[i], seq[i + 1]) != 1) return fail("adjacent distance is not 1 at step " + std::to_string(i));
            if (dominance_compare(seq[i], seq[i + 1]) != Dominance::Greater) return fail("step " + std::to_string(i) + " is not a strict descent");
          }
          const DiagramDifference ends = diagram_difference(a, bb);
          for (std::size_t i = 0; i < seq.size(); ++i) {
            for (std::size_t j = i + 1; j < seq.size(); ++j) {
              const DiagramDifference d = diagram_difference(seq[i], seq[j]);
              if (!cells_subset(d.only_first, ends.only_first) || !cells_subset(d.only_second, ends.only_second)) {
                return fail("cell containment fails for P^" + std::to_string(i) + ", P^" + std::to_string(j));
              }
            }
          }
          return std::nullopt;
        });
      }
    }
  }
  return s;
}

// (mD + χ(A)) ⊗ (nD + χ(B)) = Σ c^C_{AB} ((m+n)D + χ(C)) in ℒ(l).
Sweep sweep_chi_symmetry(const Bounds& b) {
  Sweep s;
  for (int l = 1; l <= *b.max_length; ++l) {
    const auto parts = partitions_up_to(*b.max_weight, l);
    for (const Partition& a : parts) {
      for (const Partition& bb : parts) {
        for (int m = 0; m <= *b.max_shift; ++m) {
          for (int n = 0; n <= *b.max_shift; ++n) {
            const auto x = (SignedVector::from_partition(scale(determinant(l), m), l) + chi(a, l)).to_partition();
            const auto y = (SignedVector::from_partition(scale(determinant(l), n), l) + chi(bb, l)).to_partition();
            if (!x || !y) continue;
            s.instances.push_back([a, bb, l, m, n, x = *x, y = *y]() -> std::optional<Failure> {
              auto inputs = [&] {
                return std::vector<std::pair<std::string, std::string>>{
                    {"A", to_string(a)}, {"B", to_string(bb)}, {"l", str(l)}, {"m", str(m)}, {"n", str(n)}};
              };
              const Partition shift = scale(determinant(l), m + n);
              LRElement rhs(l);
              for (const auto& [c, k] : mul(a, bb, l)) {
                const SignedVector z = SignedVector::from_partition(shift, l) + chi(c, l);
                const auto zp = z.to_partition();
                if (!zp) return failure(inputs(), "(m+n)D+chi(C) = " + to_string(z) + " is not a partition");
                rhs.add_term(*zp, k);
              }
              if (mul(x, y, l) == rhs) return std::nullopt;
              return failure(inputs(), "dual product differs from the reflected product");
            });
          }
        }
      }
    }
  }
  return s;
}

// A + B occurs once in A ⊗ B and every other term is strictly dominated by it.
Sweep sweep_highest_term(const Bounds& b) {
  Sweep s;
  const auto parts = partitions_up_to(*b.max_weight);
  for (const Partition& a : parts) {
    for (const Partition& bb : parts) {
      s.instances.push_back([a, bb]() -> std::optional<Failure> {
        const Partition top = add_pointwise(a, bb);
        const LRElement prod = mul(a, bb);
        auto fail = [&](const std::string& why) { return failure({{"A", to_string(a)}, {"B", to_string(bb)}}, why); };
        if (prod.multiplicity(top) != 1) return fail("A+B has multiplicity " + to_decimal(prod.multiplicity(top)));
        for (const auto& [c, m] : prod) {
          if (c != top && dominance_compare(c, top) != Dominance::Less) return fail(to_string(c) + " is not below A+B");
        }
        return std::nullopt;
      });
    }
  }
  s.notes.push_back("max_weight bounds |A| and |B| separately");
  return s;
}

Sweep build_sweep(LemmaId id, const Bounds& b) {
  switch (id) {
    case LemmaId::Smaller: return sweep_smaller(b);
    case LemmaId::Chi: return sweep_chi(b);
    case LemmaId::ATensorL: return sweep_atensorl(b);
    case LemmaId::Exchange: return sweep_exchange(b);
    case LemmaId::GInTensor: return sweep_g_in_tensor(b);
    case LemmaId::HInTensor: return sweep_h_in_tensor(b);
    case LemmaId::HMultP: return sweep_h_mult_p(b);
    case LemmaId::AMultPP: return sweep_a_mult_pp(b);
    case LemmaId::MultPlus: return sweep_mult_plus(b);
    case LemmaId::MultInert: return sweep_mult_inert(b);
    case LemmaId::MultCirc: return sweep_mult_circ(b);
    case LemmaId::PSeq: return sweep_pseq(b);
    case LemmaId::ChiSymmetry: return sweep_chi_symmetry(b);
    case LemmaId::HighestTerm: return sweep_highest_term(b);
  }
  throw Error(Errc::UnknownLemma, "unregistered lemma id");
}

}  // namespace

std::string_view lemma_name(LemmaId id) noexcept {
  for (const auto& e : lemma_table()) {
    if (e.id == id) return e.name;
  }
  return "UNKNOWN";
}

LemmaId parse_lemma(std::string_view name) {
  for (const auto& e : lemma_table()) {
    if (e.name == name) return e.id;
  }
  throw Error(Errc::UnknownLemma, "unknown lemma '" + std::string(name) + "'");
}

const std::vector<LemmaId>& all_lemmas() {
  static const std::vector<LemmaId> ids = [] {
    std::vector<LemmaId> v;
    for (const auto& e : lemma_table()) v.push_back(e.id);
    return v;
  }();
  return ids;
}

Bounds default_bounds(LemmaId id) { return info(id).defaults; }

Bounds resolve_bounds(LemmaId id, const Bounds& overrides) {
  const Bounds d = default_bounds(id);
  auto pick = [](const std::optional<int>& def, const std::optional<int>& over) -> std::optional<int> {
    if (!def) return std::nullopt;
    return over ? over : def;
  };
  Bounds out{pick(d.max_weight, overrides.max_weight), pick(d.max_length, overrides.max_length),
             pick(d.max_distance, overrides.max_distance), pick(d.max_shift, overrides.max_shift)};
  for (const auto* v : {&out.max_weight, &out.max_length, &out.max_distance, &out.max_shift}) {
    if (*v && **v < 0) throw Error(Errc::IndexOutOfRange, "bounds must be non-negative");
  }
  if (out.max_length && *out.max_length > 8) throw Error(Errc::IndexOutOfRange, "max length above 8 is not supported");
  return out;
}

VerificationReport verify_lemma(LemmaId id, const Bounds& overrides) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.lemma = id;
  report.bounds = resolve_bounds(id, overrides);
  Sweep sweep = build_sweep(id, report.bounds);
  report.cases = sweep.instances.size();
  report.notes = std::move(sweep.notes);
  auto results = parallel_map(sweep.instances.size(), [&](std::size_t i) { return sweep.instances[i](); });
  for (auto& r : results) {
    if (r) report.failures.push_back(std::move(*r));
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace lrlab::lab
