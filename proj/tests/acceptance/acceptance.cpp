// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any
// criterion fails. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "lrlab/dimension.hpp"
#include "lrlab/enumerate.hpp"
#include "lrlab/error.hpp"
#include "lrlab/lab/cone.hpp"
#include "lrlab/lab/theorem.hpp"
#include "lrlab/lab/transfer.hpp"
#include "lrlab/lab/verify.hpp"
#include "lrlab/product.hpp"
#include "lrlab/tableau.hpp"

using namespace lrlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> check;
};

Outcome product_oracle() {
  std::size_t pairs = 0;
  for (const Partition& a : partitions_up_to(5, 4)) {
    for (const Partition& b : partitions_up_to(5, 4)) {
      ++pairs;
      if (mul(a, b) != mul_tableau(a, b)) return {false, "differs at A=" + to_string(a) + " B=" + to_string(b)};
    }
  }
  return {true, std::to_string(pairs) + " pairs"};
}

Outcome two_columns() {
  std::size_t cases = 0;
  for (int r = 1; r <= 6; ++r) {
    for (int s = r; s <= 6; ++s) {
      LRElement expected;
      for (int k = 0; k <= r; ++k) expected.add_term(add_pointwise(column(r - k), column(s + k)), 1);
      ++cases;
      if (mul(column(r), column(s)) != expected) return {false, "differs at r=" + std::to_string(r) + " s=" + std::to_string(s)};
    }
  }
  return {true, std::to_string(cases) + " pairs (r,s)"};
}

Outcome dimension_identity() {
  std::size_t cases = 0;
  const auto parts = partitions_up_to(5);
  for (int d = 1; d <= 4; ++d) {
    for (const Partition& a : parts) {
      for (const Partition& b : parts) {
        BigInt sum = 0;
        for (const auto& [c, k] : mul(a, b)) sum += lr_coefficient(a, b, c) * gl_dimension(c, d);
        ++cases;
        if (sum != gl_dimension(a, d) * gl_dimension(b, d)) {
          return {false, "fails at d=" + std::to_string(d) + " A=" + to_string(a) + " B=" + to_string(b)};
        }
      }
    }
  }
  return {true, std::to_string(cases) + " cases"};
}

Outcome lemma_suites() {
  std::string detail;
  bool pass = true;
  for (lab::LemmaId id : lab::all_lemmas()) {
    const auto r = lab::verify_lemma(id);
    if (!detail.empty()) detail += ", ";
    detail += std::string(lab::lemma_name(id)) + ' ' + (r.passed() ? "PASS" : "FAIL") + '/' + std::to_string(r.cases);
    pass = pass && r.passed() && r.cases > 0;
  }
  return {pass, detail};
}

Outcome main_theorem() {
  std::size_t cases = 0;
  for (int l = 1; l <= 3; ++l) {
    for (const Partition& a : partitions_up_to(5, l)) {
      for (int n = l; n <= l + 2; ++n) {
        ++cases;
        const auto r = lab::property_holds(a, n, l);
        if (!r.holds) {
          return {false, "fails at A=" + to_string(a) + " l=" + std::to_string(l) + " n=" + std::to_string(n) +
                             " B=" + to_string(*r.counterexample)};
        }
      }
    }
  }
  const auto low = lab::property_holds(Partition{2}, 1, 2);
  if (low.holds || *low.counterexample != Partition{1, 1}) return {false, "A=[2], l=2, n=1 does not fail with B=[1,1]"};
  return {true, std::to_string(cases) + " cases; A=[2] l=2 n=1 fails with B=[1,1]"};
}

Outcome bound_sanity() {
  std::size_t cases = 0;
  std::uint64_t largest_threshold = 0;
  for (int l = 1; l <= 3; ++l) {
    for (const Partition& a : partitions_up_to(4, l)) {
      if (a.empty()) continue;
      ++cases;
      const auto s = lab::minimal_uniform_exponent(a, l, l + 3);
      const auto b = lab::theorem_bound(a, l);
      if (!s.threshold) return {false, "no threshold for A=" + to_string(a) + " l=" + std::to_string(l)};
      largest_threshold = std::max<std::uint64_t>(largest_threshold, static_cast<std::uint64_t>(*s.threshold));
      if (b.bound < static_cast<std::uint64_t>(*s.threshold)) {
        return {false, "bound " + std::to_string(b.bound) + " below threshold " + std::to_string(*s.threshold) +
                           " for A=" + to_string(a) + " l=" + std::to_string(l)};
      }
    }
  }
  return {true, std::to_string(cases) + " cases, largest threshold " + std::to_string(largest_threshold)};
}

Outcome cone_generation() {
  std::size_t cases = 0;
  for (int l = 1; l <= 3; ++l) {
    for (const Partition& a : partitions_up_to(4, l)) {
      if (a.empty()) continue;
      for (int n = 1; n <= 3; ++n) {
        for (const Partition& b : dominated_partitions(scale(a, n), l)) {
          ++cases;
          const std::string where = " at B=" + to_string(b) + " A=" + to_string(a) + " l=" + std::to_string(l);
          try {
            const auto c = lab::cone_generator_decomposition(b, a, l);
            if (!lab::certificate_reproduces(c, b, a, l)) return {false, "certificate does not reproduce" + where};
          } catch (const Error& e) {
            return {false, e.what() + where};
          }
        }
      }
    }
  }
  return {true, std::to_string(cases) + " decompositions"};
}

Outcome transfer_witnesses() {
  struct Case {
    Partition a, b;
    int d;
    int expected_t;  // 0: any witness
  };
  const std::vector<Case> cases{
      {{1}, {1, 1}, 2, 1},
      {{2}, {1, 1}, 2, 2},
      {{3}, {1}, 3, 0},
      {{1}, {3}, 3, 0},
  };
  std::string detail;
  for (const Case& c : cases) {
    const std::string label = to_string(c.a) + "->" + to_string(c.b);
    try {
      const auto w = lab::transfer_witness(c.a, c.b, c.d, 6);
      if (c.expected_t && w.t != c.expected_t) return {false, label + " gives t=" + std::to_string(w.t)};
      const std::size_t confirmed = lab::spot_check_witness(w, c.a, c.b, c.d);
      if (confirmed != std::min<std::size_t>(10, w.support_b)) return {false, label + " spot check failed"};
      if (!detail.empty()) detail += ", ";
      detail += label + " t=" + std::to_string(w.t);
    } catch (const Error& e) {
      return {false, label + ": " + e.what()};
    }
  }
  return {true, detail};
}

Outcome cli_determinism() {
  const std::vector<std::vector<std::string>> commands{
      {"mul", "[3,2,1]", "[2,2,1]"},
      {"mul", "[3,2,1]", "[2,2,1]", "--l", "3", "--json"},
      {"power", "[2,1]", "8", "--l", "3", "--json"},
      {"power", "[1]", "7"},
      {"dominance", "[4,1,1]", "[3,3]"},
      {"interpolate", "[5,1]", "[2,2,1,1]"},
      {"gj", "[3,1]", "--l", "3", "--json"},
      {"hj", "[2,1]", "--l", "3", "--J", "1|2|3", "--beta", "2", "--delta", "1"},
      {"verify", "--all", "--json"},
      {"verify", "--lemma", "H_MULT_P"},
      {"nsearch", "[2,1]", "--l", "3", "--nmax", "5", "--bound"},
      {"cone", "[5,4,3]", "[2,1,1]", "--l", "3", "--json"},
      {"transfer", "[3]", "[1]", "--d", "3", "--tmax", "4", "--spot-check"},
  };
  for (const auto& cmd : commands) {
    std::string outputs[2];
    int codes[2];
    const char* threads[2] = {"1", "8"};
    for (int i = 0; i < 2; ++i) {
      auto args = cmd;
      args.insert(args.begin(), {"--threads", threads[i]});
      default_engine().clear();
      std::ostringstream out, err;
      codes[i] = cli::run_command(args, out, err);
      outputs[i] = out.str() + "\x1f" + err.str();
    }
    if (codes[0] != codes[1] || outputs[0] != outputs[1]) {
      std::string joined;
      for (const auto& a : cmd) joined += ' ' + a;
      return {false, "output differs for" + joined};
    }
  }
  return {true, std::to_string(commands.size()) + " commands identical at 1 and 8 threads"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "product oracle equivalence", 60, product_oracle},
      {2, "two-column closed form", 1, two_columns},
      {3, "dimension identity", 60, dimension_identity},
      {4, "lemma suites at default bounds", 600, lemma_suites},
      {5, "uniform exponent property", 300, main_theorem},
      {6, "bound sanity", 300, bound_sanity},
      {7, "cone generation", 300, cone_generation},
      {8, "transfer witnesses", 120, transfer_witnesses},
      {9, "CLI determinism across thread counts", 600, cli_determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && seconds > c.limit_seconds) {
      o.pass = false;
      o.detail += "; exceeded time limit";
    }
    if (!o.pass) ++failed;
    std::printf("criterion %d %s: %s (%s; %.2f s)\n", c.number, c.name.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
