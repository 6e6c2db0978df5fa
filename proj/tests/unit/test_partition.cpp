#include <doctest.h>

#include "lrlab/enumerate.hpp"
#include "lrlab/error.hpp"
#include "lrlab/partition.hpp"
#include "oracle.hpp"

using namespace lrlab;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(parts); }

bool throws_code(Errc code, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}
}  // namespace

TEST_CASE("canonical form") {
  const std::vector<int> raw{2, 1, 0, 0};
  CHECK(make_partition(raw) == P({2, 1}));
  CHECK(make_partition(std::vector<int>{}).empty());
  CHECK(throws_code(Errc::NotWeaklyDecreasing, [] { make_partition(std::vector<int>{1, 2}); }));
  CHECK(throws_code(Errc::NegativeEntry, [] { make_partition(std::vector<int>{2, -1}); }));
  CHECK(P({3, 1}).weight() == 4);
  CHECK(P({3, 1})[2] == 1);
  CHECK(P({3, 1})[5] == 0);
  CHECK(P({3, 1}).padded(4) == std::vector<int>{3, 1, 0, 0});
}

TEST_CASE("text form") {
  CHECK(to_string(P({4, 2, 1})) == "[4,2,1]");
  CHECK(to_string(Partition{}) == "[]");
  CHECK(parse_partition("[4,2,1]") == P({4, 2, 1}));
  CHECK(parse_partition(" [ 3 , 0 ] ") == P({3}));
  CHECK(parse_partition("[]").empty());
  CHECK(throws_code(Errc::ParseError, [] { parse_partition("[1,x]"); }));
  CHECK(throws_code(Errc::ParseError, [] { parse_partition("1,2"); }));
  CHECK(throws_code(Errc::NotWeaklyDecreasing, [] { parse_partition("[1,2]"); }));
}

TEST_CASE("conjugate") {
  CHECK(conjugate(P({2, 1})) == P({2, 1}));
  CHECK(conjugate(P({3})) == P({1, 1, 1}));
  CHECK(conjugate(P({4, 2, 1})) == P({3, 2, 1, 1}));
  for (const Partition& a : partitions_up_to(12)) CHECK(conjugate(conjugate(a)) == a);
}

TEST_CASE("pointwise sums and columns") {
  CHECK(add_pointwise(P({2, 1}), P({1, 1})) == P({3, 2}));
  CHECK(add_pointwise(P({2, 1}), Partition{}) == P({2, 1}));
  CHECK(scale(P({2, 1}), 3) == P({6, 3}));
  CHECK(column(3) == P({1, 1, 1}));
  CHECK(column(0).empty());
  CHECK(determinant(2) == P({1, 1}));
  CHECK(column_decomposition(P({2, 1})) == std::vector<Partition>{column(2), column(1)});
  CHECK(column_decomposition(P({3})) == std::vector<Partition>{column(1), column(1), column(1)});
  CHECK(column_decomposition(Partition{}).empty());
  for (const Partition& a : partitions_up_to(10)) {
    Partition sum;
    for (const Partition& c : column_decomposition(a)) sum = add_pointwise(sum, c);
    CHECK(sum == a);
  }
}

TEST_CASE("dominance examples") {
  CHECK(dominance_compare(P({3, 1}), P({2, 2})) == Dominance::Greater);
  CHECK(dominance_compare(P({2, 2}), P({3, 1})) == Dominance::Less);
  CHECK(dominance_compare(P({3, 1}), P({3, 2})) == Dominance::DifferentWeight);
  CHECK(dominance_compare(P({4, 1, 1}), P({3, 3})) == Dominance::Incomparable);
  CHECK(dominance_compare(P({2, 1}), P({2, 1})) == Dominance::Equal);
  CHECK(dominates(P({2, 1}), P({2, 1})));
}

TEST_CASE("dominance agrees with prefix sums") {
  for (int w = 0; w <= 8; ++w) {
    for (const Partition& a : partitions_of(w)) {
      for (const Partition& b : partitions_of(w)) CHECK(dominates(a, b) == oracle::dominates_by_prefix(a, b));
    }
  }
}

TEST_CASE("dominance is a partial order") {
  for (int w = 0; w <= 8; ++w) {
    const auto parts = partitions_of(w);
    for (const Partition& a : parts) {
      for (const Partition& b : parts) {
        if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
        if (!dominates(a, b)) continue;
        for (const Partition& c : parts) {
          if (dominates(b, c)) CHECK(dominates(a, c));
        }
      }
    }
  }
}

TEST_CASE("column is the lowest partition of its weight") {
  for (const Partition& a : partitions_up_to(10)) CHECK(dominates(a, column(a.weight())));
}

TEST_CASE("partitions of bounded length dominate the flattest one") {
  for (int l = 1; l <= 4; ++l) {
    for (const Partition& a : partitions_up_to(12, l)) {
      const int n = a.weight() / l, s = a.weight() % l;
      CHECK(dominates(a, add_pointwise(scale(determinant(l), n), column(s))));
    }
  }
}

TEST_CASE("diagram difference and distance") {
  auto dd = diagram_difference(P({3, 1}), P({2, 2}));
  CHECK(dd.only_first == std::vector<Cell>{{1, 3}});
  CHECK(dd.only_second == std::vector<Cell>{{2, 2}});
  dd = diagram_difference(P({4}), P({2, 2}));
  CHECK(dd.only_first == std::vector<Cell>{{1, 3}, {1, 4}});
  CHECK(dd.only_second == std::vector<Cell>{{2, 1}, {2, 2}});
  dd = diagram_difference(P({2, 1}), P({2, 1}));
  CHECK(dd.only_first.empty());
  CHECK(dd.only_second.empty());
  CHECK(distance(P({4}), P({2, 2})) == 2);
  CHECK(distance(P({4, 1}), P({2, 2, 1})) == 2);
}

TEST_CASE("interpolating sequences") {
  CHECK(interpolating_sequence(P({4}), P({2, 2})) == std::vector<Partition>{P({4}), P({3, 1}), P({2, 2})});
  CHECK(interpolating_sequence(P({2, 1}), P({2, 1})) == std::vector<Partition>{P({2, 1})});
  CHECK(interpolating_sequence(P({3, 1}), P({2, 2})) == std::vector<Partition>{P({3, 1}), P({2, 2})});
  CHECK(throws_code(Errc::NotComparable, [] { interpolating_sequence(P({2, 2}), P({3, 1})); }));
  CHECK(throws_code(Errc::NotComparable, [] { interpolating_sequence(P({4, 1, 1}), P({3, 3})); }));

  for (int w = 0; w <= 8; ++w) {
    for (const Partition& a : partitions_of(w)) {
      for (const Partition& b : partitions_of(w)) {
        if (!dominates(a, b)) continue;
        const auto seq = interpolating_sequence(a, b);
        REQUIRE(seq.size() == static_cast<std::size_t>(distance(a, b) + 1));
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
          CHECK(distance(seq[i], seq[i + 1]) == 1);
          CHECK(dominance_compare(seq[i], seq[i + 1]) == Dominance::Greater);
        }
      }
    }
  }
}

TEST_CASE("restriction to intervals") {
  CHECK(restrict_parts(P({2, 1}), 2, 3) == std::vector<int>{1, 0});
  CHECK(restrict(P({2, 1}), 2, 3) == P({1}));
  CHECK(restrict(P({2, 1}), 1, 1) == P({2}));
  const auto left = restrict_parts(P({3, 2, 1}), 1, 1);
  const auto right = restrict_parts(P({3, 2, 1}), 2, 3);
  std::vector<int> joined = left;
  joined.insert(joined.end(), right.begin(), right.end());
  CHECK(joined == restrict_parts(P({3, 2, 1}), 1, 3));
}

TEST_CASE("enumeration") {
  CHECK(partitions_of(4) == std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})});
  CHECK(partitions_of(4, 2).size() == 3);
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK(partitions_up_to(3).size() == 7);
  const auto dom = dominated_partitions(P({4, 2}), 3);
  std::vector<Partition> expected;
  for (const Partition& b : partitions_of(6, 3)) {
    if (dominates(P({4, 2}), b)) expected.push_back(b);
  }
  CHECK(dom == expected);
  const auto moves = single_cell_descents(P({3, 1}));
  REQUIRE(moves.size() == 2);
  for (const CellMove& m : moves) {
    CHECK(distance(P({3, 1}), m.lower) == 1);
    const auto dd = diagram_difference(P({3, 1}), m.lower);
    CHECK(dd.only_first.front().row == m.removed_row);
    CHECK(dd.only_second.front().row == m.added_row);
  }
}
