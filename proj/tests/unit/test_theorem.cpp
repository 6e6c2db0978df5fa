#include <doctest.h>

#include "lrlab/error.hpp"
#include "lrlab/json.hpp"
#include "lrlab/lab/theorem.hpp"

using namespace lrlab;
using namespace lrlab::lab;

TEST_CASE("property examples") {
  const PropertyResult one = property_holds(Partition{2}, 1, 2);
  CHECK_FALSE(one.holds);
  REQUIRE(one.counterexample);
  CHECK(*one.counterexample == Partition{1, 1});
  CHECK(property_holds(Partition{2}, 2, 2).holds);
  CHECK(property_holds(Partition{2}, 2, 2).candidates == 3);
  for (int n = 1; n <= 5; ++n) CHECK(property_holds(Partition{1}, n, 1).holds);
  CHECK_THROWS_AS(property_holds(Partition{1, 1, 1}, 2, 2), Error);
}

TEST_CASE("uniform exponent examples") {
  const ExponentSearch s = minimal_uniform_exponent(Partition{2}, 2, 5);
  CHECK(s.threshold == 2);
  CHECK(s.monotone());
  CHECK(s.by_n.size() == 5);
  CHECK(minimal_uniform_exponent(Partition{1, 1}, 2, 4).threshold == 1);
  CHECK(minimal_uniform_exponent(Partition{1}, 1, 3).threshold == 1);
  CHECK_THROWS_AS(minimal_uniform_exponent(Partition{1}, 3, 2), Error);
  const json j = to_json(s);
  CHECK(j.at("threshold") == 2);
  CHECK(j.at("by_n").at(0).at("counterexample") == json::parse("[1,1]"));
}

TEST_CASE("theorem bound") {
  const BoundDetails one = theorem_bound(Partition{1}, 1);
  CHECK(one.bound == 1);
  CHECK(one.max_term == 0);
  CHECK(one.fractional_points == 1);
  const BoundDetails pair = theorem_bound(Partition{1, 1}, 2);
  CHECK(pair.bound >= 1);
  CHECK(pair.rank == 1);
  CHECK(theorem_bound(Partition{2, 1}, 3).rank == 3);
  try {
    theorem_bound(Partition{1}, 4);
    FAIL("expected UnsupportedLength");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedLength);
  }
}
