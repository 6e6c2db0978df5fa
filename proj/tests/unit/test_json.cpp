#include <doctest.h>

#include "lrlab/error.hpp"
#include "lrlab/json.hpp"
#include "lrlab/power.hpp"
#include "lrlab/product.hpp"

using namespace lrlab;

TEST_CASE("element schema") {
  const LRElement m = mul(Partition{2, 1}, Partition{1}, 3);
  const json j = to_json(m);
  CHECK(j.dump() ==
        R"({"cap":3,"terms":[{"partition":[3,1],"mult":"1"},{"partition":[2,2],"mult":"1"},{"partition":[2,1,1],"mult":"1"}]})");
  CHECK(element_from_json(j) == m);
  CHECK(to_json(LRElement::of(Partition{})).dump() == R"({"cap":null,"terms":[{"partition":[],"mult":"1"}]})");
}

TEST_CASE("big multiplicities survive the round trip") {
  const LRElement m = tensor_power(Partition{2, 1}, 30, 3);
  CHECK(element_from_json(json::parse(to_json(m).dump())) == m);
}

TEST_CASE("partition and subdivision round trips") {
  CHECK(partition_from_json(to_json(Partition{4, 2, 1})) == Partition{4, 2, 1});
  for (const Subdivision& s : enumerate_subdivisions(4)) CHECK(subdivision_from_json(to_json(s)) == s);
  CHECK(to_json(parse_subdivision("1,2|3", 3)).dump() == "[[1,2],[3]]");
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(partition_from_json(json::parse("[1,2]")), Error);
  CHECK_THROWS_AS(partition_from_json(json::parse(R"("x")")), Error);
  CHECK_THROWS_AS(element_from_json(json::parse(R"({"cap":null})")), Error);
  CHECK_THROWS_AS(subdivision_from_json(json::parse("[[1,3]]")), Error);
}
