#include <doctest.h>

#include "lrlab/dimension.hpp"
#include "lrlab/enumerate.hpp"
#include "lrlab/product.hpp"
#include "oracle.hpp"

using namespace lrlab;

TEST_CASE("dimension examples") {
  CHECK(gl_dimension(Partition{1, 1}, 3) == 3);
  CHECK(gl_dimension(Partition{2}, 2) == 3);
  CHECK(gl_dimension(Partition{1, 1, 1}, 2) == 0);
  CHECK(gl_dimension(Partition{}, 4) == 1);
}

TEST_CASE("dimension counts semistandard tableaux") {
  for (int d = 1; d <= 4; ++d) {
    for (const Partition& p : partitions_up_to(7)) CHECK(gl_dimension(p, d) == oracle::count_ssyt(p, d));
  }
}

TEST_CASE("dimension is multiplicative over products") {
  const auto parts = partitions_up_to(5);
  for (int d = 1; d <= 4; ++d) {
    for (const Partition& a : parts) {
      for (const Partition& b : parts) {
        BigInt sum = 0;
        for (const auto& [c, k] : mul(a, b)) sum += k * gl_dimension(c, d);
        CHECK(sum == gl_dimension(a, d) * gl_dimension(b, d));
      }
    }
  }
}
