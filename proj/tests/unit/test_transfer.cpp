#include <doctest.h>

#include "lrlab/error.hpp"
#include "lrlab/json.hpp"
#include "lrlab/lab/transfer.hpp"

using namespace lrlab;
using namespace lrlab::lab;

TEST_CASE("witness examples") {
  TransferWitness w = transfer_witness(Partition{1}, Partition{1, 1}, 2, 5);
  CHECK(w.m == 1);
  CHECK(w.n == 2);
  CHECK(w.t == 1);
  w = transfer_witness(Partition{2}, Partition{1, 1}, 2, 5);
  CHECK(w.m == 1);
  CHECK(w.n == 1);
  CHECK(w.t == 2);
  CHECK(w.support_b == 1);
}

TEST_CASE("rows and boxes both ways") {
  for (int n = 2; n <= 3; ++n) {
    const TransferWitness down = transfer_witness(Partition{n}, Partition{1}, 3, 5);
    CHECK(spot_check_witness(down, Partition{n}, Partition{1}, 3) == std::min<std::size_t>(10, down.support_b));
    const TransferWitness up = transfer_witness(Partition{1}, Partition{n}, 3, 5);
    CHECK(spot_check_witness(up, Partition{1}, Partition{n}, 3) == std::min<std::size_t>(10, up.support_b));
  }
}

TEST_CASE("hypotheses and search limit") {
  try {
    transfer_witness(Partition{1, 1}, Partition{2}, 2, 5);
    FAIL("expected HypothesisFails");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::HypothesisFails);
  }
  try {
    transfer_witness(Partition{3}, Partition{1}, 3, 2);
    FAIL("expected NotFoundWithin");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotFoundWithin);
  }
  CHECK_THROWS_AS(transfer_witness(Partition{1}, Partition{1, 1, 1}, 2, 5), Error);
}

TEST_CASE("witness round trip") {
  const TransferWitness w = transfer_witness(Partition{3}, Partition{1}, 3, 5);
  const TransferWitness back = witness_from_json(json::parse(to_json(w).dump()));
  CHECK(back.m == w.m);
  CHECK(back.n == w.n);
  CHECK(back.t == w.t);
  CHECK(back.support_a == w.support_a);
}
