#include <doctest.h>

#include "lrlab/error.hpp"
#include "lrlab/json.hpp"
#include "lrlab/lab/verify.hpp"
#include "lrlab/parallel.hpp"

using namespace lrlab;
using namespace lrlab::lab;

TEST_CASE("lemma identifiers") {
  CHECK(all_lemmas().size() == 14);
  for (LemmaId id : all_lemmas()) CHECK(parse_lemma(lemma_name(id)) == id);
  CHECK(parse_lemma("A_MULT_PP") == LemmaId::AMultPP);
  try {
    parse_lemma("NOPE");
    FAIL("expected UnknownLemma");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownLemma);
  }
}

TEST_CASE("bounds resolution keeps only the fields a lemma reads") {
  const Bounds b = resolve_bounds(LemmaId::Chi, Bounds{4, 2, 7, 9});
  CHECK(b == Bounds{4, 2, std::nullopt, std::nullopt});
  CHECK(resolve_bounds(LemmaId::Exchange, {}) == Bounds{std::nullopt, 5, std::nullopt, std::nullopt});
  CHECK(resolve_bounds(LemmaId::AMultPP, {}) == Bounds{4, 3, 2, std::nullopt});
  CHECK_THROWS_AS(resolve_bounds(LemmaId::Chi, Bounds{-1, {}, {}, {}}), Error);
}

TEST_CASE("small sweeps pass") {
  for (LemmaId id : all_lemmas()) {
    CAPTURE(lemma_name(id));
    const VerificationReport r = verify_lemma(id, Bounds{3, 2, 1, 2});
    CHECK(r.passed());
    CHECK(r.cases > 0);
  }
}

TEST_CASE("chi sweep at weight four and length two") {
  const VerificationReport r = verify_lemma(LemmaId::Chi, Bounds{4, 2, {}, {}});
  CHECK(r.passed());
  const json j = to_json(r);
  CHECK(j.at("status") == "PASS");
  CHECK(j.at("lemma_id") == "CHI");
  CHECK_FALSE(j.contains("elapsed_ms"));
  CHECK(to_json(r, true).contains("elapsed_ms"));
}

TEST_CASE("exchange at length four") {
  CHECK(verify_lemma(LemmaId::Exchange, Bounds{{}, 4, {}, {}}).passed());
}

TEST_CASE("reports round trip and do not depend on workers") {
  set_worker_count(1);
  const VerificationReport serial = verify_lemma(LemmaId::HMultP, Bounds{3, 3, {}, {}});
  set_worker_count(4);
  const VerificationReport parallel = verify_lemma(LemmaId::HMultP, Bounds{3, 3, {}, {}});
  set_worker_count(1);
  CHECK(to_json(serial).dump() == to_json(parallel).dump());
  CHECK(to_json(report_from_json(to_json(serial))).dump() == to_json(serial).dump());
}

TEST_CASE("failures serialize") {
  VerificationReport r;
  r.lemma = LemmaId::Smaller;
  r.cases = 1;
  r.failures.push_back(Failure{{{"A", "[2]"}, {"B", "[1,1]"}}, "missing"});
  const json j = to_json(r);
  CHECK(j.at("status") == "FAIL");
  const VerificationReport back = report_from_json(j);
  REQUIRE(back.failures.size() == 1);
  CHECK(back.failures[0].inputs[1].second == "[1,1]");
  CHECK(back.failures[0].reason == "missing");
}
