#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lrlab::lab {

enum class LemmaId {
  Smaller,
  Chi,
  ATensorL,
  Exchange,
  GInTensor,
  HInTensor,
  HMultP,
  AMultPP,
  MultPlus,
  MultInert,
  MultCirc,
  PSeq,
  ChiSymmetry,
  HighestTerm,
};

std::string_view lemma_name(LemmaId id) noexcept;
/// Accepts the upper-case identifiers ("SMALLER", "A_MULT_PP", ...).
/// Throws UnknownLemma.
LemmaId parse_lemma(std::string_view name);
const std::vector<LemmaId>& all_lemmas();

/// Sweep limits. Which fields a lemma reads is listed in default_bounds().
struct Bounds {
  std::optional<int> max_weight;
  std::optional<int> max_length;
  std::optional<int> max_distance;
  std::optional<int> max_shift;

  bool operator==(const Bounds&) const = default;
};

/// The acceptance defaults; unused fields stay empty.
Bounds default_bounds(LemmaId id);
/// Fills every field the lemma uses from the defaults, drops the rest.
Bounds resolve_bounds(LemmaId id, const Bounds& overrides);

/// A replayable counterexample: named inputs in text form plus what failed.
struct Failure {
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string reason;
};

struct VerificationReport {
  LemmaId lemma = LemmaId::Smaller;
  Bounds bounds;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;
  std::chrono::milliseconds elapsed{0};

  bool passed() const noexcept { return failures.empty(); }
};

/// Enumerates every instance satisfying the statement's hypotheses within
/// bounds and checks the claimed containment or identity. Instances run on
/// worker_count() threads; failures are listed in enumeration order.
VerificationReport verify_lemma(LemmaId id, const Bounds& overrides = {});

}  // namespace lrlab::lab
