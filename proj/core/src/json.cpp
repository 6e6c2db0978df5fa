#include "lrlab/json.hpp"

#include "lrlab/error.hpp"

namespace lrlab {

namespace {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(text));
  const BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + text + "'");
  return Rational(parse_bigint(text.substr(0, slash)), den);
}

std::optional<int> optional_int(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<int>();
}

json optional_to_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
  try {
    const auto raw = j.get<std::vector<int>>();
    return make_partition(raw);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("partition: ") + e.what());
  }
}

json to_json(const LRElement& m) {
  json terms = json::array();
  for (const auto& [p, mult] : m) terms.push_back({{"partition", to_json(p)}, {"mult", to_decimal(mult)}});
  return {{"cap", optional_to_json(m.cap())}, {"terms", std::move(terms)}};
}

LRElement element_from_json(const json& j) {
  try {
    TermMap terms;
    for (const json& t : j.at("terms")) terms[partition_from_json(t.at("partition"))] += parse_bigint(t.at("mult").get<std::string>());
    return LRElement(std::move(terms), optional_int(j, "cap"));
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("element: ") + e.what());
  }
}

json to_json(const Subdivision& s) {
  json out = json::array();
  for (const Interval& iv : s.intervals()) {
    json rows = json::array();
    for (int r = iv.first; r <= iv.last; ++r) rows.push_back(r);
    out.push_back(std::move(rows));
  }
  return out;
}

Subdivision subdivision_from_json(const json& j) {
  try {
    std::vector<Interval> intervals;
    for (const json& block : j) {
      const auto rows = block.get<std::vector<int>>();
      if (rows.empty()) throw Error(Errc::ParseError, "empty interval");
      for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i] != rows[i - 1] + 1) throw Error(Errc::ParseError, "interval rows must be consecutive");
      }
      intervals.push_back({rows.front(), rows.back()});
    }
    return Subdivision(std::move(intervals));
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("subdivision: ") + e.what());
  }
}

namespace lab {

json to_json(const Bounds& b) {
  json out = json::object();
  if (b.max_weight) out["max_weight"] = *b.max_weight;
  if (b.max_length) out["max_length"] = *b.max_length;
  if (b.max_distance) out["max_distance"] = *b.max_distance;
  if (b.max_shift) out["max_shift"] = *b.max_shift;
  return out;
}

Bounds bounds_from_json(const json& j) {
  return Bounds{optional_int(j, "max_weight"), optional_int(j, "max_length"), optional_int(j, "max_distance"),
                optional_int(j, "max_shift")};
}

json to_json(const VerificationReport& r, bool with_timing) {
  json failures = json::array();
  for (const Failure& f : r.failures) {
    json inputs = json::array();
    for (const auto& [name, value] : f.inputs) inputs.push_back({name, value});
    failures.push_back({{"inputs", std::move(inputs)}, {"reason", f.reason}});
  }
  json out = {{"lemma_id", std::string(lemma_name(r.lemma))},
              {"bounds", to_json(r.bounds)},
              {"cases", r.cases},
              {"failures", std::move(failures)},
              {"status", r.passed() ? "PASS" : "FAIL"},
              {"notes", r.notes}};
  if (with_timing) out["elapsed_ms"] = r.elapsed.count();
  return out;
}

VerificationReport report_from_json(const json& j) {
  try {
    VerificationReport r;
    r.lemma = parse_lemma(j.at("lemma_id").get<std::string>());
    r.bounds = bounds_from_json(j.at("bounds"));
    r.cases = j.at("cases").get<std::size_t>();
    for (const json& f : j.at("failures")) {
      Failure failure;
      for (const json& kv : f.at("inputs")) failure.inputs.emplace_back(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
      failure.reason = f.at("reason").get<std::string>();
      r.failures.push_back(std::move(failure));
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    if (j.contains("elapsed_ms")) r.elapsed = std::chrono::milliseconds(j.at("elapsed_ms").get<long long>());
    const bool pass = j.at("status").get<std::string>() == "PASS";
    if (pass != r.passed()) throw Error(Errc::ParseError, "status disagrees with failures");
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("report: ") + e.what());
  }
}

json to_json(const PropertyResult& r) {
  return {{"n", r.n},
          {"holds", r.holds},
          {"candidates", r.candidates},
          {"counterexample", r.counterexample ? lrlab::to_json(*r.counterexample) : json(nullptr)}};
}

json to_json(const ExponentSearch& s) {
  json by_n = json::array();
  for (const PropertyResult& r : s.by_n) by_n.push_back(to_json(r));
  return {{"n_max", s.n_max}, {"threshold", optional_to_json(s.threshold)}, {"monotone", s.monotone()}, {"by_n", std::move(by_n)}};
}

json to_json(const BoundDetails& b) {
  return {{"bound", b.bound},
          {"max_term", b.max_term},
          {"fractional_points", b.fractional_points},
          {"simplicial_cones", b.simplicial_cones},
          {"rank", b.rank}};
}

json to_json(const ConeCertificate& c) {
  json out = {{"member", c.member}, {"n", optional_to_json(c.n)}, {"decomposition", nullptr}};
  if (c.decomposition) {
    json d = json::array();
    for (const auto& [j, kappa] : *c.decomposition) d.push_back({{"subdivision", lrlab::to_json(j)}, {"kappa", to_string(kappa)}});
    out["decomposition"] = std::move(d);
  }
  return out;
}

ConeCertificate certificate_from_json(const json& j, int l) {
  try {
    ConeCertificate c;
    c.member = j.at("member").get<bool>();
    c.n = optional_int(j, "n");
    if (j.contains("decomposition") && !j.at("decomposition").is_null()) {
      c.decomposition.emplace();
      for (const json& e : j.at("decomposition")) {
        Subdivision s = subdivision_from_json(e.at("subdivision"));
        if (s.length() != l) throw Error(Errc::ParseError, "subdivision length differs from l");
        c.decomposition->emplace_back(std::move(s), parse_rational(e.at("kappa").get<std::string>()));
      }
    }
    return c;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("certificate: ") + e.what());
  }
}

json to_json(const TransferWitness& w) {
  return {{"M", w.m}, {"N", w.n}, {"t", w.t}, {"support_b", w.support_b}, {"support_a", w.support_a}};
}

TransferWitness witness_from_json(const json& j) {
  try {
    return TransferWitness{j.at("M").get<int>(), j.at("N").get<int>(), j.at("t").get<int>(),
                           j.at("support_b").get<std::size_t>(), j.at("support_a").get<std::size_t>()};
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("witness: ") + e.what());
  }
}

}  // namespace lab
}  // namespace lrlab
