#pragma once

#include <nlohmann/json.hpp>

#include "lrlab/element.hpp"
#include "lrlab/lab/cone.hpp"
#include "lrlab/lab/theorem.hpp"
#include "lrlab/lab/transfer.hpp"
#include "lrlab/lab/verify.hpp"
#include "lrlab/partition.hpp"
#include "lrlab/subdivision.hpp"

namespace lrlab {

using json = nlohmann::ordered_json;

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

/// {"cap": l|null, "terms": [{"partition": [...], "mult": "decimal"}...]}
json to_json(const LRElement& m);
LRElement element_from_json(const json& j);

json to_json(const Subdivision& s);
Subdivision subdivision_from_json(const json& j);

namespace lab {

json to_json(const Bounds& b);
Bounds bounds_from_json(const json& j);

/// {"lemma_id", "bounds", "cases", "failures", "status", "notes"}. Elapsed
/// time is only written when asked for, keeping default output reproducible.
json to_json(const VerificationReport& r, bool with_timing = false);
VerificationReport report_from_json(const json& j);

json to_json(const PropertyResult& r);
json to_json(const ExponentSearch& s);
json to_json(const BoundDetails& b);
json to_json(const ConeCertificate& c);
ConeCertificate certificate_from_json(const json& j, int l);
json to_json(const TransferWitness& w);
TransferWitness witness_from_json(const json& j);

}  // namespace lab
}  // namespace lrlab
