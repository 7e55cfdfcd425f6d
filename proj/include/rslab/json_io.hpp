#pragma once

#include <json.hpp>

#include "rslab/altpath.hpp"
#include "rslab/fpl.hpp"
#include "rslab/link_pattern.hpp"
#include "rslab/spectral.hpp"
#include "rslab/tl_matrix.hpp"

namespace rslab {

/// Insertion-ordered JSON keeps every report byte-reproducible.
using Json = nlohmann::ordered_json;

Json to_json(const LinkPattern& p);
LinkPattern link_pattern_from_json(const Json& j);

Json to_json(const Asm& a);
Asm asm_from_json(const Json& j);

/// {"n": n, "asm": rows}; with_edges adds the endpoint-pair list.
Json to_json(const Fpl& f, bool with_edges = false);
Fpl fpl_from_json(const Json& j);

Json edge_to_json(const Edge& e);
Edge edge_from_json(const Json& j);
Json edges_to_json(const std::vector<Edge>& edges);
std::vector<Edge> edges_from_json(const Json& j);

// verification records: {"n":…, "kind":…, "pass":…, "details":[…]}
Json to_json(const RsRecord& r);
Json to_json(const HarmonicReport& r);
Json to_json(const std::vector<SetEquinumeracyRecord>& records);
Json to_json(const RelationReport& r);
Json to_json(const GyrationRecord& r);

Json to_json(const CountingHistogram& h);
Json to_json(const AuditReport& r);

/// here JSON numbers are used only when exact (<= 2^53); larger values are
/// emitted as decimal strings
Json bigint_to_json(const BigInt& v);

} // namespace rslab
