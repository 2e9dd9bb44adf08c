#pragma once
// JSON views of the core value types -- models, surface analyses, fiber
// products, bad-prime reports, match solutions, table diffs -- plus model
// file ingestion with positional diagnostics. JSON is the authoritative
// machine-readable format; the CLI's text renderings derive from it.
//
// Conventions: rationals are strings "num/den" (the "/den" omitted for
// integers); quadratic values are {"a": ..., "b": ..., "d": n}, collapsing
// to a plain rational string when b = 0; polynomial coefficient arrays are
// lowest-degree-first.

#include <string>

#include "json.hpp"

#include "ellcy/families.hpp"
#include "ellcy/fibprod.hpp"
#include "ellcy/matching.hpp"
#include "ellcy/tables.hpp"

namespace ellcy {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const QuadElem& x);
Json to_json(const PolyQ& p);
Json to_json(const PolyK& p);
Json to_json(const Place& p);
Json to_json(const WeierstrassModel& m);
Json to_json(const SurfaceAnalysis& a);
Json to_json(const SpecializeResult& r);
Json to_json(const FiberProductAnalysis& p);
Json to_json(const BadPrimeReport& r);
Json to_json(const MatchSolution& s);
Json to_json(const std::vector<MatchSolution>& v);

/// {"table": id, "rows": [{"lambda": ..., "lambda_prime": ..., "nodal": [...],
///  "degenerate": [...], "h12": n, "match": true|false}, ...]} -- keys absent
/// from a table are omitted; mismatching rows carry an "expected" object.
Json table_diff_json(const TableReport& rep);

/// The family catalogue (labels, degenerations) and every anchored builtin
/// surface presentation.
Json registry_dump_json();

/// Reads a model file. Malformed JSON or a bad field raises
/// std::domain_error with a line/field diagnostic naming the culprit.
WeierstrassModel model_from_file(const std::string& path);

/// Same, from an in-memory document; `where` prefixes diagnostics.
WeierstrassModel model_from_json(const Json& j, const std::string& where);

}  // namespace ellcy
