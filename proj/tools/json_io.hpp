#pragma once

#include "hankelwalk/dyck.hpp"
#include "hankelwalk/hankel.hpp"
#include "hankelwalk/walk_graph.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hankelwalk::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON document; throws Error(ParseError) on I/O or syntax errors.
Json load_json(const std::string& path);

/// {"a0": "p/q", "terms": ["p/q", ...]}; "a0" is optional but must match terms[0].
MomentPrefix sequence_from_json(const Json& doc);
Json sequence_to_json(const MomentPrefix& a);

/// {"lambda": ["p/q", ...], "terminated": false}
LevelWeights weights_from_json(const Json& doc);
Json weights_to_json(const LevelWeights& w);

/// {"vertices": [...], "edges": [[i, j, "p/q"], ...], "root": 0}
ExplicitGraph graph_from_json(const Json& doc);
bool looks_like_graph(const Json& doc);

Json rationals(const std::vector<Rational>& values);
Json matrix_to_json(const SymMatrix& m);

/// FNV-1a 64 of the compact dump, as "fnv1a64:<16 hex digits>".
std::string digest(const Json& doc);

}  // namespace hankelwalk::io
