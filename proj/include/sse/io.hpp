#pragma once

#include <string>

#include "json.hpp"

#include "sse/bipartite.hpp"
#include "sse/graph.hpp"
#include "sse/matrix.hpp"
#include "sse/report.hpp"
#include "sse/search.hpp"
#include "sse/shift.hpp"

namespace sse::io {

using json = nlohmann::ordered_json;

/// Malformed or schema-violating input.
class schema_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"rows": n, "cols": m, "entries": [[...], ...]}
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// {"vertices": [...], "edges": [{"id": .., "src": .., "rng": ..}, ...]}
json to_json(const Graph& g);
Graph graph_from_json(const json& j);

// {"R": <matrix>, "S": <matrix>}
json to_json(const EsseWitness& w);
EsseWitness witness_from_json(const json& j);

// {"matrices": [...], "witnesses": [...]}
json to_json(const SseChain& c);
SseChain chain_from_json(const json& j);

json to_json(const Report& r);
json to_json(const BipartiteInflation& g);
json to_json(const PathBijection& b);
json to_json(const BlockCode& code);

bool is_graph_json(const json& j);

json read_json_file(const std::string& path);

/// E^0 vertices as boxes, F^0 as ellipses, r_edges solid, s_edges dashed.
std::string to_dot(const BipartiteInflation& g);
std::string to_dot(const Graph& g, const std::string& name = "G");

std::string to_text(const Report& r);

}  // namespace sse::io
