#include "sse/io.hpp"

#include <fstream>
#include <sstream>

namespace sse::io {

namespace {

const json& field(const json& j, const char* key, const char* what) {
    if (!j.is_object()) throw schema_error(std::string(what) + " must be a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw schema_error(std::string(what) + " is missing \"" + key + "\"");
    return *it;
}

std::string string_field(const json& j, const char* key, const char* what) {
    const json& v = field(j, key, what);
    if (!v.is_string()) throw schema_error(std::string(what) + " field \"" + key + "\" must be a string");
    return v.get<std::string>();
}

json report_checks(const Report& r) {
    json checks = json::array();
    for (const Check& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return checks;
}

}  // namespace

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
    const json& rows = field(j, "rows", "matrix");
    const json& cols = field(j, "cols", "matrix");
    const json& entries = field(j, "entries", "matrix");
    if (!rows.is_number_unsigned() || !cols.is_number_unsigned())
        throw schema_error("matrix \"rows\" and \"cols\" must be non-negative integers");
    const auto n = rows.get<std::size_t>(), m = cols.get<std::size_t>();
    if (n == 0 || m == 0) throw schema_error("matrix dimensions must be positive");
    if (!entries.is_array() || entries.size() != n) throw schema_error("matrix \"entries\" must have \"rows\" rows");
    std::vector<entry_t> flat;
    for (const json& row : entries) {
        if (!row.is_array() || row.size() != m) throw schema_error("every matrix row must have \"cols\" entries");
        for (const json& v : row) {
            if (!v.is_number_integer() || v.get<entry_t>() < 0)
                throw schema_error("matrix entries must be non-negative integers");
            flat.push_back(v.get<entry_t>());
        }
    }
    return Matrix(n, m, std::move(flat));
}

json to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({{"id", e.id}, {"src", e.source}, {"rng", e.range}});
    return {{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    const json& vs = field(j, "vertices", "graph");
    const json& es = field(j, "edges", "graph");
    if (!vs.is_array() || !es.is_array()) throw schema_error("graph \"vertices\" and \"edges\" must be arrays");
    std::vector<VertexId> vertices;
    for (const json& v : vs) {
        if (!v.is_string()) throw schema_error("vertex ids must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<Edge> edges;
    for (const json& e : es)
        edges.push_back({string_field(e, "id", "edge"), string_field(e, "src", "edge"), string_field(e, "rng", "edge")});
    try {
        return Graph(std::move(vertices), std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw schema_error(ex.what());
    }
}

json to_json(const EsseWitness& w) { return {{"R", to_json(w.r)}, {"S", to_json(w.s)}}; }

EsseWitness witness_from_json(const json& j) {
    return {matrix_from_json(field(j, "R", "witness")), matrix_from_json(field(j, "S", "witness"))};
}

json to_json(const SseChain& c) {
    json ms = json::array(), ws = json::array();
    for (const Matrix& m : c.matrices) ms.push_back(to_json(m));
    for (const EsseWitness& w : c.witnesses) ws.push_back(to_json(w));
    return {{"matrices", std::move(ms)}, {"witnesses", std::move(ws)}};
}

SseChain chain_from_json(const json& j) {
    const json& ms = field(j, "matrices", "chain");
    const json& ws = field(j, "witnesses", "chain");
    if (!ms.is_array() || !ws.is_array()) throw schema_error("chain \"matrices\" and \"witnesses\" must be arrays");
    SseChain c;
    for (const json& m : ms) c.matrices.push_back(matrix_from_json(m));
    for (const json& w : ws) c.witnesses.push_back(witness_from_json(w));
    return c;
}

json to_json(const Report& r) {
    json out = {{"title", r.title}, {"accepted", r.accepted()}};
    if (!r.notes.empty()) out["notes"] = r.notes;
    out["checks"] = report_checks(r);
    return out;
}

json to_json(const BipartiteInflation& g) {
    return {{"e_vertices", g.e_vertices}, {"f_vertices", g.f_vertices}, {"R", to_json(g.r)},
            {"S", to_json(g.s)},          {"r_edges", g.r_edges},       {"s_edges", g.s_edges},
            {"graph", to_json(g.graph)}};
}

json to_json(const PathBijection& b) {
    json pairs = json::array();
    for (const auto& [edge, path] : b.forward) pairs.push_back({{"edge", edge}, {"path", {path.first, path.second}}});
    return {{"side", to_string(b.side)}, {"pairs", std::move(pairs)}};
}

json to_json(const BlockCode& code) {
    json rule = json::array();
    for (const auto& [pair, image] : code.rule) rule.push_back({{"window", {pair.first, pair.second}}, {"image", image}});
    return {{"memory", BlockCode::memory}, {"anticipation", BlockCode::anticipation}, {"rule", std::move(rule)}};
}

bool is_graph_json(const json& j) { return j.is_object() && j.contains("vertices"); }

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& ex) {
        throw schema_error("malformed JSON in '" + path + "': " + ex.what());
    }
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const BipartiteInflation& g) {
    std::ostringstream os;
    os << "digraph G_RS {\n";
    os << "  rankdir=LR;\n";
    for (const VertexId& v : g.e_vertices) os << "  " << quote(v) << " [shape=box];\n";
    for (const VertexId& v : g.f_vertices) os << "  " << quote(v) << " [shape=ellipse];\n";
    for (const Edge& e : g.graph.edges()) {
        const bool is_r = g.is_r_edge(e.id);
        os << "  " << quote(e.source) << " -> " << quote(e.range) << " [label=" << quote(e.id)
           << ", style=" << (is_r ? "solid" : "dashed") << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const Graph& g, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << quote(name) << " {\n";
    for (const VertexId& v : g.vertices()) os << "  " << quote(v) << ";\n";
    for (const Edge& e : g.edges())
        os << "  " << quote(e.source) << " -> " << quote(e.range) << " [label=" << quote(e.id) << "];\n";
    os << "}\n";
    return os.str();
}

std::string to_text(const Report& r) {
    std::ostringstream os;
    os << r.title << ": " << (r.accepted() ? "ACCEPT" : "REJECT") << "\n";
    for (const std::string& n : r.notes) os << "  note: " << n << "\n";
    for (const Check& c : r.checks) {
        os << "  " << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace sse::io
