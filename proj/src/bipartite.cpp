#include "sse/bipartite.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sse {

bool BipartiteInflation::is_r_edge(const EdgeId& e) const {
    return std::binary_search(r_edges.begin(), r_edges.end(), e);
}

Graph BipartiteInflation::r_subgraph() const {
    std::vector<Edge> edges;
    for (const EdgeId& e : r_edges) edges.push_back(graph.edge(e));
    return Graph(graph.vertices(), std::move(edges));
}

Graph BipartiteInflation::s_subgraph() const {
    std::vector<Edge> edges;
    for (const EdgeId& e : s_edges) edges.push_back(graph.edge(e));
    return Graph(graph.vertices(), std::move(edges));
}

std::string to_string(Side side) { return side == Side::E ? "E" : "F"; }

const EdgeId& PathBijection::edge_for(const EdgePair& path) const {
    for (const auto& [edge, p] : forward)
        if (p == path) return edge;
    throw std::out_of_range("no edge corresponds to path (" + path.first + ", " + path.second + ")");
}

BipartiteInflation build_bipartite(const std::vector<VertexId>& e_vertices, const std::vector<VertexId>& f_vertices,
                                   const Matrix& r, const Matrix& s) {
    if (r.rows() != e_vertices.size() || r.cols() != f_vertices.size())
        throw dimension_error("R must be |E^0| x |F^0|");
    if (s.rows() != f_vertices.size() || s.cols() != e_vertices.size())
        throw dimension_error("S must be |F^0| x |E^0|");
    std::set<VertexId> ids(e_vertices.begin(), e_vertices.end());
    for (const VertexId& w : f_vertices)
        if (ids.contains(w)) throw std::invalid_argument("vertex id '" + w + "' appears on both sides");

    std::vector<VertexId> vertices = e_vertices;
    vertices.insert(vertices.end(), f_vertices.begin(), f_vertices.end());
    std::vector<Edge> edges;
    std::vector<EdgeId> r_edges, s_edges;
    for (std::size_t i = 0; i < e_vertices.size(); ++i)
        for (std::size_t j = 0; j < f_vertices.size(); ++j)
            for (entry_t k = 0; k < r(i, j); ++k) {
                EdgeId id = "r_" + e_vertices[i] + "_" + f_vertices[j] + "_" + std::to_string(k);
                edges.push_back({id, e_vertices[i], f_vertices[j]});
                r_edges.push_back(std::move(id));
            }
    for (std::size_t j = 0; j < f_vertices.size(); ++j)
        for (std::size_t i = 0; i < e_vertices.size(); ++i)
            for (entry_t k = 0; k < s(j, i); ++k) {
                EdgeId id = "s_" + f_vertices[j] + "_" + e_vertices[i] + "_" + std::to_string(k);
                edges.push_back({id, f_vertices[j], e_vertices[i]});
                s_edges.push_back(std::move(id));
            }
    // Graph rejects edge-id collisions (possible when vertex ids contain '_').
    Graph graph(std::move(vertices), std::move(edges));
    std::sort(r_edges.begin(), r_edges.end());
    std::sort(s_edges.begin(), s_edges.end());
    return {std::move(graph), e_vertices, f_vertices, std::move(r_edges), std::move(s_edges), r, s};
}

RecoveredSide recover_side(const BipartiteInflation& g, Side side) {
    const std::vector<VertexId>& vertices = side == Side::E ? g.e_vertices : g.f_vertices;
    const VertexSet from(vertices.begin(), vertices.end());
    std::vector<Edge> edges;
    PathBijection bij{side, {}};
    for (const EdgePath& p : paths_of_length(g.graph, 2, from)) {
        EdgeId id = p[0] + "." + p[1];
        edges.push_back({id, g.graph.source(p[0]), g.graph.range(p[1])});
        bij.forward.emplace(std::move(id), EdgePair{p[0], p[1]});
    }
    return {Graph(vertices, std::move(edges)), std::move(bij)};
}

std::optional<PathBijection> match_paths(const Graph& e, const BipartiteInflation& g, Side side) {
    const std::vector<VertexId>& vertices = side == Side::E ? g.e_vertices : g.f_vertices;
    if (e.vertices() != vertices) return std::nullopt;

    using Key = std::pair<VertexId, VertexId>;
    std::map<Key, std::vector<EdgeId>> edges_by_class;
    for (const Edge& edge : e.edges()) edges_by_class[{edge.source, edge.range}].push_back(edge.id);
    std::map<Key, std::vector<EdgePair>> paths_by_class;
    for (const EdgePath& p : paths_of_length(g.graph, 2, VertexSet(vertices.begin(), vertices.end())))
        paths_by_class[{g.graph.source(p[0]), g.graph.range(p[1])}].push_back({p[0], p[1]});

    if (edges_by_class.size() != paths_by_class.size()) return std::nullopt;
    PathBijection bij{side, {}};
    for (auto& [key, ids] : edges_by_class) {
        auto it = paths_by_class.find(key);
        if (it == paths_by_class.end() || it->second.size() != ids.size()) return std::nullopt;
        std::sort(ids.begin(), ids.end());
        for (std::size_t i = 0; i < ids.size(); ++i) bij.forward.emplace(ids[i], it->second[i]);
    }
    return bij;
}

TensorDecomposition tensor_decomposition_check(const Graph& e, const EsseWitness& w) {
    TensorDecomposition out;
    Report& rep = out.report;
    rep.title = "basis-level tensor decomposition X(E) = X(G_R) (x) X(G_S)";

    const Matrix a = vertex_matrix(e);
    const bool shapes_ok = w.r.rows() == a.rows() && w.s.cols() == a.rows() && w.r.cols() == w.s.rows();
    if (!shapes_ok) {
        rep.add("witness shape", false,
                "R is " + std::to_string(w.r.rows()) + "x" + std::to_string(w.r.cols()) + ", S is " +
                    std::to_string(w.s.rows()) + "x" + std::to_string(w.s.cols()) + ", E has " +
                    std::to_string(a.rows()) + " vertices");
        return out;
    }
    const Matrix rs = multiply(w.r, w.s);
    rep.add("vertex matrix = R*S", a == rs, a == rs ? "" : "A_E = " + to_string(a) + ", R*S = " + to_string(rs));

    // Auxiliary F-side names that cannot clash with E's vertex ids.
    std::vector<VertexId> f_vertices;
    const VertexSet e_ids = e.vertex_set();
    std::string tag = "f";
    for (bool clash = true; clash;) {
        f_vertices.clear();
        clash = false;
        for (std::size_t j = 0; j < w.r.cols(); ++j) {
            f_vertices.push_back(tag + std::to_string(j));
            clash = clash || e_ids.contains(f_vertices.back());
        }
        if (clash) tag += "'";
    }
    const BipartiteInflation g = build_bipartite(e.vertices(), f_vertices, w.r, w.s);

    std::size_t pairs = 0;
    for_each_path(g.graph, 2, e_ids, [&](std::span<const EdgeId>) { ++pairs; });
    rep.add("edge count = composable (G_R, G_S) pairs", pairs == e.edges().size(),
            std::to_string(e.edges().size()) + " edges, " + std::to_string(pairs) + " pairs");

    auto bij = match_paths(e, g, Side::E);
    bool respects = bij.has_value();
    if (bij)
        for (const auto& [edge, path] : bij->forward) {
            respects = respects && g.is_r_edge(path.first) && !g.is_r_edge(path.second) &&
                       g.graph.source(path.first) == e.source(edge) && g.graph.range(path.second) == e.range(edge) &&
                       g.graph.range(path.first) == g.graph.source(path.second);
        }
    rep.add("bijection respects sources and ranges", respects,
            bij ? std::to_string(bij->size()) + " pairs" : "no endpoint-preserving bijection");
    if (rep.accepted()) out.bijection = std::move(bij);
    return out;
}

}  // namespace sse
