#include "sse/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sse {

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!vertex_index_.emplace(vertices_[i], i).second)
            throw std::invalid_argument("duplicate vertex id '" + vertices_[i] + "'");
        out_edges_[vertices_[i]];
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (!edge_index_.emplace(e.id, i).second) throw std::invalid_argument("duplicate edge id '" + e.id + "'");
        if (!has_vertex(e.source) || !has_vertex(e.range))
            throw std::invalid_argument("edge '" + e.id + "' references an unknown vertex");
        out_edges_[e.source].push_back(e.id);
    }
    for (auto& [v, out] : out_edges_) std::sort(out.begin(), out.end());
}

std::size_t Graph::vertex_index(const VertexId& v) const {
    auto it = vertex_index_.find(v);
    if (it == vertex_index_.end()) throw std::out_of_range("unknown vertex '" + v + "'");
    return it->second;
}

const Edge& Graph::edge(const EdgeId& e) const {
    auto it = edge_index_.find(e);
    if (it == edge_index_.end()) throw std::out_of_range("unknown edge '" + e + "'");
    return edges_[it->second];
}

const std::vector<EdgeId>& Graph::out_edges(const VertexId& v) const {
    auto it = out_edges_.find(v);
    if (it == out_edges_.end()) throw std::out_of_range("unknown vertex '" + v + "'");
    return it->second;
}

Matrix vertex_matrix(const Graph& g) {
    const std::size_t n = g.vertices().size();
    if (n == 0) throw dimension_error("vertex matrix of an empty graph");
    Matrix a(n, n);
    for (const Edge& e : g.edges()) {
        const std::size_t i = g.vertex_index(e.source), j = g.vertex_index(e.range);
        a.set(i, j, a(i, j) + 1);
    }
    return a;
}

Graph graph_from_matrix(const Matrix& a, const std::string& prefix) {
    if (!a.is_square()) throw dimension_error("graph_from_matrix requires a square matrix");
    std::vector<VertexId> vertices;
    for (std::size_t i = 0; i < a.rows(); ++i) vertices.push_back(prefix + "v" + std::to_string(i));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (entry_t k = 0; k < a(i, j); ++k)
                edges.push_back({prefix + "e" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k),
                                 vertices[i], vertices[j]});
    return Graph(std::move(vertices), std::move(edges));
}

bool is_regular_graph(const Graph& g) {
    return std::all_of(g.vertices().begin(), g.vertices().end(),
                       [&](const VertexId& v) { return !g.out_edges(v).empty(); });
}

VertexSet hereditary_closure(const Graph& g, const VertexSet& start) {
    VertexSet closed;
    std::vector<VertexId> stack;
    for (const VertexId& v : start) {
        if (!g.has_vertex(v)) throw std::out_of_range("unknown vertex '" + v + "'");
        if (closed.insert(v).second) stack.push_back(v);
    }
    while (!stack.empty()) {
        VertexId v = std::move(stack.back());
        stack.pop_back();
        for (const EdgeId& e : g.out_edges(v)) {
            const VertexId& w = g.range(e);
            if (closed.insert(w).second) stack.push_back(w);
        }
    }
    return closed;
}

VertexSet saturated_hereditary_closure(const Graph& g, const VertexSet& start) {
    VertexSet h = hereditary_closure(g, start);
    for (bool grew = true; grew;) {
        grew = false;
        for (const VertexId& v : g.vertices()) {
            if (h.contains(v)) continue;
            const auto& out = g.out_edges(v);
            if (out.empty()) continue;
            if (std::all_of(out.begin(), out.end(), [&](const EdgeId& e) { return h.contains(g.range(e)); })) {
                h = hereditary_closure(g, [&] { auto s = h; s.insert(v); return s; }());
                grew = true;
            }
        }
    }
    return h;
}

bool is_composable(const Graph& g, std::span<const EdgeId> path) {
    for (const EdgeId& e : path)
        if (!g.has_edge(e)) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (g.range(path[i]) != g.source(path[i + 1])) return false;
    return true;
}

namespace {

void extend(const Graph& g, std::size_t n, EdgePath& prefix,
            const std::function<void(std::span<const EdgeId>)>& visit) {
    if (prefix.size() == n) {
        visit(prefix);
        return;
    }
    for (const EdgeId& e : g.out_edges(g.range(prefix.back()))) {
        prefix.push_back(e);
        extend(g, n, prefix, visit);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_path(const Graph& g, std::size_t n, const VertexSet& from,
                   const std::function<void(std::span<const EdgeId>)>& visit) {
    if (n == 0) throw std::invalid_argument("path length must be at least 1");
    std::vector<EdgeId> firsts;
    for (const Edge& e : g.edges())
        if (from.contains(e.source)) firsts.push_back(e.id);
    std::sort(firsts.begin(), firsts.end());
    EdgePath prefix;
    prefix.reserve(n);
    for (const EdgeId& e : firsts) {
        prefix.assign(1, e);
        extend(g, n, prefix, visit);
    }
}

std::vector<EdgePath> paths_of_length(const Graph& g, std::size_t n, const VertexSet& from) {
    std::vector<EdgePath> out;
    for_each_path(g, n, from, [&](std::span<const EdgeId> p) { out.emplace_back(p.begin(), p.end()); });
    return out;
}

}  // namespace sse
