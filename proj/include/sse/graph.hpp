#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sse/matrix.hpp"

namespace sse {

using VertexId = std::string;
using EdgeId = std::string;
using VertexSet = std::set<VertexId>;
using EdgePath = std::vector<EdgeId>;

struct Edge {
    EdgeId id;
    VertexId source;
    VertexId range;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite directed multigraph with named vertices and named edges.
///
/// Vertex order fixes the row/column order of the vertex matrix. Edge order
/// is kept as given; enumeration helpers sort by edge id.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(const VertexId& v) const { return vertex_index_.contains(v); }
    bool has_edge(const EdgeId& e) const { return edge_index_.contains(e); }
    std::size_t vertex_index(const VertexId& v) const;
    const Edge& edge(const EdgeId& e) const;

    const VertexId& source(const EdgeId& e) const { return edge(e).source; }
    const VertexId& range(const EdgeId& e) const { return edge(e).range; }

    /// Edge ids emitted by v, sorted by id.
    const std::vector<EdgeId>& out_edges(const VertexId& v) const;

    VertexSet vertex_set() const { return {vertices_.begin(), vertices_.end()}; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    std::map<VertexId, std::size_t> vertex_index_;
    std::map<EdgeId, std::size_t> edge_index_;
    std::map<VertexId, std::vector<EdgeId>> out_edges_;
};

Matrix vertex_matrix(const Graph& g);

/// Vertices "{prefix}v{i}" and a(i,j) edges "{prefix}e{i}_{j}_{k}".
Graph graph_from_matrix(const Matrix& a, const std::string& prefix = "");

bool is_regular_graph(const Graph& g);

/// Smallest superset of `start` closed under ranges of emitted edges.
VertexSet hereditary_closure(const Graph& g, const VertexSet& start);

/// Hereditary closure further closed under saturation: a vertex that emits
/// edges, all of whose ranges lie in the set, joins the set.
VertexSet saturated_hereditary_closure(const Graph& g, const VertexSet& start);

/// True iff consecutive edges compose: r(e_i) = s(e_{i+1}).
bool is_composable(const Graph& g, std::span<const EdgeId> path);

/// Calls `visit` for each composable length-n path whose first edge starts
/// in `from`, in lexicographic order of edge ids.
void for_each_path(const Graph& g, std::size_t n, const VertexSet& from,
                   const std::function<void(std::span<const EdgeId>)>& visit);

std::vector<EdgePath> paths_of_length(const Graph& g, std::size_t n, const VertexSet& from);

}  // namespace sse
