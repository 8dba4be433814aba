#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sse/graph.hpp"
#include "sse/matrix.hpp"
#include "sse/report.hpp"
#include "sse/search.hpp"

namespace sse {

/// The bipartite graph G_{R,S} on E^0 ⊔ F^0: R(v,w) edges "r_{v}_{w}_{k}"
/// from v in E^0 to w in F^0, and S(w,v) edges "s_{w}_{v}_{k}" back.
///
/// The subgraphs G_R and G_S are the r_edges and s_edges views.
struct BipartiteInflation {
    Graph graph;
    std::vector<VertexId> e_vertices;
    std::vector<VertexId> f_vertices;
    std::vector<EdgeId> r_edges;
    std::vector<EdgeId> s_edges;
    Matrix r;
    Matrix s;

    VertexSet e_side() const { return {e_vertices.begin(), e_vertices.end()}; }
    VertexSet f_side() const { return {f_vertices.begin(), f_vertices.end()}; }
    bool is_r_edge(const EdgeId& e) const;

    Graph r_subgraph() const;
    Graph s_subgraph() const;
};

enum class Side { E, F };

std::string to_string(Side side);

using EdgePair = std::pair<EdgeId, EdgeId>;

/// Edge of E (resp. F) -> length-2 path (r_edge, s_edge) (resp. (s_edge,
/// r_edge)) in G_{R,S}, in composition order.
struct PathBijection {
    Side side = Side::E;
    std::map<EdgeId, EdgePair> forward;

    /// Edge whose image is `path`; throws std::out_of_range if none.
    const EdgeId& edge_for(const EdgePair& path) const;
    std::size_t size() const { return forward.size(); }
};

BipartiteInflation build_bipartite(const std::vector<VertexId>& e_vertices, const std::vector<VertexId>& f_vertices,
                                   const Matrix& r, const Matrix& s);

struct RecoveredSide {
    Graph graph;
    PathBijection bijection;
};

/// Graph on one side's vertices with one edge "{first}.{second}" per
/// composable length-2 path in G_{R,S} starting there.
RecoveredSide recover_side(const BipartiteInflation& g, Side side);

/// Pairs the edges of `e` with the length-2 paths of `g` from `side`,
/// respecting endpoints. Within each (source, range) class, edges sorted by
/// id are matched with paths in lexicographic order. Returns nullopt when
/// the counts differ for some class.
std::optional<PathBijection> match_paths(const Graph& e, const BipartiteInflation& g, Side side);

struct TensorDecomposition {
    Report report;
    std::optional<PathBijection> bijection;
};

/// Basis-level check that E^1 is in bijection with composable pairs
/// (alpha in G_R, beta in G_S) from E^0, respecting sources and ranges.
TensorDecomposition tensor_decomposition_check(const Graph& e, const EsseWitness& w);

}  // namespace sse
