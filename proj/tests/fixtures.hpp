#pragma once

#include <cstdint>
#include <random>

#include "sse/bipartite.hpp"
#include "sse/graph.hpp"
#include "sse/matrix.hpp"
#include "sse/search.hpp"

namespace sse_test {

/// Seed for randomized suites; set from --seed (default 0).
std::uint64_t& seed();

inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(seed() * 1000003ULL + salt); }

inline sse::Matrix example_a_e() { return {{1, 1}, {0, 1}}; }
inline sse::Matrix example_a_f() { return {{1, 1, 0}, {0, 0, 1}, {0, 0, 1}}; }
inline sse::Matrix example_r() { return {{1, 1, 0}, {0, 0, 1}}; }
inline sse::Matrix example_s() { return {{1, 0}, {0, 1}, {0, 1}}; }
inline sse::EsseWitness example_witness() { return {example_r(), example_s()}; }

inline sse::Graph example_e() {
    return sse::Graph({"v", "w"}, {{"a", "v", "v"}, {"b", "v", "w"}, {"c", "w", "w"}});
}

inline sse::Graph example_f() {
    return sse::Graph({"x", "y", "z"}, {{"d", "x", "x"}, {"e", "x", "y"}, {"f", "y", "z"}, {"g", "z", "z"}});
}

inline sse::BipartiteInflation example_inflation() {
    return sse::build_bipartite({"v", "w"}, {"x", "y", "z"}, example_r(), example_s());
}

// Greek edge labels of the running example under the deterministic edge-id scheme.
namespace label {
inline const char* const beta = "r_v_x_0";
inline const char* const gamma = "r_v_y_0";
inline const char* const zeta = "r_w_z_0";
inline const char* const alpha = "s_x_v_0";
inline const char* const delta = "s_y_w_0";
inline const char* const epsilon = "s_z_w_0";
}  // namespace label

/// Uniform entries in [0, max_entry].
inline sse::Matrix random_matrix(std::mt19937_64& g, std::size_t rows, std::size_t cols, sse::entry_t max_entry) {
    std::uniform_int_distribution<sse::entry_t> d(0, max_entry);
    std::vector<sse::entry_t> v(rows * cols);
    for (auto& x : v) x = d(g);
    return sse::Matrix(rows, cols, std::move(v));
}

/// Like random_matrix, redrawn until every row has a positive entry.
inline sse::Matrix random_regular(std::mt19937_64& g, std::size_t rows, std::size_t cols, sse::entry_t max_entry) {
    for (;;) {
        sse::Matrix m = random_matrix(g, rows, cols, max_entry);
        if (sse::is_regular(m)) return m;
    }
}

inline std::size_t random_dim(std::mt19937_64& g, std::size_t max_dim) {
    return std::uniform_int_distribution<std::size_t>(1, max_dim)(g);
}

/// Random regular R (n x m) and S (m x n).
inline sse::EsseWitness random_witness(std::mt19937_64& g, std::size_t max_dim, sse::entry_t max_entry) {
    const std::size_t n = random_dim(g, max_dim), m = random_dim(g, max_dim);
    return {random_regular(g, n, m, max_entry), random_regular(g, m, n, max_entry)};
}

}  // namespace sse_test
