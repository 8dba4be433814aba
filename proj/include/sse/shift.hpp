#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "sse/bipartite.hpp"
#include "sse/graph.hpp"
#include "sse/report.hpp"

namespace sse {

/// Composable edge sequence of a fixed graph.
using Word = std::vector<EdgeId>;

/// Sliding-block code from the edge shift of `source` to that of `target`
/// with memory 0 and anticipation 1: output letter i depends on input
/// letters i and i+1.
struct BlockCode {
    Graph source;
    Graph target;
    std::map<EdgePair, EdgeId> rule;

    static constexpr int memory = 0;
    static constexpr int anticipation = 1;
};

/// All composable words of length n, lexicographic by edge id.
std::vector<Word> allowed_words(const Graph& g, std::size_t n);

/// Number of closed paths of length k (words whose last edge composes back
/// to the first), counted by enumeration.
std::size_t periodic_word_count(const Graph& g, std::size_t k);

/// The code induced by the length-2 path correspondences: a composable pair
/// (e_i, e_{i+1}) with e_i ~ (rho_i, sigma_i), e_{i+1} ~ (rho_{i+1},
/// sigma_{i+1}) maps to the F-edge corresponding to (sigma_i, rho_{i+1}).
BlockCode conjugacy_code(const Graph& e, const Graph& f, const BipartiteInflation& g, const PathBijection& be,
                         const PathBijection& bf);

/// Applies the rule to consecutive pairs. Throws std::invalid_argument if
/// `w` is shorter than 2 or not composable in the source graph.
Word apply_code(const BlockCode& code, const Word& w);

/// Finite-window conjugacy check at window length l >= 3: images of allowed
/// words are allowed, coding commutes with the shift, and periodic point
/// counts agree for k < l.
Report verify_conjugacy_window(const BlockCode& code, std::size_t l);

}  // namespace sse
