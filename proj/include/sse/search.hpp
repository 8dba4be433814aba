#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sse/matrix.hpp"
#include "sse/report.hpp"

namespace sse {

/// A = R S and B = S R.
struct EsseWitness {
    Matrix r;
    Matrix s;

    friend bool operator==(const EsseWitness&, const EsseWitness&) = default;
};

/// C_1 .. C_n with witnesses[i] linking C_i to C_{i+1}.
struct SseChain {
    std::vector<Matrix> matrices;
    std::vector<EsseWitness> witnesses;
};

struct SearchBounds {
    std::size_t max_inner_dim = 1;
    entry_t max_entry = 1;
    std::size_t max_chain_length = 6;
    std::size_t max_intermediate_dim = 8;

    /// inner dim = dim a + dim b, entry bound = max entry of a and b,
    /// chain length 6, intermediate dim 8 (also the largest accepted value).
    static SearchBounds defaults_for(const Matrix& a, const Matrix& b);
    void validate() const;
};

enum class SearchOutcome { found, refuted_by_trace, unknown_within_bounds };

std::string to_string(SearchOutcome o);

/// tr(a^k) != tr(b^k): a certificate that a and b are not SSE.
struct TraceRefutation {
    unsigned k = 0;
    entry_t trace_a = 0;
    entry_t trace_b = 0;
};

struct EsseSearchResult {
    SearchOutcome outcome = SearchOutcome::unknown_within_bounds;
    std::optional<EsseWitness> witness;
    std::optional<TraceRefutation> refutation;
    std::size_t nodes = 0;
};

struct ChainSearchResult {
    SearchOutcome outcome = SearchOutcome::unknown_within_bounds;
    std::optional<SseChain> chain;
    std::optional<TraceRefutation> refutation;
    std::size_t states = 0;
};

/// Checks a = r s, b = s r and regularity of a, b, r, s. Shape problems are
/// reported as failed checks.
Report verify_esse(const Matrix& a, const Matrix& b, const EsseWitness& w);

Report verify_chain(const SseChain& chain);

/// First k in 1..max_k with tr(a^k) != tr(b^k). Powers that overflow are
/// skipped.
std::optional<TraceRefutation> trace_refutation(const Matrix& a, const Matrix& b, unsigned max_k);

/// Enumerates every pair (R, S) with R n x m, S m x n, entries in
/// [0, max_entry], no zero row in S, and R S = c. When `target` is given,
/// additionally S R = *target (so m = dim target). When `up_to_inner_order`
/// is set, only one representative per reordering of the inner index is
/// produced. The visitor returns false to stop.
///
/// Returns the number of search nodes expanded.
std::size_t enumerate_factorizations(const Matrix& c, std::size_t m, entry_t max_entry,
                                     const Matrix* target, bool up_to_inner_order,
                                     const std::function<bool(const Matrix& r, const Matrix& s)>& visit);

/// Bounded search for an elementary SSE witness from a to b. Returns the
/// lexicographically first witness by (flattened R, flattened S).
EsseSearchResult search_esse(const Matrix& a, const Matrix& b, const SearchBounds& bounds);

/// Breadth-first search over elementary moves, deduplicating states by
/// canonical form.
ChainSearchResult search_chain(const Matrix& a, const Matrix& b, const SearchBounds& bounds);

}  // namespace sse
