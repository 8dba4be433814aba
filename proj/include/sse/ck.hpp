#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sse/bipartite.hpp"
#include "sse/graph.hpp"
#include "sse/matrix.hpp"
#include "sse/report.hpp"

namespace sse::ck {

enum class GenKind { P, S, Sstar };

/// One of P_v, S_e, S_e^* over a fixed graph.
struct Generator {
    GenKind kind;
    std::string id;

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

using CKWord = std::vector<Generator>;

std::string to_string(const Generator& g);
std::string to_string(const CKWord& w);

/// Integer combination of nonempty words plus a multiple of the unit.
/// Zero coefficients are never stored.
class CKElement {
public:
    CKElement() = default;

    static CKElement word(CKWord w, entry_t coeff = 1);
    static CKElement p(const VertexId& v) { return word({{GenKind::P, v}}); }
    static CKElement s(const EdgeId& e) { return word({{GenKind::S, e}}); }
    static CKElement sstar(const EdgeId& e) { return word({{GenKind::Sstar, e}}); }
    static CKElement unit(entry_t coeff = 1);

    const std::map<CKWord, entry_t>& terms() const { return terms_; }
    entry_t unit_coeff() const { return unit_; }
    bool is_zero() const { return terms_.empty() && unit_ == 0; }

    void add_term(const CKWord& w, entry_t coeff);

    CKElement star() const;

    CKElement& operator+=(const CKElement& o);
    CKElement& operator-=(const CKElement& o);
    friend CKElement operator+(CKElement a, const CKElement& b) { return a += b; }
    friend CKElement operator-(CKElement a, const CKElement& b) { return a -= b; }
    friend CKElement operator*(const CKElement& a, const CKElement& b);
    friend CKElement operator*(entry_t c, const CKElement& a);

    friend bool operator==(const CKElement&, const CKElement&) = default;

private:
    std::map<CKWord, entry_t> terms_;
    entry_t unit_ = 0;
};

std::string to_string(const CKElement& x);

/// Sum of P_v over `vertices`.
CKElement projection_sum(const std::vector<VertexId>& vertices);

/// Rewrites one word to normal form S_mu P_v S*_nu (or P_v alone); nullopt
/// means the word is 0. `steps` receives the number of rewrite steps.
std::optional<CKWord> normal_form_word(const CKWord& w, const Graph& g, std::size_t* steps = nullptr);

/// Applies the Cuntz-Krieger rewriting rules to every monomial and collects
/// terms. Unit terms are kept as they are. Throws std::out_of_range on
/// generators unknown to g.
CKElement normal_form(const CKElement& x, const Graph& g);

enum class Verdict { equal, not_equal_at_depth };

struct EqualityResult {
    Verdict verdict;
    std::size_t depth;  // uniform left-leg length the comparison was made at
    CKElement residual;  // expanded x - y; zero iff equal

    bool equal() const { return verdict == Verdict::equal; }
};

/// Normalizes x - y (1 read as the sum of all P_v), expands every monomial
/// with P_v = sum_{s(e)=v} S_e S_e^* until each left leg has length at
/// least `depth` (and at least the longest leg present), and compares
/// coefficients. `equal` is a proof; `not_equal_at_depth` is not a
/// disproof. Throws std::invalid_argument on a non-regular graph.
EqualityResult check_equal(const CKElement& x, const CKElement& y, const Graph& g, std::size_t depth);

/// p_v -> P_v, s_e -> S_rho S_sigma where e ~ (rho, sigma).
struct EmbeddingMap {
    std::map<VertexId, VertexId> vertices;
    std::map<EdgeId, EdgePair> edges;

    static EmbeddingMap from_bijection(const Graph& source, const PathBijection& bij);
};

/// Generator-wise substitution; the unit of the source algebra goes to the
/// sum of the images of its vertex projections. Throws std::out_of_range on
/// an unmapped generator.
CKElement embed(const CKElement& x, const EmbeddingMap& m);

inline constexpr std::size_t default_certificate_depth = 2;

/// Relation preservation for both embedded families, P + Q = 1, corner
/// absorption of every generator image, and fullness of both corners.
Report certify_corner_embedding(const Graph& e, const Graph& f, const BipartiteInflation& g, const PathBijection& be,
                                const PathBijection& bf, std::size_t depth = default_certificate_depth);

}  // namespace sse::ck
