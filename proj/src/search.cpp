#include "sse/search.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sse {

SearchBounds SearchBounds::defaults_for(const Matrix& a, const Matrix& b) {
    SearchBounds bounds;
    bounds.max_inner_dim = a.rows() + b.rows();
    bounds.max_entry = std::max(a.max_entry(), b.max_entry());
    if (bounds.max_entry == 0) bounds.max_entry = 1;
    return bounds;
}

void SearchBounds::validate() const {
    if (max_inner_dim == 0 || max_entry <= 0 || max_chain_length == 0 || max_intermediate_dim == 0)
        throw std::invalid_argument("search bounds must be positive");
    if (max_intermediate_dim > 8) throw std::invalid_argument("max_intermediate_dim is capped at 8");
}

std::string to_string(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::found: return "found";
        case SearchOutcome::refuted_by_trace: return "refuted-by-trace";
        case SearchOutcome::unknown_within_bounds: return "unknown-within-bounds";
    }
    return "?";
}

namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void require_square_regular(const Matrix& m, const char* what) {
    if (!m.is_square()) throw dimension_error(std::string(what) + " is not square (" + shape(m) + ")");
    if (!is_regular(m)) throw std::invalid_argument(std::string(what) + " is not regular (has a zero row)");
}

entry_t dot(const std::vector<entry_t>& x, const std::vector<entry_t>& y) {
    entry_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

// Fills C = sum_k r_k s_k^T one rank-one term at a time, keeping the
// residual C - sum non-negative. With a target B, the entries
// B(k,l) = s_k . r_l are checked as soon as both factors are known.
class FactorizationEnumerator {
public:
    FactorizationEnumerator(const Matrix& c, std::size_t m, entry_t max_entry, const Matrix* target, bool sym,
                            const std::function<bool(const Matrix&, const Matrix&)>& visit)
        : c_(c), n_(c.rows()), m_(m), max_entry_(max_entry), target_(target), sym_(sym), visit_(visit),
          rcols_(m, std::vector<entry_t>(c.rows(), 0)), srows_(m, std::vector<entry_t>(c.rows(), 0)),
          residual_(c.entries()) {
        if (target_ && (target_->rows() != m || target_->cols() != m))
            throw dimension_error("target dimension must equal the inner dimension");
        // Entry bound small enough that products stay far from overflow.
        if (max_entry_ > (entry_t{1} << 30)) throw std::invalid_argument("max_entry too large");
    }

    std::size_t run() {
        term(0);
        return nodes_;
    }

private:
    entry_t& res(std::size_t i, std::size_t j) { return residual_[i * n_ + j]; }

    void term(std::size_t k) {
        ++nodes_;
        if (stop_) return;
        if (k == m_) {
            if (std::any_of(residual_.begin(), residual_.end(), [](entry_t v) { return v != 0; })) return;
            emit();
            return;
        }
        choose_r(k, 0);
    }

    void choose_r(std::size_t k, std::size_t i) {
        if (stop_) return;
        if (i == n_) {
            ++nodes_;
            if (sym_ && k > 0 && rcols_[k] < rcols_[k - 1]) return;
            if (target_)
                for (std::size_t l = 0; l < k; ++l)
                    if (dot(srows_[l], rcols_[k]) != (*target_)(l, k)) return;
            choose_s(k, 0);
            return;
        }
        entry_t ub = 0;
        for (std::size_t j = 0; j < n_; ++j) ub = std::max(ub, res(i, j));
        ub = std::min(ub, max_entry_);
        for (entry_t v = 0; v <= ub && !stop_; ++v) {
            rcols_[k][i] = v;
            choose_r(k, i + 1);
        }
        rcols_[k][i] = 0;
    }

    void choose_s(std::size_t k, std::size_t j) {
        if (stop_) return;
        const std::vector<entry_t>& r = rcols_[k];
        if (j == n_) {
            ++nodes_;
            const std::vector<entry_t>& s = srows_[k];
            if (std::all_of(s.begin(), s.end(), [](entry_t v) { return v == 0; })) return;
            if (sym_ && k > 0 && rcols_[k] == rcols_[k - 1] && s < srows_[k - 1]) return;
            if (target_)
                for (std::size_t l = 0; l <= k; ++l)
                    if (dot(s, rcols_[l]) != (*target_)(k, l)) return;
            term(k + 1);
            return;
        }
        const entry_t remaining_terms = static_cast<entry_t>(m_ - k - 1);
        const entry_t slack = remaining_terms * max_entry_ * max_entry_;
        entry_t ub = max_entry_;
        for (std::size_t i = 0; i < n_; ++i)
            if (r[i] > 0) ub = std::min(ub, res(i, j) / r[i]);
        for (entry_t v = 0; v <= ub && !stop_; ++v) {
            bool feasible = true;
            for (std::size_t i = 0; i < n_; ++i) {
                res(i, j) -= r[i] * v;
                if (res(i, j) > slack) feasible = false;
            }
            srows_[k][j] = v;
            if (feasible) choose_s(k, j + 1);
            for (std::size_t i = 0; i < n_; ++i) res(i, j) += r[i] * v;
        }
        srows_[k][j] = 0;
    }

    void emit() {
        std::vector<entry_t> rflat(n_ * m_), sflat(m_ * n_);
        for (std::size_t k = 0; k < m_; ++k)
            for (std::size_t i = 0; i < n_; ++i) {
                rflat[i * m_ + k] = rcols_[k][i];
                sflat[k * n_ + i] = srows_[k][i];
            }
        Matrix r(n_, m_, std::move(rflat)), s(m_, n_, std::move(sflat));
        if (!is_regular(r)) return;
        if (!visit_(r, s)) stop_ = true;
    }

    const Matrix& c_;
    std::size_t n_, m_;
    entry_t max_entry_;
    const Matrix* target_;
    bool sym_;
    const std::function<bool(const Matrix&, const Matrix&)>& visit_;
    std::vector<std::vector<entry_t>> rcols_, srows_;
    std::vector<entry_t> residual_;
    std::size_t nodes_ = 0;
    bool stop_ = false;
};

// Some perm with permute(b, perm) == a, if a and b are permutation-conjugate.
std::optional<std::vector<std::size_t>> find_conjugating_permutation(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) return std::nullopt;
    std::vector<std::size_t> perm(a.rows());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (permute(b, perm) == a) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace

Report verify_esse(const Matrix& a, const Matrix& b, const EsseWitness& w) {
    Report rep;
    rep.title = "elementary strong shift equivalence";
    rep.add("A square", a.is_square(), shape(a));
    rep.add("B square", b.is_square(), shape(b));

    const bool rs_defined = w.r.cols() == w.s.rows();
    const bool sr_defined = w.s.cols() == w.r.rows();
    if (rs_defined && sr_defined) {
        const Matrix rs = multiply(w.r, w.s);
        const Matrix sr = multiply(w.s, w.r);
        rep.add("A = R*S", rs == a, rs == a ? "" : "R*S = " + to_string(rs) + ", A = " + to_string(a));
        rep.add("B = S*R", sr == b, sr == b ? "" : "S*R = " + to_string(sr) + ", B = " + to_string(b));
    } else {
        rep.add("A = R*S", false, "dimension mismatch: R is " + shape(w.r) + ", S is " + shape(w.s));
        rep.add("B = S*R", false, "dimension mismatch: R is " + shape(w.r) + ", S is " + shape(w.s));
    }
    rep.add("A regular", is_regular(a), is_regular(a) ? "" : "A not regular");
    rep.add("B regular", is_regular(b), is_regular(b) ? "" : "B not regular");
    rep.add("R regular", is_regular(w.r), is_regular(w.r) ? "" : "R not regular");
    rep.add("S regular", is_regular(w.s), is_regular(w.s) ? "" : "S not regular");
    return rep;
}

Report verify_chain(const SseChain& chain) {
    Report rep;
    rep.title = "strong shift equivalence chain";
    rep.add("chain nonempty", !chain.matrices.empty());
    const std::size_t links = chain.matrices.empty() ? 0 : chain.matrices.size() - 1;
    rep.add("witness count", chain.witnesses.size() == links,
            std::to_string(chain.witnesses.size()) + " witnesses for " + std::to_string(chain.matrices.size()) +
                " matrices");
    for (std::size_t i = 0; i < chain.matrices.size(); ++i) {
        const Matrix& c = chain.matrices[i];
        const bool ok = c.is_square() && is_regular(c);
        rep.add("C" + std::to_string(i + 1) + " square and regular", ok);
    }
    for (std::size_t i = 0; i < std::min(links, chain.witnesses.size()); ++i) {
        const Report link = verify_esse(chain.matrices[i], chain.matrices[i + 1], chain.witnesses[i]);
        rep.absorb(link, "link " + std::to_string(i + 1) + ": ");
    }
    return rep;
}

std::optional<TraceRefutation> trace_refutation(const Matrix& a, const Matrix& b, unsigned max_k) {
    for (unsigned k = 1; k <= max_k; ++k) {
        try {
            const entry_t ta = trace_power(a, k), tb = trace_power(b, k);
            if (ta != tb) return TraceRefutation{k, ta, tb};
        } catch (const overflow_error&) {
            continue;
        }
    }
    return std::nullopt;
}

std::size_t enumerate_factorizations(const Matrix& c, std::size_t m, entry_t max_entry, const Matrix* target,
                                     bool up_to_inner_order,
                                     const std::function<bool(const Matrix&, const Matrix&)>& visit) {
    if (!c.is_square()) throw dimension_error("factorization of a non-square matrix");
    if (m == 0) throw std::invalid_argument("inner dimension must be positive");
    return FactorizationEnumerator(c, m, max_entry, target, up_to_inner_order, visit).run();
}

EsseSearchResult search_esse(const Matrix& a, const Matrix& b, const SearchBounds& bounds) {
    require_square_regular(a, "A");
    require_square_regular(b, "B");
    bounds.validate();

    EsseSearchResult result;
    const auto max_k = static_cast<unsigned>(std::max(a.rows(), b.rows()));
    if (auto ref = trace_refutation(a, b, max_k)) {
        result.outcome = SearchOutcome::refuted_by_trace;
        result.refutation = ref;
        return result;
    }
    // A = R S and B = S R force the inner dimension to be dim B.
    const std::size_t m = b.rows();
    if (m > bounds.max_inner_dim) return result;

    std::optional<EsseWitness> best;
    result.nodes = enumerate_factorizations(a, m, bounds.max_entry, &b, false, [&](const Matrix& r, const Matrix& s) {
        if (!best || std::tie(r, s) < std::tie(best->r, best->s)) best = EsseWitness{r, s};
        return true;
    });
    if (best) {
        result.outcome = SearchOutcome::found;
        result.witness = std::move(best);
    }
    return result;
}

ChainSearchResult search_chain(const Matrix& a, const Matrix& b, const SearchBounds& bounds) {
    require_square_regular(a, "A");
    require_square_regular(b, "B");
    bounds.validate();

    ChainSearchResult result;
    const auto max_k = static_cast<unsigned>(std::max(a.rows(), b.rows()));
    if (auto ref = trace_refutation(a, b, max_k)) {
        result.outcome = SearchOutcome::refuted_by_trace;
        result.refutation = ref;
        return result;
    }

    const std::size_t cap = std::max({default_canonical_cap, bounds.max_intermediate_dim, a.rows(), b.rows()});
    const Matrix target_key = canonical_form(b, cap);

    if (a == b) {
        result.outcome = SearchOutcome::found;
        result.chain = SseChain{{a}, {}};
        return result;
    }
    if (canonical_form(a, cap) == target_key) {
        // a = P b P^T: R = P, S = b P^T.
        auto perm = find_conjugating_permutation(a, b);
        const Matrix p = permutation_matrix(*perm);
        EsseWitness w{p, multiply(b, p.transpose())};
        if (w.r.max_entry() <= bounds.max_entry && w.s.max_entry() <= bounds.max_entry &&
            bounds.max_chain_length >= 2) {
            result.outcome = SearchOutcome::found;
            result.chain = SseChain{{a, b}, {std::move(w)}};
            return result;
        }
    }

    struct Node {
        Matrix matrix;
        std::size_t parent;
        std::optional<EsseWitness> via;
        std::size_t depth;
    };
    std::vector<Node> nodes;
    nodes.push_back({a, 0, std::nullopt, 0});
    std::set<Matrix> seen{canonical_form(a, cap)};
    std::deque<std::size_t> queue{0};

    auto build_chain = [&](std::size_t leaf) {
        SseChain chain;
        for (std::size_t i = leaf;; i = nodes[i].parent) {
            chain.matrices.push_back(nodes[i].matrix);
            if (nodes[i].via) chain.witnesses.push_back(*nodes[i].via);
            if (i == 0) break;
        }
        std::reverse(chain.matrices.begin(), chain.matrices.end());
        std::reverse(chain.witnesses.begin(), chain.witnesses.end());
        return chain;
    };

    std::optional<SseChain> found;
    while (!queue.empty() && !found) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        const std::size_t depth = nodes[cur].depth;
        // a node at depth d closes a chain of d + 1 matrices
        if (depth + 2 > bounds.max_chain_length) continue;
        const Matrix current = nodes[cur].matrix;

        for (std::size_t m = 1; m <= bounds.max_intermediate_dim && !found; ++m) {
            enumerate_factorizations(current, m, bounds.max_entry, nullptr, true, [&](const Matrix& r, const Matrix& s) {
                Matrix next = multiply(s, r);
                Matrix key = canonical_form(next, cap);
                if (key == target_key) {
                    // Conjugate the last link so the chain ends exactly at b.
                    auto perm = find_conjugating_permutation(next, b);
                    const Matrix p = permutation_matrix(*perm);
                    EsseWitness w{multiply(r, p), multiply(p.transpose(), s)};
                    nodes.push_back({b, cur, std::move(w), depth + 1});
                    found = build_chain(nodes.size() - 1);
                    return false;
                }
                if (seen.insert(std::move(key)).second) {
                    nodes.push_back({std::move(next), cur, EsseWitness{r, s}, depth + 1});
                    queue.push_back(nodes.size() - 1);
                }
                return true;
            });
        }
    }
    result.states = nodes.size();
    if (found) {
        result.outcome = SearchOutcome::found;
        result.chain = std::move(found);
    }
    return result;
}

}  // namespace sse
