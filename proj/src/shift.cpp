#include "sse/shift.hpp"

#include <stdexcept>

namespace sse {

std::vector<Word> allowed_words(const Graph& g, std::size_t n) { return paths_of_length(g, n, g.vertex_set()); }

namespace {

std::size_t count_closed(const Graph& g, const VertexId& home, const VertexId& at, std::size_t remaining) {
    if (remaining == 0) return at == home ? 1 : 0;
    std::size_t total = 0;
    for (const EdgeId& e : g.out_edges(at)) total += count_closed(g, home, g.range(e), remaining - 1);
    return total;
}

std::string join(std::span<const EdgeId> w) {
    std::string s;
    for (const EdgeId& e : w) {
        if (!s.empty()) s += ' ';
        s += e;
    }
    return s;
}

}  // namespace

std::size_t periodic_word_count(const Graph& g, std::size_t k) {
    if (k == 0) throw std::invalid_argument("period must be at least 1");
    std::size_t total = 0;
    for (const Edge& e : g.edges()) total += count_closed(g, e.source, e.range, k - 1);
    return total;
}

BlockCode conjugacy_code(const Graph& e, const Graph& f, const BipartiteInflation& g, const PathBijection& be,
                         const PathBijection& bf) {
    if (be.side != Side::E || bf.side != Side::F) throw std::invalid_argument("bijection mismatch: wrong sides");
    if (be.size() != e.edges().size() || bf.size() != f.edges().size())
        throw std::invalid_argument("bijection mismatch: edge counts differ");
    std::map<EdgePair, EdgeId> f_by_path;
    for (const auto& [edge, path] : bf.forward) {
        if (!f.has_edge(edge)) throw std::invalid_argument("bijection mismatch: unknown F edge '" + edge + "'");
        f_by_path.emplace(path, edge);
    }
    for (const auto& [edge, path] : be.forward)
        if (!e.has_edge(edge) || !g.graph.has_edge(path.first) || !g.graph.has_edge(path.second))
            throw std::invalid_argument("bijection mismatch: unknown edge in E correspondence '" + edge + "'");

    BlockCode code{e, f, {}};
    for (const Word& pair : allowed_words(e, 2)) {
        const EdgePair& first = be.forward.at(pair[0]);
        const EdgePair& second = be.forward.at(pair[1]);
        auto it = f_by_path.find({first.second, second.first});
        if (it == f_by_path.end())
            throw std::invalid_argument("bijection mismatch: path (" + first.second + ", " + second.first +
                                        ") has no F edge");
        code.rule.emplace(EdgePair{pair[0], pair[1]}, it->second);
    }
    return code;
}

Word apply_code(const BlockCode& code, const Word& w) {
    if (w.size() < 2) throw std::invalid_argument("block code input must have length at least 2");
    if (!is_composable(code.source, w)) throw std::invalid_argument("word is not composable: " + join(w));
    Word out;
    out.reserve(w.size() - 1);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) out.push_back(code.rule.at({w[i], w[i + 1]}));
    return out;
}

Report verify_conjugacy_window(const BlockCode& code, std::size_t l) {
    if (l < 3) throw std::invalid_argument("window length must be at least 3");
    Report rep;
    rep.title = "sliding-block conjugacy on windows of length " + std::to_string(l);

    std::size_t words = 0;
    std::string bad_image, bad_shift;
    for_each_path(code.source, l, code.source.vertex_set(), [&](std::span<const EdgeId> w) {
        ++words;
        Word image;
        image.reserve(l - 1);
        bool defined = true;
        for (std::size_t i = 0; i + 1 < l && defined; ++i) {
            auto it = code.rule.find({w[i], w[i + 1]});
            if (it == code.rule.end())
                defined = false;
            else
                image.push_back(it->second);
        }
        if (!defined || !is_composable(code.target, image)) {
            if (bad_image.empty()) bad_image = join(w);
            return;
        }
        // code(shift(w)) vs shift(code(w))
        for (std::size_t i = 1; i + 1 < l; ++i)
            if (code.rule.at({w[i], w[i + 1]}) != image[i]) {
                if (bad_shift.empty()) bad_shift = join(w);
                break;
            }
    });
    rep.add("images are allowed words", bad_image.empty(),
            bad_image.empty() ? std::to_string(words) + " source words" : "image of '" + bad_image + "' not allowed");
    rep.add("shift commutation", bad_shift.empty(),
            bad_shift.empty() ? "" : "fails on '" + bad_shift + "'");
    for (std::size_t k = 1; k < l; ++k) {
        const std::size_t ps = periodic_word_count(code.source, k), pt = periodic_word_count(code.target, k);
        rep.add("periodic points k=" + std::to_string(k), ps == pt, std::to_string(ps) + (ps == pt ? " = " : " != ") + std::to_string(pt));
    }
    return rep;
}

}  // namespace sse
