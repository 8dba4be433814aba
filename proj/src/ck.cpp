#include "sse/ck.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sse::ck {

std::string to_string(const Generator& g) {
    switch (g.kind) {
        case GenKind::P: return "P_" + g.id;
        case GenKind::S: return "S_" + g.id;
        case GenKind::Sstar: return "S*_" + g.id;
    }
    return "?";
}

std::string to_string(const CKWord& w) {
    std::string s;
    for (const Generator& g : w) {
        if (!s.empty()) s += ' ';
        s += to_string(g);
    }
    return s;
}

CKElement CKElement::word(CKWord w, entry_t coeff) {
    if (w.empty()) throw std::invalid_argument("empty CK word; use CKElement::unit");
    CKElement x;
    x.add_term(w, coeff);
    return x;
}

CKElement CKElement::unit(entry_t coeff) {
    CKElement x;
    x.unit_ = coeff;
    return x;
}

void CKElement::add_term(const CKWord& w, entry_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

CKElement CKElement::star() const {
    CKElement out;
    out.unit_ = unit_;
    for (const auto& [w, c] : terms_) {
        CKWord r;
        r.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            GenKind k = it->kind == GenKind::S ? GenKind::Sstar : it->kind == GenKind::Sstar ? GenKind::S : GenKind::P;
            r.push_back({k, it->id});
        }
        out.add_term(r, c);
    }
    return out;
}

CKElement& CKElement::operator+=(const CKElement& o) {
    unit_ = checked_add(unit_, o.unit_);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

CKElement& CKElement::operator-=(const CKElement& o) { return *this += (-1) * o; }

CKElement operator*(entry_t c, const CKElement& a) {
    CKElement out;
    if (c == 0) return out;
    out.unit_ = checked_mul(c, a.unit_);
    for (const auto& [w, k] : a.terms_) out.add_term(w, checked_mul(c, k));
    return out;
}

CKElement operator*(const CKElement& a, const CKElement& b) {
    CKElement out;
    out.unit_ = checked_mul(a.unit_, b.unit_);
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            CKWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, checked_mul(ca, cb));
        }
        if (b.unit_) out.add_term(wa, checked_mul(ca, b.unit_));
    }
    if (a.unit_)
        for (const auto& [wb, cb] : b.terms_) out.add_term(wb, checked_mul(a.unit_, cb));
    return out;
}

std::string to_string(const CKElement& x) {
    if (x.is_zero()) return "0";
    std::string s;
    auto append = [&](entry_t c, const std::string& body) {
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        const entry_t mag = c < 0 ? -c : c;
        if (mag != 1) s += std::to_string(mag) + "*";
        s += body;
    };
    if (x.unit_coeff()) append(x.unit_coeff(), "1");
    for (const auto& [w, c] : x.terms()) append(c, to_string(w));
    return s;
}

CKElement projection_sum(const std::vector<VertexId>& vertices) {
    CKElement x;
    for (const VertexId& v : vertices) x += CKElement::p(v);
    return x;
}

namespace {

void validate(const CKWord& w, const Graph& g) {
    for (const Generator& gen : w) {
        const bool known = gen.kind == GenKind::P ? g.has_vertex(gen.id) : g.has_edge(gen.id);
        if (!known) throw std::out_of_range("generator " + to_string(gen) + " is not in the graph");
    }
}

enum class Step { none, zero, replace };

// Local rule for an adjacent pair. On `replace` the pair becomes `out`.
Step rewrite_pair(const Generator& x, const Generator& y, const Graph& g, Generator& out) {
    using enum GenKind;
    auto pick = [&](bool keep, Generator result) {
        if (!keep) return Step::zero;
        out = std::move(result);
        return Step::replace;
    };
    if (x.kind == P && y.kind == P) return pick(x.id == y.id, x);
    if (x.kind == Sstar && y.kind == S) return pick(x.id == y.id, {P, g.range(x.id)});
    if (x.kind == P && y.kind == S) return pick(x.id == g.source(y.id), y);
    if (x.kind == S && y.kind == P) return pick(g.range(x.id) == y.id, x);
    if (x.kind == Sstar && y.kind == P) return pick(g.source(x.id) == y.id, x);
    if (x.kind == P && y.kind == Sstar) return pick(x.id == g.range(y.id), y);
    // The remaining pairs only vanish when the legs do not compose.
    if (x.kind == S && y.kind == S) return g.range(x.id) == g.source(y.id) ? Step::none : Step::zero;
    if (x.kind == Sstar && y.kind == Sstar) return g.source(x.id) == g.range(y.id) ? Step::none : Step::zero;
    if (x.kind == S && y.kind == Sstar) return g.range(x.id) == g.range(y.id) ? Step::none : Step::zero;
    return Step::none;
}

struct Legs {
    CKWord left;   // S_mu
    VertexId v;    // middle vertex
    CKWord right;  // S*_nu
};

Legs split(const CKWord& w, const Graph& g) {
    Legs legs;
    if (w.size() == 1 && w[0].kind == GenKind::P) {
        legs.v = w[0].id;
        return legs;
    }
    auto first_star = std::find_if(w.begin(), w.end(), [](const Generator& x) { return x.kind == GenKind::Sstar; });
    legs.left.assign(w.begin(), first_star);
    legs.right.assign(first_star, w.end());
    legs.v = legs.left.empty() ? g.range(legs.right.front().id) : g.range(legs.left.back().id);
    return legs;
}

void expand_into(const CKWord& w, entry_t coeff, std::size_t target, const Graph& g, CKElement& out) {
    Legs legs = split(w, g);
    if (legs.left.size() >= target) {
        out.add_term(w, coeff);
        return;
    }
    // P_v = sum over edges e emitted by v of S_e S_e^*
    for (const EdgeId& e : g.out_edges(legs.v)) {
        CKWord next = legs.left;
        next.push_back({GenKind::S, e});
        next.push_back({GenKind::Sstar, e});
        next.insert(next.end(), legs.right.begin(), legs.right.end());
        expand_into(next, coeff, target, g, out);
    }
}

}  // namespace

std::optional<CKWord> normal_form_word(const CKWord& w, const Graph& g, std::size_t* steps) {
    validate(w, g);
    CKWord cur = w;
    std::size_t n = 0;
    std::size_t i = 0;
    while (i + 1 < cur.size()) {
        Generator out;
        switch (rewrite_pair(cur[i], cur[i + 1], g, out)) {
            case Step::zero:
                if (steps) *steps = n + 1;
                return std::nullopt;
            case Step::replace:
                cur[i] = std::move(out);
                cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                ++n;
                if (i > 0) --i;
                break;
            case Step::none:
                ++i;
                break;
        }
    }
    if (steps) *steps = n;
    return cur;
}

CKElement normal_form(const CKElement& x, const Graph& g) {
    CKElement out = CKElement::unit(x.unit_coeff());
    for (const auto& [w, c] : x.terms())
        if (auto nf = normal_form_word(w, g)) out.add_term(*nf, c);
    return out;
}

EqualityResult check_equal(const CKElement& x, const CKElement& y, const Graph& g, std::size_t depth) {
    if (!is_regular_graph(g)) throw std::invalid_argument("check_equal requires a regular graph");
    CKElement diff = x - y;
    if (diff.unit_coeff()) {
        const entry_t u = diff.unit_coeff();
        diff -= CKElement::unit(u);
        diff += u * projection_sum(g.vertices());
    }
    diff = normal_form(diff, g);

    std::size_t target = depth;
    for (const auto& [w, c] : diff.terms()) target = std::max(target, split(w, g).left.size());

    CKElement expanded;
    for (const auto& [w, c] : diff.terms()) expand_into(w, c, target, g, expanded);
    const Verdict v = expanded.is_zero() ? Verdict::equal : Verdict::not_equal_at_depth;
    return {v, target, std::move(expanded)};
}

EmbeddingMap EmbeddingMap::from_bijection(const Graph& source, const PathBijection& bij) {
    EmbeddingMap m;
    for (const VertexId& v : source.vertices()) m.vertices.emplace(v, v);
    for (const Edge& e : source.edges()) {
        auto it = bij.forward.find(e.id);
        if (it == bij.forward.end()) throw std::out_of_range("edge '" + e.id + "' has no path image");
        m.edges.emplace(e.id, it->second);
    }
    return m;
}

CKElement embed(const CKElement& x, const EmbeddingMap& m) {
    CKElement out;
    if (x.unit_coeff()) {
        CKElement corner_unit;
        for (const auto& [v, image] : m.vertices) corner_unit += CKElement::p(image);
        out += x.unit_coeff() * corner_unit;
    }
    for (const auto& [w, c] : x.terms()) {
        CKWord image;
        for (const Generator& gen : w) {
            if (gen.kind == GenKind::P) {
                auto it = m.vertices.find(gen.id);
                if (it == m.vertices.end()) throw std::out_of_range("unknown generator " + to_string(gen));
                image.push_back({GenKind::P, it->second});
                continue;
            }
            auto it = m.edges.find(gen.id);
            if (it == m.edges.end()) throw std::out_of_range("unknown generator " + to_string(gen));
            const auto& [first, second] = it->second;
            if (gen.kind == GenKind::S) {
                image.push_back({GenKind::S, first});
                image.push_back({GenKind::S, second});
            } else {
                image.push_back({GenKind::Sstar, second});
                image.push_back({GenKind::Sstar, first});
            }
        }
        out.add_term(image, c);
    }
    return out;
}

namespace {

std::string verdict_detail(const EqualityResult& r) {
    if (r.equal()) return "equal at depth " + std::to_string(r.depth);
    return "not provably equal at depth " + std::to_string(r.depth) + "; residual " + to_string(r.residual);
}

// Each edge image is a composable length-2 path from the right side, with
// matching endpoints, and the images are exactly those paths.
void check_correspondence(Report& rep, const std::string& label, const Graph& source, const BipartiteInflation& g,
                          const PathBijection& bij, const std::vector<VertexId>& side) {
    bool ok = source.vertices() == side && bij.size() == source.edges().size();
    std::set<EdgePair> images;
    for (const Edge& e : source.edges()) {
        auto it = bij.forward.find(e.id);
        if (it == bij.forward.end()) {
            ok = false;
            continue;
        }
        const auto& [first, second] = it->second;
        const EdgeId path[] = {first, second};
        ok = ok && is_composable(g.graph, path) && g.graph.source(first) == e.source &&
             g.graph.range(second) == e.range;
        images.insert(it->second);
    }
    std::set<EdgePair> paths;
    for (const EdgePath& p : paths_of_length(g.graph, 2, VertexSet(side.begin(), side.end())))
        paths.insert({p[0], p[1]});
    ok = ok && images == paths;
    rep.add(label + ": edges correspond to length-2 paths", ok,
            std::to_string(images.size()) + " images, " + std::to_string(paths.size()) + " paths");
}

void check_relations(Report& rep, const std::string& label, const Graph& source, const EmbeddingMap& m,
                     const Graph& target, std::size_t depth) {
    auto img = [&](const CKElement& x) { return embed(x, m); };
    for (const Edge& e : source.edges()) {
        const CKElement s = CKElement::s(e.id);
        const auto r1 = check_equal(img(s.star() * s), img(CKElement::p(e.range)), target, depth);
        rep.add(label + ": range relation for " + e.id, r1.equal(), verdict_detail(r1));
    }
    for (const Edge& e : source.edges()) {
        const CKElement s = CKElement::s(e.id);
        const CKElement range_proj = img(s * s.star());
        const auto r2 = check_equal(img(CKElement::p(e.source)) * range_proj, range_proj, target, depth);
        rep.add(label + ": source relation for " + e.id, r2.equal(), verdict_detail(r2));
    }
    for (const VertexId& v : source.vertices()) {
        CKElement sum;
        for (const EdgeId& e : source.out_edges(v)) sum += CKElement::s(e) * CKElement::sstar(e);
        const auto r3 = check_equal(img(CKElement::p(v)), img(sum), target, depth);
        rep.add(label + ": sum relation at " + v, r3.equal(), verdict_detail(r3));
    }
}

void check_absorption(Report& rep, const std::string& label, const Graph& source, const EmbeddingMap& m,
                      const CKElement& corner, const std::string& corner_name, const Graph& target, std::size_t depth) {
    std::vector<CKElement> gens;
    std::vector<std::string> names;
    for (const VertexId& v : source.vertices()) {
        gens.push_back(CKElement::p(v));
        names.push_back("p_" + v);
    }
    for (const Edge& e : source.edges()) {
        gens.push_back(CKElement::s(e.id));
        names.push_back("s_" + e.id);
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const CKElement x = embed(gens[i], m);
        const auto r = check_equal(corner * x * corner, x, target, depth);
        rep.add(label + ": " + corner_name + " x " + corner_name + " = x for " + names[i], r.equal(), verdict_detail(r));
    }
}

void check_fullness(Report& rep, const std::string& label, const Graph& g, const std::vector<VertexId>& side) {
    const VertexSet start(side.begin(), side.end());
    const std::size_t all = g.vertices().size();
    const VertexSet h = hereditary_closure(g, start);
    if (h.size() == all) {
        rep.add(label + ": full corner", true,
                "hereditary closure of " + label + "^0 = all " + std::to_string(all) + " vertices");
        return;
    }
    const VertexSet sh = saturated_hereditary_closure(g, start);
    rep.add(label + ": full corner", sh.size() == all,
            "hereditary closure has " + std::to_string(h.size()) + " of " + std::to_string(all) +
                " vertices; saturated hereditary closure has " + std::to_string(sh.size()));
}

}  // namespace

Report certify_corner_embedding(const Graph& e, const Graph& f, const BipartiteInflation& g, const PathBijection& be,
                                const PathBijection& bf, std::size_t depth) {
    Report rep;
    rep.title = "C*(E) and C*(F) as complementary full corners of C*(G_{R,S})";
    rep.notes.push_back(
        "checked: Cuntz-Krieger relations of both embedded families, P + Q = 1, corner absorption, fullness");
    rep.notes.push_back("not checked: injectivity of the embeddings (gauge-invariant uniqueness is assumed)");

    check_correspondence(rep, "E", e, g, be, g.e_vertices);
    check_correspondence(rep, "F", f, g, bf, g.f_vertices);

    if (!is_regular_graph(g.graph)) {
        rep.add("G regular", false, "the sum relation needs every vertex to emit an edge");
        return rep;
    }

    EmbeddingMap me, mf;
    try {
        me = EmbeddingMap::from_bijection(e, be);
        mf = EmbeddingMap::from_bijection(f, bf);
        for (const auto* m : {&me, &mf})
            for (const auto& [edge, path] : m->edges)
                if (!g.graph.has_edge(path.first) || !g.graph.has_edge(path.second))
                    throw std::out_of_range("image of '" + edge + "' uses an edge not in G");
    } catch (const std::out_of_range& ex) {
        rep.add("embedding well-defined", false, ex.what());
        return rep;
    }
    check_relations(rep, "E", e, me, g.graph, depth);
    check_relations(rep, "F", f, mf, g.graph, depth);

    const CKElement p = projection_sum(g.e_vertices);
    const CKElement q = projection_sum(g.f_vertices);
    const auto pq = check_equal(p + q, CKElement::unit(), g.graph, depth);
    rep.add("P + Q = 1", pq.equal(), verdict_detail(pq));

    check_absorption(rep, "E", e, me, p, "P", g.graph, depth);
    check_absorption(rep, "F", f, mf, q, "Q", g.graph, depth);

    check_fullness(rep, "E", g.graph, g.e_vertices);
    check_fullness(rep, "F", g.graph, g.f_vertices);
    return rep;
}

}  // namespace sse::ck
