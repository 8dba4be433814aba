#include "sse/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "sse/bipartite.hpp"
#include "sse/ck.hpp"
#include "sse/io.hpp"
#include "sse/search.hpp"
#include "sse/shift.hpp"

namespace sse::cli {

namespace {

using io::json;

struct Options {
    std::string format = "json";
    std::string out_path;
    std::vector<std::string> inputs;
    std::string witness_path;
    std::optional<std::size_t> max_inner, max_len, max_dim;
    std::optional<entry_t> max_entry;
    std::vector<std::string> e_vertices, f_vertices;
    std::string dot_path;
    std::size_t window = 6;
    std::size_t depth = ck::default_certificate_depth;
    std::size_t length = 1;
    std::size_t period = 1;
};

class Emitter {
public:
    Emitter(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

    void emit(const std::string& text) {
        if (opt_.out_path.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(opt_.out_path);
        if (!f) throw io::schema_error("cannot write '" + opt_.out_path + "'");
        f << text;
    }
    void emit(const json& j) { emit(j.dump(2) + "\n"); }

private:
    const Options& opt_;
    std::ostream& out_;
};

Matrix load_matrix(const std::string& path) { return io::matrix_from_json(io::read_json_file(path)); }

SearchBounds bounds_for(const Matrix& a, const Matrix& b, const Options& opt) {
    SearchBounds bounds = SearchBounds::defaults_for(a, b);
    if (opt.max_inner) bounds.max_inner_dim = *opt.max_inner;
    if (opt.max_entry) bounds.max_entry = *opt.max_entry;
    if (opt.max_len) bounds.max_chain_length = *opt.max_len;
    if (opt.max_dim) bounds.max_intermediate_dim = *opt.max_dim;
    bounds.validate();
    return bounds;
}

json bounds_json(const SearchBounds& b) {
    return {{"max_inner_dim", b.max_inner_dim},
            {"max_entry", b.max_entry},
            {"max_chain_length", b.max_chain_length},
            {"max_intermediate_dim", b.max_intermediate_dim}};
}

json refutation_json(const TraceRefutation& r) {
    return {{"k", r.k},
            {"trace_a", r.trace_a},
            {"trace_b", r.trace_b},
            {"message", "trace mismatch at k=" + std::to_string(r.k)}};
}

int outcome_code(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::found: return accepted;
        case SearchOutcome::refuted_by_trace: return rejected;
        case SearchOutcome::unknown_within_bounds: return unknown;
    }
    return input_error;
}

std::string outcome_text(SearchOutcome o, const std::optional<TraceRefutation>& ref) {
    std::string s = to_string(o);
    if (ref) s += ": trace mismatch at k=" + std::to_string(ref->k) + " (" + std::to_string(ref->trace_a) +
                  " != " + std::to_string(ref->trace_b) + ")";
    return s + "\n";
}

int cmd_verify_esse(const Options& opt, Emitter& em) {
    const Matrix a = load_matrix(opt.inputs.at(0)), b = load_matrix(opt.inputs.at(1));
    const EsseWitness w = io::witness_from_json(io::read_json_file(opt.witness_path));
    const Report rep = verify_esse(a, b, w);
    if (opt.format == "text")
        em.emit(io::to_text(rep));
    else
        em.emit(json{{"command", "verify-esse"}, {"report", io::to_json(rep)}});
    return rep.accepted() ? accepted : rejected;
}

int cmd_search_esse(const Options& opt, Emitter& em) {
    const Matrix a = load_matrix(opt.inputs.at(0)), b = load_matrix(opt.inputs.at(1));
    const SearchBounds bounds = bounds_for(a, b, opt);
    const EsseSearchResult res = search_esse(a, b, bounds);
    if (opt.format == "text") {
        std::string text = outcome_text(res.outcome, res.refutation);
        if (res.witness) text += "R = " + to_string(res.witness->r) + "\nS = " + to_string(res.witness->s) + "\n";
        em.emit(text);
    } else {
        json j = {{"command", "search-esse"}, {"outcome", to_string(res.outcome)}, {"bounds", bounds_json(bounds)}};
        if (res.witness) j["witness"] = io::to_json(*res.witness);
        if (res.refutation) j["refutation"] = refutation_json(*res.refutation);
        em.emit(j);
    }
    return outcome_code(res.outcome);
}

int cmd_search_chain(const Options& opt, Emitter& em) {
    const Matrix a = load_matrix(opt.inputs.at(0)), b = load_matrix(opt.inputs.at(1));
    const SearchBounds bounds = bounds_for(a, b, opt);
    const ChainSearchResult res = search_chain(a, b, bounds);
    if (opt.format == "text") {
        std::string text = outcome_text(res.outcome, res.refutation);
        if (res.chain)
            for (const Matrix& m : res.chain->matrices) text += to_string(m) + "\n";
        em.emit(text);
    } else {
        json j = {{"command", "search-chain"}, {"outcome", to_string(res.outcome)}, {"bounds", bounds_json(bounds)}};
        if (res.chain) j["chain"] = io::to_json(*res.chain);
        if (res.refutation) j["refutation"] = refutation_json(*res.refutation);
        em.emit(j);
    }
    return outcome_code(res.outcome);
}

std::vector<VertexId> default_names(const std::string& prefix, std::size_t n) {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + "v" + std::to_string(i));
    return out;
}

std::vector<VertexId> names_or_default(const std::vector<std::string>& given, const std::string& prefix,
                                       std::size_t n, const char* flag) {
    if (given.empty()) return default_names(prefix, n);
    if (given.size() != n)
        throw io::schema_error(std::string(flag) + " lists " + std::to_string(given.size()) + " vertices, expected " +
                               std::to_string(n));
    return given;
}

BipartiteInflation inflate(const std::vector<VertexId>& ev, const std::vector<VertexId>& fv, const EsseWitness& w) {
    try {
        return build_bipartite(ev, fv, w.r, w.s);
    } catch (const std::invalid_argument& ex) {
        throw io::schema_error(ex.what());
    }
}

int cmd_bipartite(const Options& opt, Emitter& em) {
    const EsseWitness w = io::witness_from_json(io::read_json_file(opt.witness_path));
    const auto ev = names_or_default(opt.e_vertices, "E", w.r.rows(), "--e-vertices");
    const auto fv = names_or_default(opt.f_vertices, "F", w.r.cols(), "--f-vertices");
    const BipartiteInflation g = inflate(ev, fv, w);
    if (!opt.dot_path.empty()) {
        std::ofstream f(opt.dot_path);
        if (!f) throw io::schema_error("cannot write '" + opt.dot_path + "'");
        f << io::to_dot(g);
    }
    if (opt.format == "dot")
        em.emit(io::to_dot(g));
    else if (opt.format == "text")
        em.emit(std::to_string(g.graph.vertices().size()) + " vertices, " + std::to_string(g.r_edges.size()) +
                " r-edges, " + std::to_string(g.s_edges.size()) + " s-edges\n");
    else
        em.emit(json{{"command", "bipartite"}, {"inflation", io::to_json(g)}});
    return accepted;
}

// A graph file is used as is; a matrix file becomes graph_from_matrix with
// the given (or default) vertex names.
Graph load_side(const std::string& path, const std::vector<std::string>& names, const std::string& prefix,
                const char* flag) {
    const json j = io::read_json_file(path);
    if (io::is_graph_json(j)) {
        Graph g = io::graph_from_json(j);
        if (!names.empty() && names != g.vertices())
            throw io::schema_error(std::string(flag) + " disagrees with the vertices of '" + path + "'");
        return g;
    }
    const Matrix a = io::matrix_from_json(j);
    if (!a.is_square()) throw io::schema_error("'" + path + "' is not a square matrix");
    const Graph base = graph_from_matrix(a, prefix);
    const auto vs = names_or_default(names, prefix, a.rows(), flag);
    std::vector<Edge> edges;
    for (const Edge& e : base.edges())
        edges.push_back({e.id, vs[base.vertex_index(e.source)], vs[base.vertex_index(e.range)]});
    return Graph(vs, std::move(edges));
}

int cmd_certify(const Options& opt, Emitter& em) {
    const Graph e = load_side(opt.inputs.at(0), opt.e_vertices, "E", "--e-vertices");
    const Graph f = load_side(opt.inputs.at(1), opt.f_vertices, "F", "--f-vertices");
    const EsseWitness w = io::witness_from_json(io::read_json_file(opt.witness_path));
    if (opt.window < 3) throw io::schema_error("--window must be at least 3");

    std::vector<Report> sections;
    json extra = json::object();
    auto finish = [&] {
        bool ok = true;
        for (const Report& r : sections) ok = ok && r.accepted();
        if (opt.format == "text") {
            std::string text = std::string("certificate: ") + (ok ? "ACCEPT" : "REJECT") + "\n";
            for (const Report& r : sections) text += io::to_text(r);
            em.emit(text);
        } else {
            json secs = json::array();
            for (const Report& r : sections) secs.push_back(io::to_json(r));
            json j = {{"command", "certify"}, {"accepted", ok}, {"sections", std::move(secs)}};
            for (auto& [k, v] : extra.items()) j[k] = v;
            em.emit(j);
        }
        return ok ? accepted : rejected;
    };

    const Matrix a = vertex_matrix(e), b = vertex_matrix(f);
    sections.push_back(verify_esse(a, b, w));
    if (!sections.back().accepted()) return finish();

    const BipartiteInflation g = inflate(e.vertices(), f.vertices(), w);
    const RecoveredSide re = recover_side(g, Side::E), rf = recover_side(g, Side::F);
    Report recon;
    recon.title = "bipartite reconstruction";
    recon.add("G has |E^0| + |F^0| vertices", g.graph.vertices().size() == a.rows() + b.rows(),
              std::to_string(g.graph.vertices().size()) + " vertices, " + std::to_string(g.graph.edges().size()) +
                  " edges");
    recon.add("length-2 paths from E^0 recover A_E", vertex_matrix(re.graph) == a,
              std::to_string(re.bijection.size()) + " paths");
    recon.add("length-2 paths from F^0 recover A_F", vertex_matrix(rf.graph) == b,
              std::to_string(rf.bijection.size()) + " paths");
    sections.push_back(recon);

    TensorDecomposition te = tensor_decomposition_check(e, w);
    TensorDecomposition tf = tensor_decomposition_check(f, EsseWitness{w.s, w.r});
    te.report.title += " [E]";
    tf.report.title += " [F]";
    sections.push_back(te.report);
    sections.push_back(tf.report);

    const auto be = match_paths(e, g, Side::E), bf = match_paths(f, g, Side::F);
    if (!be || !bf) {
        Report r;
        r.title = "edge correspondences";
        r.add("E edges match length-2 paths", be.has_value());
        r.add("F edges match length-2 paths", bf.has_value());
        sections.push_back(r);
        return finish();
    }
    extra["bijections"] = {{"E", io::to_json(*be)}, {"F", io::to_json(*bf)}};

    const BlockCode code = conjugacy_code(e, f, g, *be, *bf);
    extra["block_code"] = io::to_json(code);
    sections.push_back(verify_conjugacy_window(code, opt.window));
    sections.push_back(ck::certify_corner_embedding(e, f, g, *be, *bf, opt.depth));
    return finish();
}

int cmd_shift_words(const Options& opt, Emitter& em) {
    const Graph g = io::graph_from_json(io::read_json_file(opt.inputs.at(0)));
    if (opt.length == 0) throw io::schema_error("--len must be positive");
    const auto words = allowed_words(g, opt.length);
    if (opt.format == "text") {
        std::string text;
        for (const Word& w : words) {
            for (std::size_t i = 0; i < w.size(); ++i) text += (i ? " " : "") + w[i];
            text += "\n";
        }
        em.emit(text);
    } else {
        em.emit(json{{"command", "shift-words"}, {"length", opt.length}, {"count", words.size()}, {"words", words}});
    }
    return accepted;
}

int cmd_periodic(const Options& opt, Emitter& em) {
    const Graph g = io::graph_from_json(io::read_json_file(opt.inputs.at(0)));
    if (opt.period == 0) throw io::schema_error("--k must be positive");
    const std::size_t count = periodic_word_count(g, opt.period);
    if (opt.format == "text")
        em.emit(std::to_string(count) + "\n");
    else
        em.emit(json{{"command", "periodic"}, {"k", opt.period}, {"count", count}});
    return accepted;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Strong shift equivalence toolkit: witnesses, chains, bipartite graphs and certificates", "ssecert"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
        sub->add_option("--out", opt.out_path, "Write output here instead of stdout");
    };

    auto* verify = app.add_subcommand("verify-esse", "Check an elementary SSE witness");
    verify->add_option("A", opt.inputs, "A.json B.json")->required()->expected(2);
    verify->add_option("--witness", opt.witness_path, "Witness JSON")->required();
    add_common(verify);

    auto* search = app.add_subcommand("search-esse", "Search for an elementary SSE witness");
    search->add_option("A", opt.inputs, "A.json B.json")->required()->expected(2);
    search->add_option("--max-inner", opt.max_inner, "Largest inner dimension");
    search->add_option("--max-entry", opt.max_entry, "Largest witness entry");
    add_common(search);

    auto* chain = app.add_subcommand("search-chain", "Search for a bounded SSE chain");
    chain->add_option("A", opt.inputs, "A.json B.json")->required()->expected(2);
    chain->add_option("--max-len", opt.max_len, "Longest chain (number of matrices)");
    chain->add_option("--max-dim", opt.max_dim, "Largest intermediate dimension");
    chain->add_option("--max-entry", opt.max_entry, "Largest witness entry");
    add_common(chain);

    auto* bip = app.add_subcommand("bipartite", "Build the bipartite graph G_{R,S}");
    bip->add_option("--witness", opt.witness_path, "Witness JSON")->required();
    bip->add_option("--e-vertices", opt.e_vertices, "E vertex ids")->delimiter(',');
    bip->add_option("--f-vertices", opt.f_vertices, "F vertex ids")->delimiter(',');
    bip->add_option("--dot", opt.dot_path, "Also write a DOT rendering here");
    add_common(bip);

    auto* cert = app.add_subcommand("certify", "Run the full pipeline and emit a certificate");
    cert->add_option("A", opt.inputs, "A.json B.json (matrices or graphs)")->required()->expected(2);
    cert->add_option("--witness", opt.witness_path, "Witness JSON")->required();
    cert->add_option("--window", opt.window, "Conjugacy window length")->capture_default_str();
    cert->add_option("--depth", opt.depth, "Relation expansion depth")->capture_default_str();
    cert->add_option("--e-vertices", opt.e_vertices, "E vertex ids")->delimiter(',');
    cert->add_option("--f-vertices", opt.f_vertices, "F vertex ids")->delimiter(',');
    add_common(cert);

    auto* words = app.add_subcommand("shift-words", "List allowed words of the edge shift");
    words->add_option("G", opt.inputs, "Graph JSON")->required()->expected(1);
    words->add_option("--len", opt.length, "Word length")->required();
    add_common(words);

    auto* periodic = app.add_subcommand("periodic", "Count closed paths of length k");
    periodic->add_option("G", opt.inputs, "Graph JSON")->required()->expected(1);
    periodic->add_option("--k", opt.period, "Period")->required();
    add_common(periodic);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) return app.exit(ex, out, err);
        err << "error: " << ex.what() << "\n";
        return input_error;
    }

    Emitter em(opt, out);
    try {
        if (*verify) return cmd_verify_esse(opt, em);
        if (*search) return cmd_search_esse(opt, em);
        if (*chain) return cmd_search_chain(opt, em);
        if (*bip) return cmd_bipartite(opt, em);
        if (*cert) return cmd_certify(opt, em);
        if (*words) return cmd_shift_words(opt, em);
        if (*periodic) return cmd_periodic(opt, em);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return input_error;
    }
    return input_error;
}

}  // namespace sse::cli
