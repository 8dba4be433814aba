#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sse/cli.hpp"
#include "sse/io.hpp"

using namespace sse;

namespace {

struct Run {
    int code;
    std::string out, err;
};

std::string data(const std::string& name) { return std::string(SSE_TEST_DATA) + "/" + name; }

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "ssecert");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto p = std::filesystem::temp_directory_path() / ("ssecert_test_" + name);
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_CASE("cli: verify-esse exit codes") {
    const Run ok = run({"verify-esse", data("a_e.json"), data("a_f.json"), "--witness", data("witness_rs.json")});
    CHECK(ok.code == 0);
    const auto j = io::json::parse(ok.out);
    CHECK(j["report"]["accepted"] == true);

    const Run bad = run({"verify-esse", data("a_e.json"), data("a_f.json"), "--witness", data("witness_zero_row.json")});
    CHECK(bad.code == 2);
    CHECK(bad.out.find("S not regular") != std::string::npos);

    const Run text =
        run({"verify-esse", data("a_e.json"), data("a_f.json"), "--witness", data("witness_rs.json"), "--format", "text"});
    CHECK(text.out.find("ACCEPT") != std::string::npos);
}

TEST_CASE("cli: input errors exit 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"verify-esse", data("a_e.json")}).code == 1);
    CHECK(run({"verify-esse", data("malformed.json"), data("a_f.json"), "--witness", data("witness_rs.json")}).code == 1);
    CHECK(run({"verify-esse", data("missing.json"), data("a_f.json"), "--witness", data("witness_rs.json")}).code == 1);
    CHECK(run({"search-esse", data("a_e.json"), data("a_f.json"), "--format", "yaml"}).code == 1);
    // a matrix file where a witness is expected
    CHECK(run({"bipartite", "--witness", data("a_e.json")}).code == 1);
    CHECK(run({"periodic", data("graph_e.json"), "--k", "0"}).code == 1);
    CHECK(run({"certify", data("a_e.json"), data("a_f.json"), "--witness", data("witness_rs.json"), "--window", "2"}).code == 1);

    const auto neg = temp_file("neg.json", R"({"rows":1,"cols":1,"entries":[[-1]]})");
    const Run r = run({"search-esse", neg.string(), data("a_f.json")});
    CHECK(r.code == 1);
    CHECK(r.err.rfind("error: ", 0) == 0);
}

TEST_CASE("cli: bound violations exit 1") {
    CHECK(run({"search-esse", data("a_e.json"), data("a_f.json"), "--max-inner", "0"}).code == 1);
    CHECK(run({"search-chain", data("a_e.json"), data("a_f.json"), "--max-dim", "9"}).code == 1);
    CHECK(run({"search-chain", data("a_e.json"), data("a_f.json"), "--max-len", "0"}).code == 1);
}

TEST_CASE("cli: search outcomes map to exit codes") {
    const Run found = run({"search-esse", data("a_e.json"), data("a_f.json"), "--max-inner", "3", "--max-entry", "1"});
    CHECK(found.code == 0);
    CHECK(io::json::parse(found.out)["outcome"] == "found");

    const Run refuted = run({"search-esse", data("ones1.json"), data("twos.json")});
    CHECK(refuted.code == 2);
    const auto j = io::json::parse(refuted.out);
    CHECK(j["outcome"] == "refuted-by-trace");
    CHECK(j["refutation"]["message"] == "trace mismatch at k=1");

    const auto ones = temp_file("ones22.json", R"({"rows":2,"cols":2,"entries":[[1,1],[1,1]]})");
    const Run unknown = run({"search-esse", data("twos.json"), ones.string(), "--max-inner", "1"});
    CHECK(unknown.code == 3);
    CHECK(io::json::parse(unknown.out)["outcome"] == "unknown-within-bounds");

    const Run chain = run({"search-chain", data("a_e.json"), data("a_f.json")});
    CHECK(chain.code == 0);
    const SseChain c = io::chain_from_json(io::json::parse(chain.out)["chain"]);
    CHECK(verify_chain(c).accepted());

    const Run short_chain = run({"search-chain", data("a_e.json"), data("a_f.json"), "--max-len", "1"});
    CHECK(short_chain.code == 3);
}

TEST_CASE("cli: emitted witnesses round-trip through the verifier") {
    const auto out = std::filesystem::temp_directory_path() / "ssecert_test_found.json";
    const Run found = run({"search-esse", data("a_e.json"), data("a_f.json"), "--max-inner", "3", "--out", out.string()});
    REQUIRE(found.code == 0);
    CHECK(found.out.empty());
    const auto j = io::read_json_file(out.string());
    const auto w_path = temp_file("w.json", j["witness"].dump());
    CHECK(run({"verify-esse", data("a_e.json"), data("a_f.json"), "--witness", w_path.string()}).code == 0);
}

TEST_CASE("cli: certify") {
    const Run ok = run({"certify", data("graph_e.json"), data("graph_f.json"), "--witness", data("witness_rs.json")});
    CHECK(ok.code == 0);
    const auto j = io::json::parse(ok.out);
    CHECK(j["accepted"] == true);
    CHECK(j["bijections"]["E"]["pairs"][0]["edge"] == "a");
    CHECK(j["bijections"]["E"]["pairs"][0]["path"] == io::json::array({"r_v_x_0", "s_x_v_0"}));
    CHECK(j["block_code"]["rule"].size() == 4);

    const Run from_matrices = run({"certify", data("a_e.json"), data("a_f.json"), "--witness", data("witness_rs.json"),
                                   "--format", "text"});
    CHECK(from_matrices.code == 0);
    CHECK(from_matrices.out.rfind("certificate: ACCEPT", 0) == 0);

    const Run bad = run({"certify", data("graph_e.json"), data("graph_f.json"), "--witness", data("witness_zero_row.json")});
    CHECK(bad.code == 2);

    const Run clash = run({"certify", data("graph_e.json"), data("graph_f.json"), "--witness", data("witness_rs.json"),
                           "--e-vertices", "p,q"});
    CHECK(clash.code == 1);
}

TEST_CASE("cli: output is deterministic") {
    const std::vector<std::vector<std::string>> cmds = {
        {"certify", data("graph_e.json"), data("graph_f.json"), "--witness", data("witness_rs.json")},
        {"search-chain", data("a_e.json"), data("a_f.json")},
        {"bipartite", "--witness", data("witness_rs.json"), "--format", "dot"},
        {"shift-words", data("graph_f.json"), "--len", "4"},
    };
    for (const auto& cmd : cmds) CHECK(run(cmd).out == run(cmd).out);
}

TEST_CASE("cli: bipartite, shift-words and periodic") {
    const Run dot = run({"bipartite", "--witness", data("witness_rs.json"), "--e-vertices", "v,w", "--f-vertices",
                         "x,y,z", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);
    CHECK(dot.out.find("shape=box") != std::string::npos);
    CHECK(dot.out.find("shape=ellipse") != std::string::npos);
    CHECK(dot.out.find("style=dashed") != std::string::npos);
    CHECK(dot.out.find("r_v_x_0") != std::string::npos);

    const Run json_out = run({"bipartite", "--witness", data("witness_rs.json")});
    CHECK(io::json::parse(json_out.out)["inflation"]["graph"]["edges"].size() == 6);

    CHECK(run({"bipartite", "--witness", data("witness_rs.json"), "--e-vertices", "v"}).code == 1);
    CHECK(run({"bipartite", "--witness", data("witness_rs.json"), "--e-vertices", "v,w", "--f-vertices", "x,v,z"}).code == 1);

    const Run words = run({"shift-words", data("graph_e.json"), "--len", "2", "--format", "text"});
    CHECK(words.out == "a a\na b\nb c\nc c\n");

    const Run per = run({"periodic", data("graph_f.json"), "--k", "2"});
    CHECK(io::json::parse(per.out)["count"] == 2);
}

TEST_CASE("cli: --help exits 0") {
    const Run help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("certify") != std::string::npos);
}
