#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sse/shift.hpp"

using namespace sse;
using namespace sse_test;

namespace {

BlockCode example_code() {
    const BipartiteInflation g = example_inflation();
    return conjugacy_code(example_e(), example_f(), g, *match_paths(example_e(), g, Side::E),
                          *match_paths(example_f(), g, Side::F));
}

}  // namespace

TEST_CASE("allowed_words") {
    CHECK(allowed_words(example_e(), 2) == std::vector<Word>{{"a", "a"}, {"a", "b"}, {"b", "c"}, {"c", "c"}});
    CHECK(allowed_words(example_f(), 2) ==
          std::vector<Word>{{"d", "d"}, {"d", "e"}, {"e", "f"}, {"f", "g"}, {"g", "g"}});
    CHECK(allowed_words(example_e(), 1).size() == 3);
}

TEST_CASE("periodic_word_count") {
    CHECK(periodic_word_count(example_e(), 1) == 2);
    CHECK(periodic_word_count(example_f(), 2) == 2);
    CHECK(periodic_word_count(graph_from_matrix(Matrix{{2}}), 3) == 8);
    CHECK_THROWS_AS(periodic_word_count(example_e(), 0), std::invalid_argument);
}

TEST_CASE("conjugacy_code for the running example") {
    const BlockCode code = example_code();
    CHECK(code.rule.size() == 4);
    CHECK(code.rule.at({"a", "a"}) == "d");
    CHECK(code.rule.at({"a", "b"}) == "e");
    CHECK(code.rule.at({"b", "c"}) == "f");
    CHECK(code.rule.at({"c", "c"}) == "g");
    CHECK(apply_code(code, {"a", "a", "b", "c", "c"}) == Word{"d", "e", "f", "g"});
    CHECK_THROWS_AS(apply_code(code, {"a"}), std::invalid_argument);
    CHECK_THROWS_AS(apply_code(code, {"b", "a"}), std::invalid_argument);
}

TEST_CASE("conjugacy_code rejects mismatched bijections") {
    const BipartiteInflation g = example_inflation();
    const auto be = *match_paths(example_e(), g, Side::E);
    const auto bf = *match_paths(example_f(), g, Side::F);
    CHECK_THROWS_AS(conjugacy_code(example_e(), example_f(), g, bf, be), std::invalid_argument);
    PathBijection short_f = bf;
    short_f.forward.erase("g");
    CHECK_THROWS_AS(conjugacy_code(example_e(), example_f(), g, be, short_f), std::invalid_argument);
}

TEST_CASE("verify_conjugacy_window") {
    const BlockCode code = example_code();
    for (std::size_t l : {3, 8}) {
        const Report rep = verify_conjugacy_window(code, l);
        CHECK(rep.accepted());
        CHECK(rep.find("periodic points k=" + std::to_string(l - 1))->detail == "2 = 2");
    }
    CHECK_THROWS_AS(verify_conjugacy_window(code, 2), std::invalid_argument);

    BlockCode broken = code;
    std::swap(broken.rule.at({"b", "c"}), broken.rule.at({"c", "c"}));
    const Report rep = verify_conjugacy_window(broken, 4);
    CHECK_FALSE(rep.accepted());
    CHECK_FALSE(rep.find("images are allowed words")->passed);
    CHECK(rep.find("shift commutation")->passed);
}

TEST_CASE("property: periodic_word_count = tr(A^k) = closed tuple count") {
    auto g = rng(50);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = random_dim(g, 4);
        const Matrix a = random_matrix(g, n, n, 2);
        const Graph gr = graph_from_matrix(a);
        for (std::size_t k = 1; k <= 4; ++k) {
            const std::size_t count = periodic_word_count(gr, k);
            REQUIRE(static_cast<entry_t>(count) == trace_power(a, static_cast<unsigned>(k)));
            if (k <= 3) REQUIRE(count == oracle::closed_paths(gr, k));
        }
    }
}

TEST_CASE("property: induced codes pass the window check on random witnesses") {
    auto g = rng(51);
    for (int t = 0; t < 60; ++t) {
        const EsseWitness w = random_witness(g, 3, 1);
        const Graph e = graph_from_matrix(multiply(w.r, w.s), "E");
        const Graph f = graph_from_matrix(multiply(w.s, w.r), "F");
        const BipartiteInflation inf = build_bipartite(e.vertices(), f.vertices(), w.r, w.s);
        const BlockCode code = conjugacy_code(e, f, inf, *match_paths(e, inf, Side::E), *match_paths(f, inf, Side::F));
        REQUIRE(verify_conjugacy_window(code, 6).accepted());
    }
}
