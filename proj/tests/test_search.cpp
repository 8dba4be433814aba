#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sse/search.hpp"

using namespace sse;
using namespace sse_test;

namespace {

SearchBounds bounds(std::size_t inner, entry_t entry) {
    SearchBounds b;
    b.max_inner_dim = inner;
    b.max_entry = entry;
    return b;
}

// Trace necessary condition, asserted alongside every accepted witness.
void require_traces_agree(const Matrix& a, const Matrix& b) {
    const auto n = static_cast<unsigned>(std::max(a.rows(), b.rows()));
    for (unsigned k = 1; k <= n; ++k) REQUIRE(trace_power(a, k) == trace_power(b, k));
}

}  // namespace

TEST_CASE("verify_esse accepts the running example witness") {
    const Report rep = verify_esse(example_a_e(), example_a_f(), example_witness());
    CHECK(rep.accepted());
    require_traces_agree(example_a_e(), example_a_f());
}

TEST_CASE("verify_esse: (A, A, R=A, S=I) for regular A") {
    auto g = rng(30);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = random_dim(g, 4);
        const Matrix a = random_regular(g, n, n, 3);
        REQUIRE(verify_esse(a, a, {a, Matrix::identity(n)}).accepted());
    }
}

TEST_CASE("verify_esse rejects with itemized failures") {
    const Report swapped = verify_esse(example_a_f(), example_a_e(), example_witness());
    CHECK_FALSE(swapped.accepted());
    CHECK_FALSE(swapped.find("A = R*S")->passed);

    const Report shapes = verify_esse(example_a_e(), example_a_f(), {example_r(), example_r()});
    CHECK_FALSE(shapes.accepted());
    CHECK(shapes.find("A = R*S")->detail.find("dimension mismatch") != std::string::npos);

    const Report zero_row = verify_esse(example_a_e(), example_a_f(), {example_r(), Matrix{{1, 0}, {0, 0}, {0, 1}}});
    CHECK_FALSE(zero_row.find("S regular")->passed);
    CHECK(zero_row.find("S regular")->detail == "S not regular");

    const Report nonsquare = verify_esse(example_r(), example_a_f(), example_witness());
    CHECK_FALSE(nonsquare.find("A square")->passed);
}

TEST_CASE("search_esse finds a witness for the running example") {
    const auto res = search_esse(example_a_e(), example_a_f(), bounds(3, 1));
    REQUIRE(res.outcome == SearchOutcome::found);
    CHECK(verify_esse(example_a_e(), example_a_f(), *res.witness).accepted());
    // A_E = R S has a unique 0-1 solution with S R = A_F.
    CHECK(res.witness->r == example_r());
    CHECK(res.witness->s == example_s());
}

TEST_CASE("search_esse: [[2]] and the all-ones 2x2 matrix") {
    const Matrix a{{2}}, b{{1, 1}, {1, 1}};
    const auto brute = oracle::brute_force_esse(a, b, 1);
    REQUIRE(brute);
    CHECK(brute->r == Matrix{{1, 1}});
    CHECK(brute->s == Matrix{{1}, {1}});

    const auto res = search_esse(a, b, bounds(2, 1));
    REQUIRE(res.outcome == SearchOutcome::found);
    CHECK(res.witness->r == Matrix{{1, 1}});
    CHECK(res.witness->s == Matrix{{1}, {1}});
}

TEST_CASE("search_esse refutes [[1]] vs [[2]] by trace") {
    for (std::size_t inner = 1; inner <= 4; ++inner) {
        const auto res = search_esse(Matrix{{1}}, Matrix{{2}}, bounds(inner, 5));
        REQUIRE(res.outcome == SearchOutcome::refuted_by_trace);
        CHECK(res.refutation->k == 1);
        CHECK(res.refutation->trace_a == 1);
        CHECK(res.refutation->trace_b == 2);
        CHECK_FALSE(res.witness);
    }
}

TEST_CASE("search_esse reports unknown when the inner bound is too small") {
    const auto res = search_esse(Matrix{{2}}, Matrix{{1, 1}, {1, 1}}, bounds(1, 2));
    CHECK(res.outcome == SearchOutcome::unknown_within_bounds);
    CHECK_FALSE(res.refutation);
}

TEST_CASE("search rejects degenerate and non-regular inputs") {
    CHECK_THROWS_AS(search_esse(Matrix{{0, 0}, {1, 1}}, example_a_e(), bounds(2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(search_esse(example_r(), example_a_e(), bounds(2, 1)), dimension_error);
    CHECK_THROWS_AS(search_chain(example_a_e(), Matrix{{0}}, SearchBounds{}), std::invalid_argument);
    CHECK_THROWS_AS(search_esse(example_a_e(), example_a_e(), bounds(0, 1)), std::invalid_argument);
}

TEST_CASE("enumerate_factorizations lists every factorization once") {
    // [[2]] = r s with r, s in 1..2 and r*s = 2: (1,2) and (2,1).
    std::vector<std::pair<Matrix, Matrix>> seen;
    enumerate_factorizations(Matrix{{2}}, 1, 2, nullptr, false, [&](const Matrix& r, const Matrix& s) {
        seen.emplace_back(r, s);
        return true;
    });
    CHECK(seen.size() == 2);

    // Against the brute-force odometer for a 2x2 target with inner dimension 2.
    const Matrix c{{1, 2}, {1, 1}};
    std::size_t fast = 0, brute = 0;
    enumerate_factorizations(c, 2, 2, nullptr, false, [&](const Matrix& r, const Matrix& s) {
        REQUIRE(multiply(r, s) == c);
        ++fast;
        return true;
    });
    oracle::MatrixOdometer ro(2, 2, 2);
    do {
        oracle::MatrixOdometer so(2, 2, 2);
        do {
            const Matrix r = ro.current(), s = so.current();
            if (is_regular(r) && is_regular(s) && multiply(r, s) == c) ++brute;
        } while (so.next());
    } while (ro.next());
    CHECK(fast == brute);
}

TEST_CASE("verify_chain") {
    const SseChain one{{example_a_e(), example_a_f()}, {example_witness()}};
    CHECK(verify_chain(one).accepted());

    CHECK(verify_chain(SseChain{{example_a_e()}, {}}).accepted());
    CHECK_FALSE(verify_chain(SseChain{{Matrix{{0}}}, {}}).accepted());
    CHECK_FALSE(verify_chain(SseChain{{}, {}}).accepted());

    SseChain corrupted = one;
    corrupted.matrices[1].set(2, 2, 2);
    const Report rep = verify_chain(corrupted);
    CHECK_FALSE(rep.accepted());
    const auto failures = rep.failures();
    REQUIRE_FALSE(failures.empty());
    CHECK(failures.front()->name.rfind("link 1: ", 0) == 0);

    SseChain missing = one;
    missing.witnesses.clear();
    CHECK_FALSE(verify_chain(missing).accepted());
}

TEST_CASE("search_chain examples") {
    const auto ex = search_chain(example_a_e(), example_a_f(), SearchBounds::defaults_for(example_a_e(), example_a_f()));
    REQUIRE(ex.outcome == SearchOutcome::found);
    CHECK(ex.chain->matrices.size() == 2);
    CHECK(ex.chain->matrices.front() == example_a_e());
    CHECK(ex.chain->matrices.back() == example_a_f());
    CHECK(verify_chain(*ex.chain).accepted());

    const Matrix a{{1, 2}, {1, 0}};
    const auto same = search_chain(a, a, SearchBounds::defaults_for(a, a));
    REQUIRE(same.outcome == SearchOutcome::found);
    CHECK(same.chain->matrices.size() == 1);
    CHECK(same.chain->witnesses.empty());

    const auto ref = search_chain(Matrix{{1}}, Matrix{{2}}, SearchBounds::defaults_for(Matrix{{1}}, Matrix{{2}}));
    CHECK(ref.outcome == SearchOutcome::refuted_by_trace);
    CHECK(ref.refutation->k == 1);
}

TEST_CASE("search_chain ends exactly at b when b is a relabelling of a") {
    const Matrix a{{1, 1}, {0, 1}}, b{{1, 0}, {1, 1}};
    const auto res = search_chain(a, b, SearchBounds::defaults_for(a, b));
    REQUIRE(res.outcome == SearchOutcome::found);
    CHECK(res.chain->matrices.size() == 2);
    CHECK(res.chain->matrices.back() == b);
    CHECK(verify_chain(*res.chain).accepted());
}

TEST_CASE("search_chain respects the length bound") {
    SearchBounds b = SearchBounds::defaults_for(example_a_e(), example_a_f());
    b.max_chain_length = 1;
    CHECK(search_chain(example_a_e(), example_a_f(), b).outcome == SearchOutcome::unknown_within_bounds);
}

TEST_CASE("property: search_chain links random two-step chains") {
    auto g = rng(31);
    for (int t = 0; t < 40; ++t) {
        const EsseWitness w1 = random_witness(g, 3, 1);
        const Matrix middle = multiply(w1.s, w1.r);
        // second link: a random factorization of the middle matrix
        std::vector<EsseWitness> options;
        const std::size_t m = random_dim(g, 3);
        enumerate_factorizations(middle, m, 1, nullptr, false, [&](const Matrix& r, const Matrix& s) {
            options.push_back({r, s});
            return options.size() < 64;
        });
        if (options.empty()) options.push_back({middle, Matrix::identity(middle.rows())});
        const EsseWitness w2 = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(g)];
        const Matrix a = multiply(w1.r, w1.s), b = multiply(w2.s, w2.r);
        SearchBounds bounds;
        bounds.max_entry = std::max({entry_t{1}, middle.max_entry()});
        bounds.max_chain_length = 3;
        bounds.max_intermediate_dim = 3;
        const auto res = search_chain(a, b, bounds);
        REQUIRE(res.outcome == SearchOutcome::found);
        REQUIRE(verify_chain(*res.chain).accepted());
        REQUIRE(res.chain->matrices.size() <= 3);
        REQUIRE(res.chain->matrices.front() == a);
        REQUIRE(res.chain->matrices.back() == b);
    }
}

TEST_CASE("property: search soundness over random regular inputs") {
    auto g = rng(32);
    int found = 0;
    for (int t = 0; t < 500; ++t) {
        Matrix a{{1}}, b{{1}};
        if (t % 2 == 0) {
            const EsseWitness w = random_witness(g, 3, 1);
            a = multiply(w.r, w.s);
            b = multiply(w.s, w.r);
        } else {
            const std::size_t n = random_dim(g, 3), m = random_dim(g, 3);
            a = random_regular(g, n, n, 2);
            b = random_regular(g, m, m, 2);
        }
        const auto res = search_esse(a, b, bounds(3, 2));
        if (res.outcome == SearchOutcome::found) {
            ++found;
            REQUIRE(verify_esse(a, b, *res.witness).accepted());
            require_traces_agree(a, b);
        }
        if (res.outcome == SearchOutcome::refuted_by_trace)
            REQUIRE(trace_power(a, res.refutation->k) != trace_power(b, res.refutation->k));
    }
    CHECK(found >= 250);
}

TEST_CASE("property: bounded completeness on random witnesses") {
    auto g = rng(33);
    for (int t = 0; t < 300; ++t) {
        const EsseWitness w = random_witness(g, 3, 2);
        const Matrix a = multiply(w.r, w.s), b = multiply(w.s, w.r);
        const auto res = search_esse(a, b, bounds(3, 2));
        REQUIRE(res.outcome == SearchOutcome::found);
        REQUIRE(verify_esse(a, b, *res.witness).accepted());
        // lexicographic tie-breaking never exceeds the planted witness
        REQUIRE(std::tie(res.witness->r, res.witness->s) <= std::tie(w.r, w.s));
    }
}

TEST_CASE("property: search_esse is symmetric under swapping a and b") {
    auto g = rng(34);
    for (int t = 0; t < 200; ++t) {
        Matrix a{{1}}, b{{1}};
        if (t % 2 == 0) {
            const EsseWitness w = random_witness(g, 3, 2);
            a = multiply(w.r, w.s);
            b = multiply(w.s, w.r);
        } else {
            const std::size_t n = random_dim(g, 3), m = random_dim(g, 3);
            a = random_regular(g, n, n, 2);
            b = random_regular(g, m, m, 2);
        }
        const auto ab = search_esse(a, b, bounds(3, 2));
        const auto ba = search_esse(b, a, bounds(3, 2));
        REQUIRE((ab.outcome == SearchOutcome::found) == (ba.outcome == SearchOutcome::found));
        if (ab.witness) REQUIRE(verify_esse(b, a, {ab.witness->s, ab.witness->r}).accepted());
    }
}
