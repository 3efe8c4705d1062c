#include <doctest.h>

#include <random>
#include <stdexcept>
#include <set>

#include "groth/pipedreams.hpp"

using namespace groth;

namespace {

PipeDream make_dream(int n, std::vector<Cell> cells) {
    PipeDream p;
    p.n = n;
    p.cells = std::move(cells);
    std::sort(p.cells.begin(), p.cells.end());
    return p;
}

std::string word_string(const std::vector<int>& word) {
    std::string s;
    for (int x : word) s += std::to_string(x);
    return s;
}

}  // namespace

TEST_CASE("pipe word reading order") {
    std::vector<Cell> full;
    for (int r = 1; r <= 3; ++r)
        for (int c = 1; c <= 3; ++c) full.push_back({r, c});
    CHECK(word_string(pipe_word(make_dream(3, full))) == "321432543");

    CHECK(pipe_word(make_dream(4, {})).empty());

    PipeDream p1 = make_dream(8, {{1, 4}, {1, 5}, {1, 7}, {2, 3}, {2, 4}, {2, 6},
                                  {3, 2}, {3, 3}, {3, 5}, {4, 1}, {4, 3}});
    CHECK(word_string(pipe_word(p1)) == "75475475464");
}

TEST_CASE("demazure product") {
    std::vector<int> word = {7, 5, 4, 7, 5, 4, 7, 5, 4, 6, 4};
    CHECK(demazure_product(word, 8) == Permutation::parse("12365847"));
    CHECK(demazure_product({}, 5) == Permutation::identity(5));
    CHECK(demazure_product({2, 2}, 4) == Permutation::parse("1324"));
    CHECK_THROWS_AS(demazure_product({5}, 4), std::invalid_argument);
}

TEST_CASE("demazure product is monotone in bruhat order") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        int len = 1 + static_cast<int>(rng() % 12);
        std::vector<int> word;
        for (int k = 0; k < len; ++k) word.push_back(1 + static_cast<int>(rng() % 4));
        Permutation prev = Permutation::identity(5);
        for (int k = 0; k < len; ++k) {
            Permutation next = demazure_product({word.begin(), word.begin() + k + 1}, 5);
            REQUIRE(bruhat_leq(prev, next));
            prev = next;
        }
    }
}

TEST_CASE("reduced word detection") {
    CHECK(is_reduced_word({1, 2, 1}, 3));
    CHECK_FALSE(is_reduced_word({1, 1}, 3));
    CHECK(is_reduced_word({}, 3));
}

TEST_CASE("weight-constrained enumeration fixtures") {
    Permutation w = Permutation::parse("12365847");
    auto dreams = enumerate_pipes_with_weight(w, WeakComposition({3, 3, 3, 2, 0, 0, 0, 0}));
    REQUIRE(dreams.size() == 3);
    std::set<PipeDream> got(dreams.begin(), dreams.end());
    std::set<PipeDream> expected = {
        make_dream(8, {{1, 4}, {1, 5}, {1, 7}, {2, 3}, {2, 4}, {2, 6}, {3, 2}, {3, 3}, {3, 5},
                       {4, 1}, {4, 3}}),
        make_dream(8, {{1, 4}, {1, 5}, {1, 7}, {2, 3}, {2, 4}, {2, 6}, {3, 2}, {3, 4}, {3, 5},
                       {4, 1}, {4, 3}}),
        make_dream(8, {{1, 4}, {1, 5}, {1, 7}, {2, 3}, {2, 4}, {2, 6}, {3, 2}, {3, 3}, {3, 5},
                       {4, 3}, {4, 4}}),
    };
    CHECK(got == expected);
    for (const PipeDream& p : dreams) {
        CHECK(demazure_product(pipe_word(p), 8) == w);
        CHECK(p.weight() == WeakComposition({3, 3, 3, 2, 0, 0, 0, 0}));
    }

    CHECK(enumerate_pipes_with_weight(Permutation::identity(4), WeakComposition::zeros(4)).size() ==
          1);

    CHECK(enumerate_pipes_with_weight(Permutation::parse("12385746"),
                                      WeakComposition({1, 4, 1, 2, 0, 0, 0, 0}))
              .size() == 7);
}

TEST_CASE("staircase sufficiency for n <= 4") {
    for (int n = 1; n <= 4; ++n)
        for (const Permutation& w : all_permutations(n)) {
            auto stair = enumerate_pipes(w);
            auto full = enumerate_pipes(w, -1, true);
            REQUIRE(stair == full);
        }
}

TEST_CASE("pipe polynomial matches oracle on S_4") {
    PolynomialOracle oracle;
    for (const Permutation& w : all_permutations(4)) {
        CHECK(grothendieck_via_pipes(w) == oracle.grothendieck(w));
        CHECK(schubert_via_pipes(w) == oracle.schubert(w));
    }
    CHECK(grothendieck_via_pipes(Permutation::identity(3)) == IntPolynomial::constant(3, 1));
}

TEST_CASE("per-weight pipe counts match grothendieck coefficients, S_5") {
    PolynomialOracle oracle;
    for (const Permutation& w : all_permutations(5)) {
        const IntPolynomial& g = oracle.grothendieck(w);
        for (const auto& [e, c] : g.terms()) {
            auto dreams = enumerate_pipes_with_weight(w, WeakComposition(e));
            REQUIRE(Coeff(static_cast<long long>(dreams.size())) == abs(c));
        }
    }
}

TEST_CASE("enumerated dreams satisfy the length inequality") {
    Permutation w = Permutation::parse("21543");
    PolynomialOracle oracle;
    for (const auto& [e, c] : oracle.grothendieck(w).terms())
        for (const PipeDream& p : enumerate_pipes_with_weight(w, WeakComposition(e))) {
            auto word = pipe_word(p);
            Permutation d = demazure_product(word, 5);
            REQUIRE(d.length() <= p.size());
            REQUIRE((d.length() == p.size()) == is_reduced_word(word, 5));
        }
}

TEST_CASE("pipe dream text and json round-trips") {
    PipeDream p = make_dream(8, {{1, 4}, {1, 5}, {1, 7}, {2, 3}, {2, 4}, {2, 6}, {3, 2}, {3, 3},
                                 {3, 5}, {4, 1}, {4, 3}});
    CHECK(PipeDream::from_text(p.to_text()) == p);
    CHECK(PipeDream::from_json_string(p.to_json_string()) == p);
}

TEST_CASE("budgeted enumeration reports incompleteness") {
    Permutation w = Permutation::parse("12365847");
    auto res =
        enumerate_pipes_with_weight_budgeted(w, WeakComposition({3, 3, 3, 2, 0, 0, 0, 0}), false, 5);
    CHECK_FALSE(res.complete);
}
