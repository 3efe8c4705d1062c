#include <doctest.h>

#include <random>
#include <stdexcept>

#include "groth/oracle.hpp"

using namespace groth;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int n, int max_terms = 6, int max_exp = 3) {
    IntPolynomial f(n);
    int terms = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_terms));
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) e[static_cast<size_t>(k)] = static_cast<int>(rng() % (max_exp + 1));
        f.add_term(e, Coeff(static_cast<long>(rng() % 9) - 4));
    }
    return f;
}

}  // namespace

TEST_CASE("divided difference basics") {
    // (x1 - x2)/(x1 - x2) = 1
    CHECK(divided_difference(IntPolynomial::variable(2, 1), 1) == IntPolynomial::constant(2, 1));
    // (x1^2 x2 - x1^2 x3)/(x2 - x3) = x1^2
    CHECK(divided_difference(IntPolynomial::monomial({2, 1, 0}), 2) ==
          IntPolynomial::monomial({2, 0, 0}));
    // symmetric input vanishes
    IntPolynomial sym = IntPolynomial::monomial({1, 1, 0});
    CHECK(divided_difference(sym, 1).is_zero());
    CHECK_THROWS_AS(divided_difference(IntPolynomial::variable(2, 1), 2), std::invalid_argument);
}

TEST_CASE("divided difference is an exact quotient") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        int i = 1 + static_cast<int>(rng() % static_cast<uint64_t>(n - 1));
        IntPolynomial f = random_poly(rng, n);
        IntPolynomial d = divided_difference(f, i);
        // (x_i - x_{i+1}) * del_i f == f - s_i f
        IntPolynomial lhs =
            (IntPolynomial::variable(n, i) - IntPolynomial::variable(n, i + 1)) * d;
        CHECK(lhs == f - f.swap_variables(i, i + 1));
        // output symmetric in x_i, x_{i+1}
        CHECK(d.swap_variables(i, i + 1) == d);
    }
}

TEST_CASE("pi_tilde basics") {
    CHECK(pi_tilde(IntPolynomial::variable(2, 1), 1) == IntPolynomial::constant(2, 1));
    CHECK(pi_tilde(IntPolynomial::constant(3, 1), 2) == IntPolynomial::constant(3, 1));
    CHECK(pi_tilde(IntPolynomial(4), 2).is_zero());
}

TEST_CASE("operator idempotence on random polynomials") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        int i = 1 + static_cast<int>(rng() % static_cast<uint64_t>(n - 1));
        IntPolynomial f = random_poly(rng, n);
        CHECK(divided_difference(divided_difference(f, i), i).is_zero());
        IntPolynomial p = pi_tilde(f, i);
        CHECK(pi_tilde(p, i) == p);
    }
}

TEST_CASE("grothendieck and schubert base cases") {
    PolynomialOracle oracle;
    CHECK(oracle.grothendieck(Permutation::longest(3)) == IntPolynomial::monomial({2, 1, 0}));
    CHECK(oracle.schubert(Permutation::identity(4)) == IntPolynomial::constant(4, 1));
    CHECK(oracle.grothendieck(Permutation::parse("213")) == IntPolynomial::variable(3, 1));
}

TEST_CASE("lascoux examples") {
    PolynomialOracle oracle;
    CHECK(oracle.lascoux(WeakComposition({2, 1, 0})) == IntPolynomial::monomial({2, 1, 0}));
    CHECK(oracle.lascoux(WeakComposition({0, 0, 0, 0})) == IntPolynomial::constant(4, 1));

    // L_{(0,1)} = x1 + x2 - x1 x2
    IntPolynomial expected(2);
    expected.add_term({1, 0}, 1);
    expected.add_term({0, 1}, 1);
    expected.add_term({1, 1}, -1);
    CHECK(oracle.lascoux(WeakComposition({0, 1})) == expected);
}

TEST_CASE("recursion path independence on S_4") {
    PolynomialOracle small(PolynomialOracle::AscentChoice::Smallest);
    PolynomialOracle large(PolynomialOracle::AscentChoice::Largest);
    for (const Permutation& w : all_permutations(4)) {
        CHECK(small.grothendieck(w) == large.grothendieck(w));
        CHECK(small.schubert(w) == large.schubert(w));
    }
}

TEST_CASE("lowest degree part of grothendieck is schubert, S_5") {
    PolynomialOracle oracle;
    for (const Permutation& w : all_permutations(5))
        REQUIRE(oracle.grothendieck(w).lowest_degree_part() == oracle.schubert(w));
    CHECK(IntPolynomial::monomial({1, 2}).lowest_degree_part() == IntPolynomial::monomial({1, 2}));
    IntPolynomial one_plus_x = IntPolynomial::constant(2, 1) + IntPolynomial::variable(2, 1);
    CHECK(one_plus_x.lowest_degree_part() == IntPolynomial::constant(2, 1));
    CHECK_THROWS_AS(IntPolynomial(2).lowest_degree_part(), std::domain_error);
}

TEST_CASE("grothendieck sign pattern, S_5") {
    PolynomialOracle oracle;
    for (const Permutation& w : all_permutations(5)) {
        int lw = w.length();
        for (const auto& [e, c] : oracle.grothendieck(w).terms()) {
            int deg = 0;
            for (int x : e) deg += x;
            REQUIRE(((deg - lw) % 2 == 0) == (c > 0));
        }
    }
}

TEST_CASE("coefficient extraction") {
    PolynomialOracle oracle;
    Permutation w = Permutation::parse("12365847");
    WeakComposition gamma({3, 3, 3, 2});
    CHECK(oracle.grothendieck_count(w, gamma) == 3);
    CHECK(oracle.grothendieck(w).coefficient(gamma) == 3);  // (-1)^{11-5} = +1
    CHECK(IntPolynomial::constant(3, 1).coefficient(WeakComposition({0, 0, 0})) == 1);
}

TEST_CASE("polynomial text and json round-trips") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        IntPolynomial f = random_poly(rng, n);
        CHECK(IntPolynomial::from_text(f.to_text(), n) == f);
        CHECK(IntPolynomial::from_json_string(f.to_json_string()) == f);
    }
    CHECK(IntPolynomial::from_text("0", 3) == IntPolynomial(3));
}
