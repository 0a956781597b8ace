#include <doctest.h>

#include <random>

#include "rblock/errors.hpp"
#include "rblock/mpoly.hpp"
#include "rblock/verify.hpp"

using namespace rblock;

TEST_CASE("basic arithmetic collects into canonical form") {
    MPoly one_plus_t = MPoly::one() + MPoly::t();
    MPoly one_plus_qt = MPoly::one() + MPoly(Monomial(1, 1), 1);
    MPoly prod = one_plus_t * one_plus_qt;

    MPoly expected = MPoly::parse("q*t^2 + q*t + t + 1");
    CHECK(prod == expected);
    CHECK(prod.to_string() == "q*t^2 + q*t + t + 1");

    CHECK(prod + MPoly::zero() == prod);
    CHECK((MPoly::one() + MPoly::q()) * (MPoly::one() - MPoly::q()) ==
          MPoly::parse("1 - q^2"));
}

TEST_CASE("zero coefficients are never stored") {
    MPoly p = MPoly::q() - MPoly::q();
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    CHECK(p.to_string() == "0");

    MPoly q2 = MPoly::q(2);
    MPoly diff = (MPoly::one() + q2) - q2;
    CHECK(diff == MPoly::one());
    CHECK(diff.term_count() == 1);
}

TEST_CASE("qt substitution of x variables") {
    CHECK(MPoly::x(1).substitute_qt() == MPoly::t());
    CHECK(MPoly::x(3).substitute_qt() == MPoly(Monomial(2, 1), 1));
    MPoly p = MPoly::x(1) * MPoly::x(2) + MPoly::x(2);
    CHECK(p.substitute_qt() == MPoly::parse("q*t^2 + q*t"));
}

TEST_CASE("other substitutions") {
    MPoly p = MPoly::parse("q^2*t + q + t^3");
    CHECK(p.substitute_q_power(2) == MPoly::parse("q^4*t + q^2 + t^3"));
    CHECK(p.substitute_t_to_q() == MPoly::parse("q^3 + q + q^3") );
    CHECK((MPoly::x(1, 2) * MPoly::x(2)).swap_x(1, 2) ==
          MPoly::x(2, 2) * MPoly::x(1));
    CHECK(MPoly::parse("q*t + 3*x1").eval_all_ones() == BigInt(4));
}

TEST_CASE("exact division") {
    MPoly x1 = MPoly::x(1), x2 = MPoly::x(2);
    MPoly num = x1 * x1 - x2 * x2;
    CHECK(num.divide_exact(x1 - x2) == x1 + x2);
    CHECK(num.divide_exact(x1 + x2) == x1 - x2);

    CHECK_THROWS_AS((x1 + MPoly::one()).divide_exact(x2), internal_error);
    CHECK_THROWS_AS(x1.divide_exact(MPoly::zero()), internal_error);
    CHECK_FALSE((x1 + MPoly::one()).try_divide(x2).has_value());
}

TEST_CASE("graded-lex term order drives printing") {
    MPoly p = MPoly(Monomial(0, 0, {{1, 1}}), 2) + MPoly::q(3) +
              MPoly(Monomial(1, 1), -1) + MPoly(5);
    // degrees: q^3 (3), qt (2), x1 (1), 5 (0); q beats x at equal degree.
    CHECK(p.to_string() == "q^3 - q*t + 2*x1 + 5");
    CHECK(MPoly::parse(p.to_string()) == p);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(MPoly::parse(""), invalid_input);
    CHECK_THROWS_AS(MPoly::parse("q +"), invalid_input);
    CHECK_THROWS_AS(MPoly::parse("y"), invalid_input);
    CHECK_THROWS_AS(MPoly::parse("1 & q"), invalid_input);
}

TEST_CASE("randomized ring axioms and round-trips") {
    SuiteResult res = verify_mpoly_axioms(20240901, 300);
    INFO(res.first_counterexample);
    CHECK(res.failures == 0);
    CHECK(res.instances > 0);
}

TEST_CASE("string round-trip on structured values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> e(0, 4), c(-9, 9), idx(1, 4);
    for (int round = 0; round < 200; ++round) {
        MPoly p;
        for (int t = 0; t < 4; ++t) {
            std::vector<std::pair<int, int>> xs;
            if (int v = e(rng); v > 0) xs.emplace_back(idx(rng), v);
            p.add_term(Monomial(e(rng), e(rng), xs), BigInt(c(rng)));
        }
        CAPTURE(p.to_string());
        CHECK(MPoly::parse(p.to_string()) == p);
    }
}
