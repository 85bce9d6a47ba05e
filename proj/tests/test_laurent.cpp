#include "doctest.h"

#include <random>

#include "knotcalc/laurent.hpp"

using namespace knot;

namespace {

QuarterLaurent mono(VarTag v, long c, int e) { return QuarterLaurent::int_monomial(v, c, e); }

// Small random Laurent polynomials on the integer grid.
QuarterLaurent random_poly(std::mt19937& rng, VarTag v) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(-5, 5), coeff(-9, 9);
    QuarterLaurent p(v);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        p += mono(v, coeff(rng), expo(rng));
    return p;
}

} // namespace

TEST_CASE("monomial identities") {
    auto a2 = mono(VarTag::A, 1, 2);
    auto am2 = mono(VarTag::A, 1, -2);
    CHECK(a2 * am2 == QuarterLaurent::one(VarTag::A));

    auto p = mono(VarTag::A, -1, 5) + mono(VarTag::A, -1, -3) + mono(VarTag::A, 1, -7);
    CHECK(p + QuarterLaurent::zero(VarTag::A) == p);
    CHECK(p * QuarterLaurent::one(VarTag::A) == p);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20240511);
    for (int iter = 0; iter < 200; ++iter) {
        auto p = random_poly(rng, VarTag::A);
        auto q = random_poly(rng, VarTag::A);
        auto r = random_poly(rng, VarTag::A);
        CHECK(p + q == q + p);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("variable mismatch is rejected") {
    auto a = mono(VarTag::A, 1, 1);
    auto t = mono(VarTag::t, 1, 1);
    CHECK_THROWS_WITH_AS(a + t, doctest::Contains("VariableMismatch"), knot_error);
    CHECK_THROWS_AS(a * t, knot_error);
}

TEST_CASE("Jones substitution") {
    // <RH trefoil> with writhe 3 becomes the trefoil Jones polynomial.
    auto bracket = mono(VarTag::A, -1, 5) + mono(VarTag::A, -1, -3) + mono(VarTag::A, 1, -7);
    auto jones = substitute_A_to_t(bracket, 3);
    auto expected = mono(VarTag::t, 1, 1) + mono(VarTag::t, 1, 3) + mono(VarTag::t, -1, 4);
    CHECK(jones == expected);
    CHECK(jones.str() == "t + t^3 - t^4");

    CHECK(substitute_A_to_t(QuarterLaurent::one(VarTag::A), 0) == QuarterLaurent::one(VarTag::t));
    CHECK(substitute_A_to_t(mono(VarTag::A, 1, -4), 0) == mono(VarTag::t, 1, 1));

    CHECK_THROWS_AS(substitute_A_to_t(mono(VarTag::t, 1, 1), 0), knot_error);
}

TEST_CASE("substitution is linear for fixed writhe") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        auto p = random_poly(rng, VarTag::A);
        auto q = random_poly(rng, VarTag::A);
        int w = static_cast<int>(rng() % 7) - 3;
        CHECK(substitute_A_to_t(p + q, w) ==
              substitute_A_to_t(p, w) + substitute_A_to_t(q, w));
    }
}

TEST_CASE("degrees") {
    auto jones = mono(VarTag::t, 1, 1) + mono(VarTag::t, 1, 3) + mono(VarTag::t, -1, 4);
    CHECK(jones.min_degree() == quarter_of_int(1));
    CHECK(jones.max_degree() == quarter_of_int(4));

    CHECK(QuarterLaurent::one(VarTag::t).min_degree() == quarter_of_int(0));

    auto bracket = mono(VarTag::A, -1, 5) + mono(VarTag::A, -1, -3) + mono(VarTag::A, 1, -7);
    CHECK(bracket.max_degree() == quarter_of_int(5));
    CHECK(bracket.min_degree() == quarter_of_int(-7));

    CHECK_THROWS_AS(QuarterLaurent::zero(VarTag::t).min_degree(), knot_error);
}

TEST_CASE("quarter values") {
    CHECK(Quarter{8}.is_integer());
    CHECK(Quarter{8}.as_integer() == 2);
    CHECK(Quarter{-3}.str() == "-3/4");
    CHECK(Quarter{2}.str() == "1/2");
    CHECK_THROWS_AS(Quarter{1}.as_integer(), knot_error);
}

TEST_CASE("canonical rendering ascends in the exponent") {
    auto bracket = mono(VarTag::A, -1, 5) + mono(VarTag::A, -1, -3) + mono(VarTag::A, 1, -7);
    CHECK(bracket.str() == "A^-7 - A^-3 - A^5");

    auto fig8 = mono(VarTag::t, 1, -2) + mono(VarTag::t, -1, -1) + mono(VarTag::t, 1, 0) +
                mono(VarTag::t, -1, 1) + mono(VarTag::t, 1, 2);
    CHECK(fig8.str() == "t^-2 - t^-1 + 1 - t + t^2");

    CHECK(QuarterLaurent::zero(VarTag::t).str() == "0");
    CHECK(mono(VarTag::t, -2, 3).str() == "-2t^3");
}
