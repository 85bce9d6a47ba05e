#include "doctest.h"

#include "corpus.hpp"
#include "knotcalc/bracket.hpp"
#include "knotcalc/builtins.hpp"
#include "knotcalc/checkerboard.hpp"

using namespace knot;

namespace {
QuarterLaurent tmono(long c, int e) { return QuarterLaurent::int_monomial(VarTag::t, c, e); }
QuarterLaurent amono(long c, int e) { return QuarterLaurent::int_monomial(VarTag::A, c, e); }
} // namespace

TEST_CASE("bracket of the unknot is 1") {
    CHECK(bracket_naive(builtin("unknot")) == QuarterLaurent::one(VarTag::A));
    CHECK(bracket_tl(builtin("unknot")) == QuarterLaurent::one(VarTag::A));
}

TEST_CASE("trefoil bracket, brute force over all 8 states") {
    auto b = bracket_naive(builtin("trefoil"));
    CHECK(b == amono(1, -7) + amono(-1, -3) + amono(-1, 5));
    CHECK(b.str() == "A^-7 - A^-3 - A^5");
}

TEST_CASE("jones values") {
    CHECK(jones(builtin("trefoil")) == tmono(1, 1) + tmono(1, 3) + tmono(-1, 4));
    CHECK(jones(builtin("unknot")) == QuarterLaurent::one(VarTag::t));
    // mirror negates all exponents
    CHECK(jones(builtin("trefoil-lh")) == tmono(1, -1) + tmono(1, -3) + tmono(-1, -4));
    CHECK(jones(builtin("figure8")) ==
          tmono(1, -2) + tmono(-1, -1) + tmono(1, 0) + tmono(-1, 1) + tmono(1, 2));
}

TEST_CASE("jones of the mirror negates exponents across the corpus") {
    for (const auto& d : testing::alternating_corpus(4)) {
        auto j = jones(d);
        auto jm = jones(mirror(d));
        QuarterLaurent flipped(VarTag::t);
        for (const auto& [num, c] : j.terms())
            flipped += QuarterLaurent::monomial(VarTag::t, c, Quarter{-num});
        CHECK(jm == flipped);
    }
}

TEST_CASE("negative kink multiplies the bracket by -A^-3") {
    auto kink = parse_pd("X(1,2,2,1)");
    CHECK(bracket_naive(kink) == amono(-1, -3));
}

TEST_CASE("naive cap") {
    BracketOptions opts;
    opts.naive_cap = 4;
    CHECK_THROWS_WITH_AS(bracket_naive(family_k2n1(2), opts), doctest::Contains("TooLarge"),
                         knot_error);
    // automatic falls back to the contraction engine
    CHECK(bracket(family_k2n1(2), Engine::automatic, opts) == bracket_tl(family_k2n1(2)));
}

TEST_CASE("tl width limit") {
    BracketOptions opts;
    opts.tl_width_limit = 2;
    CHECK_THROWS_WITH_AS(bracket_tl(builtin("trefoil"), opts),
                         doctest::Contains("ResourceExhausted"), knot_error);
}

TEST_CASE("sharded state sum is deterministic") {
    auto d = builtin("figure8");
    auto base = bracket_naive(d);
    for (int shards : {2, 3, 8}) {
        BracketOptions opts;
        opts.shards = shards;
        CHECK(bracket_naive(d, opts) == base);
    }
}

TEST_CASE("engine equivalence on the corpus") {
    for (const auto& d : testing::engine_corpus()) {
        if (d.size() > 14)
            continue;
        CHECK(bracket_tl(d) == bracket_naive(d));
    }
}

TEST_CASE("m invariant") {
    CHECK(m_invariant(builtin("trefoil")) == quarter_of_int(1));
    CHECK(m_invariant(builtin("figure8")) == quarter_of_int(-2));
    CHECK(m_invariant(builtin("unknot")) == quarter_of_int(0));
}

TEST_CASE("m formula matches the minimum degree") {
    for (const auto& d : testing::alternating_corpus(5)) {
        auto col = checkerboard(d);
        CHECK(m_formula(d, col) == m_invariant(d));
    }
    // spot values: trefoil (w=3,n=3,X=2) gives 1, and the whole family has
    // (3(2n+1) - (2n+1) - 4n + 2)/4 = 1
    CHECK(m_formula(builtin("trefoil"), checkerboard(builtin("trefoil"))) == quarter_of_int(1));
    CHECK(m_formula(family_k2n1(2), checkerboard(family_k2n1(2))) == quarter_of_int(1));
    CHECK(m_formula(builtin("unknot"), checkerboard(builtin("unknot"))) == quarter_of_int(0));
}

TEST_CASE("m formula rejects non-alternating input") {
    auto dbl = whitehead_double({builtin("unknot"), -1}).diagram; // 4-crossing trefoil picture
    REQUIRE_FALSE(is_alternating(dbl));
    CHECK_THROWS_WITH_AS(m_formula(dbl, checkerboard(builtin("trefoil"))),
                         doctest::Contains("NotAlternating"), knot_error);
}

TEST_CASE("degree bounds on alternating diagrams") {
    for (const auto& d : testing::alternating_corpus(5)) {
        auto rep = degree_theorem_check(d, checkerboard(d));
        CHECK(rep.ok());
    }

    auto trefoil_rep = degree_theorem_check(builtin("trefoil"), checkerboard(builtin("trefoil")));
    CHECK(trefoil_rep.expected_max == 5);
    CHECK(trefoil_rep.expected_min == -7);

    auto k5_rep = degree_theorem_check(family_k2n1(2), checkerboard(family_k2n1(2)));
    CHECK(k5_rep.expected_max == 11);
    CHECK(k5_rep.expected_min == -9);
}
