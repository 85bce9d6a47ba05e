#include "doctest.h"

#include "knotcalc/bounds.hpp"

using namespace knot;

TEST_CASE("ln_bounds") {
    // family members: tb = 1, tb of the mirror = -(2n+4)
    for (int n = 1; n <= 8; ++n) {
        auto iv = ln_bounds(1, -(2 * n + 4));
        CHECK(iv.lower == 2);
        CHECK(iv.upper == 2 * n + 4);
    }
    auto unknot = ln_bounds(-1, -1);
    CHECK(unknot.lower == 0);
    CHECK(unknot.upper == 1);

    auto trefoil = ln_bounds(1, -6);
    CHECK(trefoil.lower == 2);
    CHECK(trefoil.upper == 6);

    CHECK_THROWS_WITH_AS(ln_bounds(5, 0), doctest::Contains("EmptyInterval"), knot_error);
}

TEST_CASE("slicing_bounds") {
    CHECK(slicing_bounds({{{1, 0}}}) == (TnuInterval{0, 4, {}}));
    CHECK(slicing_bounds({{{0, 0}}}) == (TnuInterval{0, 0, {}}));
    CHECK(slicing_bounds({{{1, 0}, {0, 2}}}) == (TnuInterval{0, 0, {}}));
    CHECK_THROWS_WITH_AS(slicing_bounds({}), doctest::Contains("EmptyData"), knot_error);
    CHECK_THROWS_AS(slicing_bounds({{{-1, 0}}}), knot_error);
}

TEST_CASE("crossing change propagation") {
    TnuInterval slice{0, 0, {}};
    auto plus = crossing_change_propagate(slice);
    CHECK(plus == (TnuInterval{0, 4, {}}));

    // iterating p positive changes from a slice knot reproduces [0, 4p]
    for (int p = 1; p <= 5; ++p) {
        TnuInterval iv{0, 0, {}};
        for (int i = 0; i < p; ++i)
            iv = crossing_change_propagate(iv);
        CHECK(iv == slicing_bounds({{{p, 0}}}));
    }

    CHECK(crossing_change_propagate({2, 6, {}}) == (TnuInterval{2, 10, {}}));
    CHECK(crossing_change_reverse({2, 6, {}}) == (TnuInterval{-2, 6, {}}));
}

TEST_CASE("combine") {
    TnuInterval a{2, 10, {{"lower", "a"}, {"upper", "a"}}};
    TnuInterval b{0, 4, {{"lower", "b"}, {"upper", "b"}}};
    auto c = combine({a, b});
    CHECK(c.lower == 2);
    CHECK(c.upper == 4);
    CHECK(c.sources.size() == 4);

    CHECK(combine({a}) == a);
    // commutative and idempotent on the interval part
    CHECK(combine({b, a}) == c);
    CHECK(combine({a, a}) == a);
    // associative
    TnuInterval d{3, 8, {}};
    CHECK(combine({combine({a, b}), d}) == combine({a, combine({b, d})}));

    CHECK_THROWS_WITH_AS(combine({TnuInterval{0, 1, {}}, TnuInterval{2, 3, {}}}),
                         doctest::Contains("EmptyInterval"), knot_error);
    CHECK_THROWS_WITH_AS(combine({}), doctest::Contains("EmptyData"), knot_error);
}

TEST_CASE("slicing statistics") {
    auto st = slicing_stats({{{1, 0}, {0, 2}}});
    CHECK(st.us_plus == 0);
    CHECK(st.us_minus == 0);
    CHECK(st.Us == 1);

    auto slice = slicing_stats({{{0, 0}}});
    CHECK(slice.us_plus == 0);
    CHECK(slice.us_minus == 0);
    CHECK(slice.Us == 0);

    auto st2 = slicing_stats({{{2, 3}}});
    CHECK(st2.us_plus == 2);
    CHECK(st2.us_minus == 3);
    CHECK(st2.Us == 3);

    // min(us+, us-) <= Us on a grab bag of recipe sets
    for (auto pairs : std::vector<std::vector<std::pair<int, int>>>{
             {{1, 0}}, {{0, 2}, {3, 1}}, {{5, 5}, {1, 4}, {4, 1}}}) {
        auto s = slicing_stats({pairs});
        CHECK(std::min(s.us_plus, s.us_minus) <= s.Us);
    }

    CHECK_THROWS_WITH_AS(slicing_stats({}), doctest::Contains("EmptyData"), knot_error);
}

TEST_CASE("nu on torus knots") {
    CHECK(nu_torus(2, 3) == 1);
    CHECK(nu_torus(3, 5) == 4);
    CHECK(nu_torus(1, 7) == 0);
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {5, 7}, {1, 9}})
        CHECK(nu_torus(p, q) == nu_torus(q, p));
    CHECK_THROWS_WITH_AS(nu_torus(4, 6), doctest::Contains("NotCoprime"), knot_error);
    CHECK_THROWS_WITH_AS(nu_torus(0, 3), doctest::Contains("NonPositive"), knot_error);
}

TEST_CASE("family pipeline composes to [2,4]") {
    for (int n = 1; n <= 8; ++n) {
        auto iv = combine({ln_bounds(1, -(2 * n + 4)), slicing_bounds({{{1, 0}}})});
        CHECK(iv.lower == 2);
        CHECK(iv.upper == 4);
    }
}
