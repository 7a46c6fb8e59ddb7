#include "doctest.h"

#include "extremal/genus.hpp"

#include <set>
#include <utility>

using namespace extremal;

TEST_CASE("catalog rows") {
    REQUIRE(catalog().size() == 8);
    const auto& s = category_info(CategoryId::semion);
    CHECK(s.c_mod8 == 1);
    CHECK(s.h_mod1 == Rational(1, 4));
    CHECK(category_info(CategoryId::semion_bar).c_mod8 == 7);
    CHECK(category_info(CategoryId::fib).c_mod8 == Rational(14, 5));
    CHECK(category_info(CategoryId::fib_bar).h_mod1 == Rational(3, 5));
    CHECK(category_info(CategoryId::yang_lee).c_printed == Rational(-22, 5));
    CHECK(category_info(CategoryId::yang_lee).h_mod1 == Rational(4, 5));
    CHECK(category_info(CategoryId::yang_lee_bar).c_mod8 == Rational(22, 5));
}

TEST_CASE("the two dagger rows cover the tabulated classes") {
    // One row is (c, h) = (-3, -3/4), the other (-5, -1/4); the characteristic
    // matrix data pins which name goes with which.
    std::set<std::pair<std::string, std::string>> got;
    for (CategoryId id : {CategoryId::semion_dagger, CategoryId::semion_bar_dagger}) {
        const auto& info = category_info(id);
        got.insert({info.c_mod8.to_string(), info.h_mod1.to_string()});
    }
    const std::set<std::pair<std::string, std::string>> want = {{"5", "1/4"}, {"3", "3/4"}};
    CHECK(got == want);
    CHECK(category_info(CategoryId::semion_dagger).c_mod8 == 3);
}

TEST_CASE("slugs") {
    for (CategoryId id : kAllCategories) CHECK(parse_category(to_slug(id)) == id);
    CHECK(to_slug(CategoryId::semion_bar_dagger) == "semion-bar-dagger");
    CHECK_THROWS_AS(parse_category("toric-code"), std::invalid_argument);
}

TEST_CASE("S matrices are symmetric involutions") {
    for (const auto& info : catalog()) {
        const auto s = info.s_matrix.to_double();
        CHECK(s[0][1] == doctest::Approx(s[1][0]));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const double v = s[i][0] * s[0][j] + s[i][1] * s[1][j];
                CHECK(v == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
            }
    }
}

TEST_CASE("h_ext examples") {
    CHECK(h_ext(CategoryId::semion, 1) == Rational(1, 4));
    CHECK(h_ext(CategoryId::semion, 33) == Rational(9, 4));
    CHECK(h_ext(CategoryId::semion, -23) == Rational(-7, 4));
    CHECK(h_ext(CategoryId::yang_lee, Rational(-22, 5)) == Rational(-1, 5));
    CHECK_THROWS_WITH(h_ext(CategoryId::semion, 2), "c not in category's class mod 8");
}

TEST_CASE("ell") {
    const Rational h33(9, 4), h1(1, 4);
    CHECK(ell_general(2, 33, std::span<const Rational>(&h33, 1)) == 4);
    CHECK(ell_general(2, 1, std::span<const Rational>(&h1, 1)) == 0);
    CHECK(ell_general(1, 24, {}) == 6);
    CHECK_THROWS(ell_general(2, 1, {}));
}

TEST_CASE("exponent matrix") {
    CHECK(exponent_matrix(make_genus(CategoryId::semion, 1)) == ExponentPair{Rational(23, 24), Rational(5, 24)});
    CHECK(exponent_matrix(make_genus(CategoryId::semion, 33)) == ExponentPair{Rational(-3, 8), Rational(7, 8)});
    const Genus g = make_genus(CategoryId::fib, Rational(14, 5));
    CHECK(g.lambda0 == Rational(1) - Rational(14, 5) / 24);
}

TEST_CASE("admissible sweep properties") {
    for (CategoryId id : kAllCategories) {
        const Rational base = category_info(id).c_mod8;
        for (int k = -10; k <= 10; ++k) {
            const Rational c = base + Rational(8 * k);
            REQUIRE(is_admissible(id, c));
            const Rational h = h_ext(id, c);
            CHECK(h_ext(id, c + 24) == h + 2);
            CHECK_FALSE(h.is_integer());
            CHECK(mod_rational(h, 1) == category_info(id).h_mod1);
            const Genus g = make_genus(id, c);
            CHECK(g.ell.is_integer());
            CHECK(g.ell >= 0);
            CHECK(g.ell < 6);
            CHECK_FALSE(is_admissible(id, c + 1));
        }
    }
}

TEST_CASE("modular representation check") {
    CHECK(modular_rep_check(CategoryId::semion, 1));
    CHECK(modular_rep_check(CategoryId::yang_lee, Rational(-22, 5)));
    CHECK_THROWS(modular_rep_check(CategoryId::semion, 2));
    for (CategoryId id : kAllCategories)
        for (int k = -3; k <= 3; ++k) CHECK(modular_rep_check(id, category_info(id).c_mod8 + Rational(8 * k)));
}
