#include "doctest.h"

#include "golden.hpp"

#include "extremal/bounds.hpp"
#include "extremal/charser.hpp"
#include "extremal/classify.hpp"

#include <algorithm>
#include <set>

using namespace extremal;
using golden::R;

TEST_CASE("Semion candidates") {
    std::multiset<std::string> got;
    for (const auto& c : candidates(CategoryId::semion)) got.insert(c.c.to_string());
    const std::multiset<std::string> want = {"-23", "1", "25", "49", "-15", "9", "33", "57", "-7", "17", "41"};
    CHECK(got == want);
}

TEST_CASE("candidate ranges are never empty") {
    for (CategoryId id : kAllCategories) {
        const auto cs = candidates(id);
        CHECK_FALSE(cs.empty());
        const CExtremes e = c_extremes(id);
        for (const auto& c : cs) {
            CHECK(c.c >= e.c_min);
            CHECK(c.c <= e.c_max);
            CHECK(c.chi == chi_at(id, c.c).chi);
            CHECK(c.h_ext == h_ext(id, c.c));
        }
    }
}

TEST_CASE("first column filter") {
    CHECK(first_column_admissible({3, 26752, 2, -247}));
    CHECK(first_column_admissible({0, 310124, 1, -244}));
    CHECK_FALSE(first_column_admissible({R("713/11"), 1, R("1/26752"), 1}));
    CHECK_FALSE(first_column_admissible({-1, 1, 1, 1}));
}

TEST_CASE("classification reproduces the fifteen genera") {
    const auto rows = classify_all();
    REQUIRE(rows.size() == golden::surviving().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& want = golden::surviving()[i];
        CHECK(rows[i].category == want.category);
        CHECK(rows[i].c == want.c);
        CHECK(rows[i].h_ext == want.h_ext);
        CHECK(rows[i].ell == want.ell);
        CHECK(first_column_admissible(rows[i].chi));
    }
    CHECK(matches_golden(rows));
    CHECK(golden_genera().size() == 15);
    CHECK(classify_category(CategoryId::semion_dagger).empty());
    CHECK(classify_category(CategoryId::semion_bar_dagger).empty());
    CHECK(classify_category(CategoryId::yang_lee_bar).empty());
    CHECK(classify_category(CategoryId::semion).size() == 4);
}

TEST_CASE("matches_golden detects a change") {
    auto rows = classify_all();
    rows.back().ell += 1;
    CHECK_FALSE(matches_golden(rows));
    rows.pop_back();
    CHECK_FALSE(matches_golden(rows));
}

TEST_CASE("constant-term survivors that fail deeper in the expansion") {
    // Three genera pass the first-column filter but have a negative q^2
    // coefficient in the vacuum character.
    std::vector<std::pair<CategoryId, Rational>> deep;
    for (const auto& v : sweep()) {
        if (v.constant_terms_ok && !v.expansion_ok) deep.emplace_back(v.category, v.candidate.c);
        if (v.expansion_ok) CHECK(v.constant_terms_ok);
    }
    REQUIRE(deep.size() == 3);
    CHECK(deep[0] == std::pair{CategoryId::semion_dagger, Rational(27)});
    CHECK(deep[1] == std::pair{CategoryId::yang_lee, R("138/5")});
    CHECK(deep[2] == std::pair{CategoryId::yang_lee_bar, R("142/5")});

    CHECK(character_for(CategoryId::semion_dagger, 27).vacuum.coeffs[2] == -143373);
    CHECK(character_for(CategoryId::yang_lee, R("138/5")).vacuum.coeffs[2] == -169875);
    CHECK(character_for(CategoryId::yang_lee_bar, R("142/5")).vacuum.coeffs[2] == -164081);
}
