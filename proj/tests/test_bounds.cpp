#include "doctest.h"

#include "golden.hpp"

#include "extremal/bounds.hpp"

#include <random>

using namespace extremal;
using golden::R;

TEST_CASE("positive threshold examples") {
    CHECK(nmax_positive({3, 26752, 2, -247}, R("1/4")) == 0);
    CHECK(positive_report(CategoryId::semion, 0).threshold() == doctest::Approx(0.298).epsilon(0.002));
    CHECK(nmax_positive({251, 26752, 2, 1}, R("1/4")) == 2);
    CHECK(nmax_positive({-245, 1, 26999, 1}, R("9/5")) == 2);
    CHECK_THROWS_WITH(nmax_positive({1, 1, 1, 1}, R("-1/4")), "bound requires h_ext > 0");
}

TEST_CASE("positive n_max column") {
    for (const auto& row : golden::positive_rows()) {
        CAPTURE(to_slug(row.category));
        CAPTURE(row.c);
        CHECK(nmax_positive(row.chi, row.h) == row.n_max);
    }
    for (CategoryId id : kAllCategories)
        for (int k = 0; k < 3; ++k) {
            const BoundReport b = positive_report(id, k);
            CHECK(b.direction == Direction::positive);
            CHECK(b.class_rep_c == seed(id, k).c);
        }
}

TEST_CASE("positive bound is not vacuous") {
    for (const auto& row : golden::positive_rows()) {
        const long n = nmax_positive(row.chi, row.h);
        const ChiState beyond = iterate(row.chi, row.h, n + 1);
        CHECK(beyond.chi.x < 0);
        // The quadratic has the sign of chi_00 along the family.
        CHECK(plus_quadratic(row.chi, row.h, n + 1).sign() < 0);
    }
}

TEST_CASE("sharp positive bound") {
    for (const auto& row : golden::positive_rows()) {
        const long sharp = nmax_positive_sharp(row.chi, row.h);
        CHECK(sharp <= nmax_positive(row.chi, row.h));
        for (long n = sharp + 1; n <= sharp + 20; ++n) CHECK(plus_quadratic(row.chi, row.h, n).sign() < 0);
        if (sharp > 0) CHECK(plus_quadratic(row.chi, row.h, sharp).sign() >= 0);
    }
}

TEST_CASE("quadratic sign matches chi_00 along the family") {
    for (const auto& row : golden::positive_rows()) {
        for (long n = 1; n <= 4; ++n) {
            const Rational x = iterate(row.chi, row.h, n).chi.x;
            const Rational q = plus_quadratic(row.chi, row.h, n);
            CHECK(x.sign() == q.sign());
        }
    }
}

TEST_CASE("negative threshold examples") {
    const CharMatrix m23{R("713/11"), R("57264144384/11"), R("1/26752"), R("-3397/11")};
    CHECK(nmax_negative(m23, R("-7/4")) == 0);
    const BoundReport r = negative_report(CategoryId::semion, 0);
    CHECK(r.class_rep_c == -23);
    CHECK(r.threshold() == doctest::Approx(0.1395).epsilon(0.001));
    CHECK(r.threshold() < 0.14);

    // alpha = 120(1 - h) makes the threshold exactly zero.
    const Rational h = R("-1/4");
    const CharMatrix flat{Rational(120) * (Rational(1) - h), 4, R("1/2"), 0};
    CHECK(nmax_negative(flat, h) == 0);

    CHECK_THROWS_WITH(nmax_negative(m23, R("1/4")), "bound requires h_ext < 0");
    CHECK_THROWS_WITH(nmax_negative({1, R("1/2"), R("1/2"), 0}, R("-1/4")), "bound requires beta > 1");
    CHECK_THROWS_WITH(nmax_negative({1, 1, 2, 0}, R("-1/4")), "bound requires |chi_10| <= 1");
}

TEST_CASE("negative n_max column and base points") {
    for (const auto& row : golden::negative_rows()) {
        bool seen = false;
        for (int k = 0; k < 3; ++k) {
            const BoundReport b = negative_report(row.category, k);
            if (b.class_rep_c != row.c) continue;
            seen = true;
            CHECK(b.chi == row.chi);
            CHECK(b.h == row.h);
            CHECK(b.n_max == row.n_max);
            CHECK(b.direction == Direction::negative);
        }
        CAPTURE(row.c);
        CHECK(seen);
    }
}

TEST_CASE("chi_10 stays below one past the negative base point") {
    for (const auto& row : golden::negative_rows())
        for (long n = 1; n <= 5; ++n) CHECK(iterate(row.chi, row.h, -n).chi.z.abs() < 1);
}

TEST_CASE("c extremes") {
    for (const auto& e : golden::extremes()) {
        CAPTURE(to_slug(e.category));
        CHECK(c_extremes(e.category) == CExtremes{e.c_min, e.c_max});
    }
}

TEST_CASE("silly estimate") {
    CHECK(silly_estimate_holds(3, 1, 1, 2));
    CHECK_FALSE(silly_estimate_holds(1, 1, 0, 1));
    CHECK_THROWS(silly_estimate_holds(0, 1, 1, 1));
    CHECK_THROWS(silly_estimate_holds(1, 1, 1, R("1/2")));

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(1, 300);
    int held = 0;
    for (int i = 0; i < 500; ++i) {
        const Rational A(d(rng), d(rng)), B(d(rng), d(rng)), C(d(rng), d(rng));
        const Rational n = Rational(1) + Rational(d(rng), 7);
        if (!silly_estimate_holds(A, B, C, n)) continue;
        ++held;
        CHECK(A * pow(n, 4) > B * pow(n + C, 2));
    }
    CHECK(held > 0);
}
