#pragma once

// The eight rank-two modular tensor categories and the arithmetic of
// admissible genera (category, central charge).

#include "extremal/rational.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace extremal {

enum class CategoryId {
    semion,
    semion_bar,
    semion_dagger,
    semion_bar_dagger,
    fib,
    fib_bar,
    yang_lee,
    yang_lee_bar,
};

inline constexpr std::array<CategoryId, 8> kAllCategories = {
    CategoryId::semion, CategoryId::semion_bar, CategoryId::semion_dagger, CategoryId::semion_bar_dagger,
    CategoryId::fib,    CategoryId::fib_bar,    CategoryId::yang_lee,      CategoryId::yang_lee_bar,
};

/// a + b*sqrt(d).
struct QuadraticSurd {
    Rational a;
    Rational b;
    int d = 5;

    double to_double() const;
    friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

/// S = radicand^(-1/2) * entries.
struct SMatrix {
    QuadraticSurd radicand;
    std::array<std::array<QuadraticSurd, 2>, 2> entries;

    std::array<std::array<double, 2>, 2> to_double() const;
};

struct CategoryInfo {
    CategoryId id;
    std::string_view slug;          // serialization key, e.g. "semion-bar"
    std::string_view display_name;  // e.g. "Semion-bar"
    SMatrix s_matrix;
    Rational c_printed;  // representative of c mod 8 as tabulated
    Rational h_printed;  // representative of h mod 1 as tabulated
    Rational c_mod8;     // normalized to [0, 8)
    Rational h_mod1;     // normalized to [0, 1)
    std::string_view extremal_realization;  // "None" when no extremal VOA exists
};

const CategoryInfo& category_info(CategoryId id);
std::span<const CategoryInfo> catalog();

std::string_view to_slug(CategoryId id);
/// Accepts the serialization slugs; throws std::invalid_argument otherwise.
CategoryId parse_category(std::string_view slug);

/// Representative of x mod m in [0, m).
Rational mod_rational(const Rational& x, const Rational& m);

bool is_admissible(CategoryId id, const Rational& c);

/// The unique h = h_mod1 (mod 1) with 0 <= 1 + c/2 - 6h < 6.
Rational h_ext(CategoryId id, const Rational& c);

/// binom(n,2) + n*c/4 - 6*sum(h), with the vacuum weight 0 implied.
Rational ell_general(int n, const Rational& c, std::span<const Rational> h);

struct Genus {
    CategoryId category;
    Rational c;
    Rational h_ext;
    Rational ell;
    Rational lambda0;
    Rational lambda1;
};

/// Throws std::invalid_argument("c not in category's class mod 8") when inadmissible.
Genus make_genus(CategoryId id, const Rational& c);

struct ExponentPair {
    Rational lambda0;
    Rational lambda1;
    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

ExponentPair exponent_matrix(const Genus& g);

/// S^2 = I and (ST)^3 = I in floating point, T = e^(-2 pi i c/24) diag(1, e^(2 pi i h_ext)).
bool modular_rep_check(CategoryId id, const Rational& c, double tolerance = 1e-12);

}  // namespace extremal
