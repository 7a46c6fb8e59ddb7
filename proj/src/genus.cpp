#include "extremal/genus.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace extremal {

namespace {

QuadraticSurd surd(Rational a, Rational b = 0, int d = 5) { return {std::move(a), std::move(b), d}; }

// phi = (1 + sqrt5)/2
const QuadraticSurd kPhi = surd(Rational(1, 2), Rational(1, 2));
const QuadraticSurd kPhiMinusOne = surd(Rational(-1, 2), Rational(1, 2));

SMatrix semion_s() { return {surd(2), {{{surd(1), surd(1)}, {surd(1), surd(-1)}}}}; }
SMatrix semion_dagger_s() { return {surd(2), {{{surd(-1), surd(1)}, {surd(1), surd(1)}}}}; }
SMatrix fib_s() { return {surd(Rational(5, 2), Rational(1, 2)), {{{surd(1), kPhi}, {kPhi, surd(-1)}}}}; }
SMatrix yang_lee_s() {
    return {surd(Rational(5, 2), Rational(-1, 2)), {{{surd(-1), kPhiMinusOne}, {kPhiMinusOne, surd(1)}}}};
}

CategoryInfo make_info(CategoryId id, std::string_view slug, std::string_view name, SMatrix s, Rational c,
                       Rational h, std::string_view realization) {
    return {id,   slug, name, std::move(s), c, h, mod_rational(c, 8), mod_rational(h, 1),
            realization};
}

const std::vector<CategoryInfo>& table() {
    static const std::vector<CategoryInfo> rows = {
        make_info(CategoryId::semion, "semion", "Semion", semion_s(), 1, Rational(1, 4), "A_{1,1} at c=1"),
        make_info(CategoryId::semion_bar, "semion-bar", "Semion-bar", semion_s(), 7, Rational(3, 4),
                  "E_{7,1} at c=7"),
        make_info(CategoryId::semion_dagger, "semion-dagger", "Semion-dagger", semion_dagger_s(), -5,
                  Rational(-1, 4), "None"),
        make_info(CategoryId::semion_bar_dagger, "semion-bar-dagger", "Semion-bar-dagger", semion_dagger_s(), -3,
                  Rational(-3, 4), "None"),
        make_info(CategoryId::fib, "fib", "Fib", fib_s(), Rational(14, 5), Rational(2, 5), "G_{2,1} at c=14/5"),
        make_info(CategoryId::fib_bar, "fib-bar", "Fib-bar", fib_s(), Rational(26, 5), Rational(3, 5),
                  "F_{4,1} at c=26/5"),
        make_info(CategoryId::yang_lee, "yang-lee", "Yang-Lee", yang_lee_s(), Rational(-22, 5), Rational(-1, 5),
                  "Yang-Lee at c=-22/5"),
        make_info(CategoryId::yang_lee_bar, "yang-lee-bar", "Yang-Lee-bar", yang_lee_s(), Rational(-18, 5),
                  Rational(-4, 5), "None"),
    };
    return rows;
}

}  // namespace

double QuadraticSurd::to_double() const { return a.to_double() + b.to_double() * std::sqrt(static_cast<double>(d)); }

std::array<std::array<double, 2>, 2> SMatrix::to_double() const {
    const double scale = 1.0 / std::sqrt(radicand.to_double());
    std::array<std::array<double, 2>, 2> m{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = scale * entries[i][j].to_double();
    return m;
}

const CategoryInfo& category_info(CategoryId id) { return table()[static_cast<std::size_t>(id)]; }

std::span<const CategoryInfo> catalog() { return table(); }

std::string_view to_slug(CategoryId id) { return category_info(id).slug; }

CategoryId parse_category(std::string_view slug) {
    for (const auto& info : table())
        if (info.slug == slug) return info.id;
    throw std::invalid_argument("unknown category '" + std::string(slug) + "'");
}

Rational mod_rational(const Rational& x, const Rational& m) {
    if (m.sign() <= 0) throw std::invalid_argument("modulus must be positive");
    return x - m * Rational((x / m).floor());
}

bool is_admissible(CategoryId id, const Rational& c) {
    return ((c - category_info(id).c_printed) / 8).is_integer();
}

Rational h_ext(CategoryId id, const Rational& c) {
    if (!is_admissible(id, c)) throw std::invalid_argument("c not in category's class mod 8");
    // 1 + c/2 - 6h in [0, 6)  <=>  h in ((c/2 - 5)/6, (1 + c/2)/6]; that window has
    // length 1, so the largest h = h_mod1 (mod 1) below the upper end is unique.
    const Rational upper = (Rational(1) + c / 2) / 6;
    const Rational h0 = category_info(id).h_mod1;
    return h0 + Rational((upper - h0).floor());
}

Rational ell_general(int n, const Rational& c, std::span<const Rational> h) {
    if (n < 1) throw std::invalid_argument("ell_general: n must be >= 1");
    if (static_cast<int>(h.size()) != n - 1) throw std::invalid_argument("ell_general: expected n-1 weights");
    Rational sum;
    for (const auto& x : h) sum += x;
    return Rational(static_cast<long>(n) * (n - 1) / 2) + Rational(n) * c / 4 - Rational(6) * sum;
}

Genus make_genus(CategoryId id, const Rational& c) {
    const Rational h = h_ext(id, c);
    const Rational ell = ell_general(2, c, std::span<const Rational>(&h, 1));
    return {id, c, h, ell, Rational(1) - c / 24, h - c / 24};
}

ExponentPair exponent_matrix(const Genus& g) { return {Rational(1) - g.c / 24, g.h_ext - g.c / 24}; }

bool modular_rep_check(CategoryId id, const Rational& c, double tolerance) {
    using cd = std::complex<double>;
    using M2 = std::array<std::array<cd, 2>, 2>;
    const Rational h = h_ext(id, c);
    const auto s_real = category_info(id).s_matrix.to_double();
    M2 s{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s[i][j] = s_real[i][j];
    const double two_pi = 2.0 * std::acos(-1.0);
    const cd phase = std::polar(1.0, -two_pi * mod_rational(c, 24).to_double() / 24.0);
    const M2 t = {{{phase, 0.0}, {0.0, phase * std::polar(1.0, two_pi * mod_rational(h, 1).to_double())}}};
    auto mul = [](const M2& a, const M2& b) {
        M2 r{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        return r;
    };
    auto near_identity = [&](const M2& m) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (std::abs(m[i][j] - cd(i == j ? 1.0 : 0.0)) > tolerance) return false;
        return true;
    };
    const M2 st = mul(s, t);
    return near_identity(mul(s, s)) && near_identity(mul(mul(st, st), st));
}

}  // namespace extremal
