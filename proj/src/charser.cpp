#include "extremal/charser.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace extremal {

OdeSeries ode_series(int order) {
    if (order < 0) throw std::invalid_argument("ode_series: order must be >= 0");
    const auto [j, e] = j_and_script_e(order + 3);
    const QSeries inv_e = series_invert(e);
    const QSeries a = (j - QSeries::monomial(0, Rational(240), j.trunc())) * inv_e;
    OdeSeries r;
    for (int n = 0; n <= order; ++n) {
        r.a.push_back(a.coeff(n));
        r.b.push_back(inv_e.coeff(n));
    }
    return r;
}

std::vector<Mat2> d_coefficients(const Genus& g, const CharMatrix& m, int order) {
    if (order < 1) throw std::invalid_argument("d_coefficients: order must be >= 1");
    const OdeSeries s = ode_series(order);
    const std::array<Rational, 2> lambda = {g.lambda0, g.lambda1};
    const Mat2 chi = {{{m.x, m.y}, {m.z, m.w}}};
    std::vector<Mat2> d(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        const auto k = static_cast<std::size_t>(n);
        for (int i = 0; i < 2; ++i)
            for (int jj = 0; jj < 2; ++jj) {
                Rational v = s.b[k] * chi[i][jj] * (Rational(1) + lambda[i] - lambda[jj]);
                if (i == jj) v += s.a[k] * (lambda[i] - 1);
                d[k][i][jj] = v;
            }
    }
    return d;
}

FundamentalExpansion expand(const Genus& g, const CharMatrix& m, int order) {
    if (order < 1) throw std::invalid_argument("expand: order must be >= 1");
    if (g.h_ext.is_integer()) throw std::domain_error("expand: h_ext must not be an integer");
    // D_{n+1} is needed for X[n], so one extra term.
    const std::vector<Mat2> d = d_coefficients(g, m, order + 1);
    const std::array<Rational, 2> lambda = {g.lambda0, g.lambda1};

    FundamentalExpansion e{g, m, {}};
    e.coeffs.reserve(static_cast<std::size_t>(order) + 2);
    e.coeffs.push_back(Mat2{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}});
    e.coeffs.push_back(Mat2{{{m.x, m.y}, {m.z, m.w}}});

    // sum_{m=-1}^{n-1} X[m] D_{n-m}, entry (i, j).
    auto rhs = [&](int n, int i, int j) {
        Rational s;
        for (int mm = -1; mm <= n - 1; ++mm) {
            const Mat2& x = e.at(mm);
            const Mat2& dk = d[static_cast<std::size_t>(n - mm)];
            s += x[i][0] * dk[0][j] + x[i][1] * dk[1][j];
        }
        return s;
    };

    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if ((lambda[i] - lambda[j] + 1) * e.at(0)[i][j] != rhs(0, i, j))
                throw std::domain_error("chi inconsistent with ODE");

    for (int n = 1; n <= order; ++n) {
        Mat2 next;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const Rational den = lambda[i] - lambda[j] + Rational(n + 1);
                if (den.is_zero()) throw std::domain_error("expand: vanishing denominator");
                next[i][j] = rhs(n, i, j) / den;
            }
        e.coeffs.push_back(std::move(next));
    }
    return e;
}

bool GradedSeries::all_nonnegative_integers() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& r) { return r.is_integer() && r.sign() >= 0; });
}

CharacterVector character_vector(const FundamentalExpansion& e) {
    CharacterVector v;
    v.vacuum.exponent = -e.genus.c / 24;
    v.module.exponent = e.genus.h_ext - e.genus.c / 24;
    v.vacuum.coeffs.push_back(Rational(1));
    for (int n = 0; n <= e.order(); ++n) {
        v.vacuum.coeffs.push_back(e.at(n)[0][0]);
        v.module.coeffs.push_back(e.at(n)[1][0]);
    }
    return v;
}

CharacterVector character_for(CategoryId id, const Rational& c, int order) {
    const Genus g = make_genus(id, c);
    return character_vector(expand(g, chi_at(id, c).chi, order));
}

namespace {

// Integer offset of `part` above `base`; throws unless it is a non-negative integer.
std::size_t offset_above(const Rational& part, const Rational& base) {
    const Rational d = part - base;
    if (!d.is_integer() || d.sign() < 0) throw std::invalid_argument("incompatible exponents");
    return static_cast<std::size_t>(d.numerator().get_ui());
}

}  // namespace

GradedSeries graded_sum(std::span<const GradedSeries> parts) {
    if (parts.empty()) return {};
    Rational base = parts.front().exponent;
    for (const auto& p : parts)
        if (p.exponent < base) base = p.exponent;
    std::size_t known = SIZE_MAX;
    for (const auto& p : parts) known = std::min(known, offset_above(p.exponent, base) + p.coeffs.size());
    GradedSeries r{base, std::vector<Rational>(known)};
    for (const auto& p : parts) {
        const std::size_t off = offset_above(p.exponent, base);
        for (std::size_t k = 0; k < p.coeffs.size() && off + k < known; ++k) r.coeffs[off + k] += p.coeffs[k];
    }
    return r;
}

GradedSeries graded_product(const GradedSeries& a, const GradedSeries& b) {
    const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
    GradedSeries r{a.exponent + b.exponent, std::vector<Rational>(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return r;
}

bool holomorphic_sum_check(std::span<const GradedSeries> parts, const GradedSeries& target) {
    std::size_t known = target.coeffs.size();
    for (const auto& p : parts) known = std::min(known, offset_above(p.exponent, target.exponent) + p.coeffs.size());
    std::vector<Rational> sum(known);
    for (const auto& p : parts) {
        const std::size_t off = offset_above(p.exponent, target.exponent);
        for (std::size_t k = 0; k < p.coeffs.size() && off + k < known; ++k) sum[off + k] += p.coeffs[k];
    }
    for (std::size_t k = 0; k < known; ++k)
        if (sum[k] != target.coeffs[k]) return false;
    return true;
}

const CosetData& coset_data() {
    static const CosetData data = [] {
        const Rational base(-32, 24);
        auto s = [&](Rational shift, std::vector<Rational> c) { return GradedSeries{base + shift, std::move(c)}; };
        return CosetData{
            s(0, {1, 0, 69616, 34668544}),
            s(Rational(9, 4), {426192, 121366368}),
            s(Rational(7, 4), {10245, 11330970}),
            s(2, {69888, 34664448}),
            s(0, {1, 0, 139504, 69332992}),
        };
    }();
    return data;
}

BranchingDiagnostic branching_diagnostic() {
    const CharacterVector a11 = character_for(CategoryId::semion, Rational(1));
    const CosetData& coset = coset_data();
    const GradedSeries terms[] = {graded_product(coset.vacuum, a11.vacuum),
                                  graded_product(coset.weight_7_4, a11.module)};
    BranchingDiagnostic r;
    r.predicted = graded_sum(terms);
    r.computed = character_for(CategoryId::semion, Rational(33)).vacuum;
    r.agrees = r.predicted.exponent == r.computed.exponent;
    for (std::size_t k = 0; r.agrees && k < r.predicted.coeffs.size() && k < r.computed.coeffs.size(); ++k)
        r.agrees = r.predicted.coeffs[k] == r.computed.coeffs[k];
    return r;
}

}  // namespace extremal
