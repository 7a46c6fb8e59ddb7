#pragma once

// Truncated Laurent series in q with exact rational coefficients.
//
// A QSeries stores the coefficients of q^lead, q^(lead+1), ..., q^(trunc-1).
// Everything at or beyond trunc is unknown, and every operation propagates the
// first unknown power so that no result ever claims more precision than its
// inputs carry.

#include "extremal/rational.hpp"

#include <utility>
#include <vector>

namespace extremal {

/// Default number of q-powers computed beyond the leading term.
inline constexpr int kDefaultOrder = 8;

class QSeries {
public:
    QSeries() = default;
    QSeries(int lead, std::vector<Rational> coeffs);

    /// coeff * q^power, known up to (excluding) q^trunc.
    static QSeries monomial(int power, const Rational& coeff, int trunc);

    int lead() const { return lead_; }
    int trunc() const { return lead_ + static_cast<int>(coeffs_.size()); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of q^power; zero below lead, throws at or beyond trunc.
    Rational coeff(int power) const;

    QSeries truncated(int new_trunc) const;
    QSeries scaled(const Rational& factor) const;
    /// Multiplies by q^k.
    QSeries shifted(int k) const;

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    int lead_ = 0;
    std::vector<Rational> coeffs_;
};

enum class SeriesOp { add, sub, mul };

QSeries series_arith(const QSeries& a, const QSeries& b, SeriesOp op);
QSeries series_invert(const QSeries& a);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return series_arith(a, b, SeriesOp::add); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return series_arith(a, b, SeriesOp::sub); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return series_arith(a, b, SeriesOp::mul); }

/// sigma_k(n) by trial division.
Integer divisor_sum(unsigned k, unsigned n);

/// E4 or E6 with n_terms coefficients (q^0 .. q^(n_terms-1)).
QSeries eisenstein(int weight, int n_terms);

/// (E4^3 - E6^2)/1728 = q - 24q^2 + ..., known below q^n_terms.
QSeries discriminant(int n_terms);

struct JAndScriptE {
    QSeries j;         // E4^3/Delta - 744
    QSeries script_e;  // E4*E6/Delta
};

/// Both series carry n_terms coefficients starting at q^-1.
JAndScriptE j_and_script_e(int n_terms);

}  // namespace extremal
