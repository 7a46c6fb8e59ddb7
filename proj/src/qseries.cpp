#include "extremal/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace extremal {

QSeries::QSeries(int lead, std::vector<Rational> coeffs) : lead_(lead), coeffs_(std::move(coeffs)) {}

QSeries QSeries::monomial(int power, const Rational& coeff, int trunc) {
    if (trunc <= power) return QSeries(power, {});
    std::vector<Rational> c(static_cast<std::size_t>(trunc - power));
    c[0] = coeff;
    return QSeries(power, std::move(c));
}

Rational QSeries::coeff(int power) const {
    if (power >= trunc())
        throw std::out_of_range("coefficient of q^" + std::to_string(power) +
                                " is beyond truncation q^" + std::to_string(trunc()));
    if (power < lead_) return Rational(0);
    return coeffs_[static_cast<std::size_t>(power - lead_)];
}

QSeries QSeries::truncated(int new_trunc) const {
    const int t = std::max(lead_, std::min(new_trunc, trunc()));
    return QSeries(lead_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + (t - lead_)));
}

QSeries QSeries::scaled(const Rational& factor) const {
    QSeries r = *this;
    for (auto& c : r.coeffs_) c *= factor;
    return r;
}

QSeries QSeries::shifted(int k) const {
    QSeries r = *this;
    r.lead_ += k;
    return r;
}

QSeries series_arith(const QSeries& a, const QSeries& b, SeriesOp op) {
    if (op == SeriesOp::mul) {
        const int lead = a.lead() + b.lead();
        const int trunc = std::max(lead, std::min(a.lead() + b.trunc(), b.lead() + a.trunc()));
        std::vector<Rational> c(static_cast<std::size_t>(trunc - lead));
        const auto& ac = a.coeffs();
        const auto& bc = b.coeffs();
        for (std::size_t i = 0; i < ac.size() && i < c.size(); ++i) {
            if (ac[i].is_zero()) continue;
            for (std::size_t j = 0; j < bc.size() && i + j < c.size(); ++j) c[i + j] += ac[i] * bc[j];
        }
        return QSeries(lead, std::move(c));
    }
    const int trunc = std::min(a.trunc(), b.trunc());
    const int lead = std::min(a.lead(), b.lead());
    if (trunc <= lead) return QSeries(lead, {});
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(trunc - lead));
    for (int p = lead; p < trunc; ++p)
        c.push_back(op == SeriesOp::add ? a.coeff(p) + b.coeff(p) : a.coeff(p) - b.coeff(p));
    return QSeries(lead, std::move(c));
}

QSeries series_invert(const QSeries& a) {
    const auto& ac = a.coeffs();
    if (ac.empty() || ac[0].is_zero()) throw std::domain_error("not invertible");
    // Relative precision is preserved: a = q^L (a0 + ...) known to q^T gives
    // T - L trusted coefficients of the inverse starting at q^-L.
    const std::size_t n = ac.size();
    std::vector<Rational> r(n);
    const Rational inv0 = Rational(1) / ac[0];
    r[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Rational s;
        for (std::size_t i = 1; i <= k; ++i) s += ac[i] * r[k - i];
        r[k] = -s * inv0;
    }
    return QSeries(-a.lead(), std::move(r));
}

Integer divisor_sum(unsigned k, unsigned n) {
    Integer s = 0;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), d, k);
        s += p;
    }
    return s;
}

QSeries eisenstein(int weight, int n_terms) {
    if (weight != 4 && weight != 6) throw std::invalid_argument("eisenstein: weight must be 4 or 6");
    if (n_terms < 1) throw std::invalid_argument("eisenstein: n_terms must be >= 1");
    const long scale = weight == 4 ? 240 : -504;
    const unsigned power = weight == 4 ? 3 : 5;
    std::vector<Rational> c(static_cast<std::size_t>(n_terms));
    c[0] = 1;
    for (int n = 1; n < n_terms; ++n)
        c[static_cast<std::size_t>(n)] = Rational(Integer(Integer(scale) * divisor_sum(power, static_cast<unsigned>(n))));
    return QSeries(0, std::move(c));
}

QSeries discriminant(int n_terms) {
    if (n_terms < 2) throw std::invalid_argument("discriminant: n_terms must be >= 2");
    const QSeries e4 = eisenstein(4, n_terms);
    const QSeries e6 = eisenstein(6, n_terms);
    QSeries d = (e4 * e4 * e4 - e6 * e6).scaled(Rational(1, 1728));
    if (!d.coeff(0).is_zero()) throw std::logic_error("discriminant has a constant term");
    std::vector<Rational> c(d.coeffs().begin() + 1, d.coeffs().end());
    return QSeries(1, std::move(c));
}

JAndScriptE j_and_script_e(int n_terms) {
    if (n_terms < 2) throw std::invalid_argument("j_and_script_e: n_terms must be >= 2");
    // Delta^-1 starts at q^-1 and loses one power of relative precision.
    const int t = n_terms + 1;
    const QSeries e4 = eisenstein(4, t);
    const QSeries e6 = eisenstein(6, t);
    const QSeries inv_delta = series_invert(discriminant(t));
    QSeries j = e4 * e4 * e4 * inv_delta - QSeries::monomial(0, Rational(744), t);
    QSeries e = e4 * e6 * inv_delta;
    return {j.truncated(n_terms - 1), e.truncated(n_terms - 1)};
}

}  // namespace extremal
