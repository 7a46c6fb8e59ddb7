#include "extremal/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace extremal {

namespace {

Rational linear_coefficient(const CharMatrix& m, const Rational& h) { return m.x + m.w - Rational(240) * (h - 1); }

Rational positive_radicand(const CharMatrix& m, const Rational& h) {
    const Rational M = linear_coefficient(m, h);
    return M * M + Rational(960) * ((h - 1) * m.x).abs();
}

Rational negative_threshold(const AlphaBeta& ab, const Rational& h) {
    const Rational one_minus_h = Rational(1) - h;
    return (ab.alpha - Rational(120) * one_minus_h).abs() * one_minus_h / 860;
}

}  // namespace

double BoundReport::threshold() const {
    if (direction == Direction::negative) return threshold_witness.to_double();
    return (std::fabs(threshold_witness.to_double()) + std::sqrt(threshold_radicand.to_double())) / 480.0;
}

Rational plus_quadratic(const CharMatrix& m, const Rational& h, const Rational& n) {
    return Rational(-240) * n * n + linear_coefficient(m, h) * n + (h - 1) * m.x;
}

long nmax_positive(const CharMatrix& m, const Rational& h) {
    if (h.sign() <= 0) throw std::domain_error("bound requires h_ext > 0");
    const Rational abs_m = linear_coefficient(m, h).abs();
    const Rational radicand = positive_radicand(m, h);
    // n > (|M| + sqrt(R))/480  <=>  480n - |M| > 0 and (480n - |M|)^2 > R.
    auto beyond = [&](long n) {
        const Rational d = Rational(480) * Rational(n) - abs_m;
        return d.sign() > 0 && d * d > radicand;
    };
    long n_max = 0;
    while (!beyond(n_max + 1)) ++n_max;
    return n_max;
}

long nmax_positive_sharp(const CharMatrix& m, const Rational& h) {
    if (h.sign() <= 0) throw std::domain_error("bound requires h_ext > 0");
    // Concave quadratic: past the vertex it only decreases.
    const Rational vertex = linear_coefficient(m, h) / 480;
    long last_nonneg = 0;
    for (long n = 1;; ++n) {
        const bool past_vertex = Rational(n) > vertex;
        const bool nonneg = plus_quadratic(m, h, Rational(n)).sign() >= 0;
        if (nonneg) last_nonneg = n;
        if (past_vertex && !nonneg) break;
    }
    return last_nonneg;
}

long nmax_negative(const CharMatrix& m, const Rational& h) {
    if (h.sign() >= 0) throw std::domain_error("bound requires h_ext < 0");
    const AlphaBeta ab = alpha_beta(m);
    if (!(ab.beta > 1)) throw std::domain_error("bound requires beta > 1");
    if (m.z.abs() > 1) throw std::domain_error("bound requires |chi_10| <= 1");
    // The smallest n_max with n_max + 1 > T is floor(T).
    return negative_threshold(ab, h).floor().get_si();
}

Seed negative_base_point(CategoryId id, int class_index) {
    const Seed& start = seed(id, class_index);
    ChiState s{start.chi, start.h};
    Rational c = start.c;
    for (int step = 0; step < 16; ++step) {
        const AlphaBeta ab = alpha_beta(s.chi);
        if (s.h.sign() < 0 && ab.beta > 1 && s.chi.z.abs() <= 1) return {id, class_index, c, s.chi, s.h};
        s = f_minus(s.chi, s.h);
        c -= 24;
    }
    throw std::runtime_error("negative base point not reached");
}

BoundReport positive_report(CategoryId id, int class_index) {
    const Seed& s = seed(id, class_index);
    return {id,
            class_index,
            s.c,
            s.chi,
            s.h,
            nmax_positive(s.chi, s.h),
            Direction::positive,
            linear_coefficient(s.chi, s.h),
            positive_radicand(s.chi, s.h)};
}

BoundReport negative_report(CategoryId id, int class_index) {
    const Seed s = negative_base_point(id, class_index);
    return {id,
            class_index,
            s.c,
            s.chi,
            s.h,
            nmax_negative(s.chi, s.h),
            Direction::negative,
            negative_threshold(alpha_beta(s.chi), s.h),
            Rational(0)};
}

CExtremes c_extremes(CategoryId id) {
    CExtremes r;
    for (int k = 0; k < 3; ++k) {
        const BoundReport pos = positive_report(id, k);
        const BoundReport neg = negative_report(id, k);
        const Rational hi = pos.class_rep_c + Rational(24) * Rational(pos.n_max);
        const Rational lo = neg.class_rep_c - Rational(24) * Rational(neg.n_max);
        if (k == 0 || hi > r.c_max) r.c_max = hi;
        if (k == 0 || lo < r.c_min) r.c_min = lo;
    }
    return r;
}

bool silly_estimate_holds(const Rational& A, const Rational& B, const Rational& C, const Rational& n) {
    if (A.sign() <= 0 || B.sign() <= 0 || C.sign() < 0 || n < 1)
        throw std::invalid_argument("silly_estimate_holds: requires A, B > 0, C >= 0 and n >= 1");
    return A * n * n > Rational(2) * B * (Rational(1) + C * C);
}

}  // namespace extremal
