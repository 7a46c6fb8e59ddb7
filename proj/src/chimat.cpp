#include "extremal/chimat.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace extremal {

namespace {

void require_non_integer(const Rational& h, const char* op) {
    if (h.is_integer()) throw std::domain_error(std::string(op) + ": h must not be an integer");
}

const Rational kE(746496);  // 864^2

}  // namespace

ChiState f_plus(const CharMatrix& m, const Rational& h) {
    require_non_integer(h, "f_plus");
    if (m.z.is_zero()) throw std::domain_error("not in M-");
    if (h == -1 || h == -2) throw std::domain_error("f_plus: h must not be -1 or -2");
    const auto& [x, y, z, w] = m;
    const Rational h1 = h + 1;
    const Rational h1sq = h1 * h1;
    const Rational shift = x - w + Rational(120) * (h - 1);
    CharMatrix r;
    r.x = (w + h * (x - 240)) / h1;
    r.y = Rational(1) / z;
    r.z = (h1sq * (h - 2) * y * z - shift * shift + kE * h1sq) / ((h + 2) * h1sq) * z;
    r.w = (x + h * (w + 240)) / h1;
    return {r, h + 2};
}

ChiState f_minus(const CharMatrix& m, const Rational& h) {
    require_non_integer(h, "f_minus");
    if (m.y.is_zero()) throw std::domain_error("not in M+");
    if (h == 3 || h == 4) throw std::domain_error("f_minus: h must not be 3 or 4");
    const auto& [x, y, z, w] = m;
    const Rational h3 = h - 3;
    const Rational h3sq = h3 * h3;
    const Rational shift = x - w + Rational(120) * (h - 1);
    CharMatrix r;
    r.x = (-w + (h - 2) * (x + 240)) / h3;
    r.y = (h * h3sq * y * z + shift * shift - kE * h3sq) / ((h - 4) * h3sq) * y;
    r.z = Rational(1) / y;
    r.w = (-x + (h - 2) * (w - 240)) / h3;
    return {r, h - 2};
}

ChiState iterate(const CharMatrix& m, const Rational& h, long steps) {
    ChiState s{m, h};
    for (long i = 0; i < steps; ++i) s = f_plus(s.chi, s.h);
    for (long i = 0; i > steps; --i) s = f_minus(s.chi, s.h);
    return s;
}

Diagonal g_step(const Rational& x, const Rational& w, const Rational& h) {
    require_non_integer(h, "g_step");
    const Rational h1 = h + 1;
    return {(w + h * (x - 240)) / h1, (x + h * (w + 240)) / h1, h + 2};
}

Diagonal g_closed(const Rational& x, const Rational& w, const Rational& h, long n) {
    if (n < 0) throw std::invalid_argument("g_closed: n must be >= 0");
    if (n == 0) return {x, w, h};
    require_non_integer(h, "g_closed");
    const Rational nn(n);
    const Rational a = h + nn - 1;
    const Rational den = h + Rational(2) * nn - 1;
    return {(nn * w + a * (x - Rational(240) * nn)) / den, (nn * x + a * (w + Rational(240) * nn)) / den,
            h + Rational(2) * nn};
}

AlphaBeta alpha_beta(const CharMatrix& m) { return {m.x - m.w, m.z * m.y}; }

AlphaBetaState k_step(const AlphaBeta& ab, const Rational& h) {
    require_non_integer(h, "k_step");
    const Rational h3 = h - 3;
    const Rational h3sq = h3 * h3;
    const Rational shift = ab.alpha + Rational(120) * (h - 1);
    return {{(ab.alpha * (h - 1) + Rational(480) * (h - 2)) / h3,
             (h3sq * (h * ab.beta - kE) + shift * shift) / ((h - 4) * h3sq)},
            h - 2};
}

AlphaBetaState k_closed(const AlphaBeta& ab, const Rational& h, long n) {
    if (n < 0) throw std::invalid_argument("k_closed: n must be >= 0");
    if (n == 0) return {ab, h};
    require_non_integer(h, "k_closed");
    const Rational nn(n);
    const Rational a = h - nn - 1;
    const Rational d0 = h - Rational(2) * nn;
    const Rational d1 = d0 - 1;
    const Rational d2 = d0 - 2;
    const Rational shift = ab.alpha + Rational(120) * (h - 1);
    const Rational alpha = (ab.alpha * (h - 1) + Rational(480) * nn * a) / d1;
    const Rational beta = nn * a * shift * shift / (d0 * d1 * d1 * d2) +
                          (h * (h - 2) * ab.beta - kE * nn * a) / (d0 * d2);
    return {{alpha, beta}, d0};
}

std::span<const Seed> all_seeds() {
    using C = CategoryId;
    auto s = [](C id, int k, Rational c, long x, long y, long z, long w, Rational h) {
        return Seed{id, k, c, {x, y, z, w}, h};
    };
    static const std::vector<Seed> seeds = {
        s(C::semion, 0, 1, 3, 26752, 2, -247, Rational(1, 4)),
        s(C::semion, 1, 9, 251, 26752, 2, 1, Rational(1, 4)),
        s(C::semion, 2, 17, 323, 88, 1632, -319, Rational(5, 4)),
        s(C::semion_bar, 0, 7, 133, 1248, 56, -377, Rational(3, 4)),
        s(C::semion_bar, 1, 15, 381, 1248, 56, -129, Rational(3, 4)),
        s(C::semion_bar, 2, 23, 69, 10, 32384, -65, Rational(7, 4)),
        s(C::semion_dagger, 0, 11, -319, 1632, 88, 323, Rational(3, 4)),
        s(C::semion_dagger, 1, 19, -247, 2, 26752, 3, Rational(7, 4)),
        s(C::semion_dagger, 2, 27, 1, 2, 26752, 251, Rational(7, 4)),
        s(C::semion_bar_dagger, 0, 5, -65, 32384, 10, 69, Rational(1, 4)),
        s(C::semion_bar_dagger, 1, 13, -377, 56, 1248, 133, Rational(5, 4)),
        s(C::semion_bar_dagger, 2, 21, -129, 56, 1248, 381, Rational(5, 4)),
        s(C::fib, 0, Rational(14, 5), 14, 12857, 7, -258, Rational(2, 5)),
        s(C::fib, 1, Rational(54, 5), 262, 12857, 7, -10, Rational(2, 5)),
        s(C::fib, 2, Rational(94, 5), 188, 46, 4794, -184, Rational(7, 5)),
        s(C::fib_bar, 0, Rational(26, 5), 52, 3774, 26, -296, Rational(3, 5)),
        s(C::fib_bar, 1, Rational(66, 5), 300, 3774, 26, -48, Rational(3, 5)),
        s(C::fib_bar, 2, Rational(106, 5), 106, 17, 15847, -102, Rational(8, 5)),
        s(C::yang_lee, 0, Rational(58, 5), -406, 902, 87, 410, Rational(4, 5)),
        s(C::yang_lee, 1, Rational(98, 5), -245, 1, 26999, 1, Rational(9, 5)),
        s(C::yang_lee, 2, Rational(138, 5), 3, 1, 26999, 249, Rational(9, 5)),
        s(C::yang_lee_bar, 0, Rational(22, 5), -55, 32509, 11, 59, Rational(1, 5)),
        s(C::yang_lee_bar, 1, Rational(62, 5), -434, 57, 682, 190, Rational(6, 5)),
        s(C::yang_lee_bar, 2, Rational(102, 5), -186, 57, 682, 438, Rational(6, 5)),
    };
    return seeds;
}

const Seed& seed(CategoryId id, int class_index) {
    if (class_index < 0 || class_index > 2) throw std::invalid_argument("seed: class_index must be 0, 1 or 2");
    return all_seeds()[static_cast<std::size_t>(id) * 3 + static_cast<std::size_t>(class_index)];
}

ChiState chi_at(CategoryId id, const Rational& c) {
    if (!is_admissible(id, c)) throw std::invalid_argument("c not in category's class mod 8");
    for (int k = 0; k < 3; ++k) {
        const Seed& s = seed(id, k);
        const Rational steps = (c - s.c) / 24;
        if (steps.is_integer()) return iterate(s.chi, s.h, steps.numerator().get_si());
    }
    throw std::logic_error("no seed for residue class");
}

}  // namespace extremal
