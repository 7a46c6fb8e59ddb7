#include "extremal/classify.hpp"

#include "extremal/bounds.hpp"
#include "extremal/charser.hpp"

#include <algorithm>

namespace extremal {

std::vector<Candidate> candidates(CategoryId id) {
    const CExtremes range = c_extremes(id);
    std::vector<Candidate> out;
    for (int k = 0; k < 3; ++k) {
        const Seed& s = seed(id, k);
        // First c = s.c + 24t with c >= c_min.
        long t = ((range.c_min - s.c) / 24).ceil().get_si();
        ChiState state = iterate(s.chi, s.h, t);
        for (Rational c = s.c + Rational(24) * Rational(t); c <= range.c_max; c += 24) {
            out.push_back({c, state.chi, state.h});
            state = f_plus(state.chi, state.h);
        }
    }
    return out;
}

bool first_column_admissible(const CharMatrix& m) {
    return m.x.is_integer() && m.x.sign() >= 0 && m.z.is_integer() && m.z.sign() >= 0;
}

std::vector<CandidateVerdict> sweep(int order) {
    std::vector<CandidateVerdict> out;
    for (CategoryId id : kAllCategories) {
        for (auto& cand : candidates(id)) {
            const bool constant_ok = first_column_admissible(cand.chi);
            const CharacterVector v = character_vector(expand(make_genus(id, cand.c), cand.chi, order));
            out.push_back({id, std::move(cand), constant_ok, v.all_nonnegative_integers()});
        }
    }
    return out;
}

namespace {

std::string_view realization_for(CategoryId id, const Rational& c) {
    for (const auto& g : golden_genera())
        if (g.category == id && g.c == c) return g.realization;
    return "unknown";
}

std::vector<ClassificationRow> rows_for(CategoryId id, int order) {
    std::vector<ClassificationRow> rows;
    for (auto& cand : candidates(id)) {
        if (!first_column_admissible(cand.chi)) continue;
        const Genus g = make_genus(id, cand.c);
        if (!character_vector(expand(g, cand.chi, order)).all_nonnegative_integers()) continue;
        rows.push_back({id, cand.c, cand.h_ext, g.ell.numerator().get_si(), cand.chi,
                        std::string(realization_for(id, cand.c))});
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.c < b.c; });
    return rows;
}

}  // namespace

std::vector<ClassificationRow> classify_category(CategoryId id, int order) { return rows_for(id, order); }

std::vector<ClassificationRow> classify_all(int order) {
    std::vector<ClassificationRow> rows;
    for (CategoryId id : kAllCategories) {
        auto part = rows_for(id, order);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

std::span<const GoldenGenus> golden_genera() {
    using C = CategoryId;
    static const std::vector<GoldenGenus> rows = {
        {C::semion, 1, Rational(1, 4), 0, "A_{1,1}"},
        {C::semion, 9, Rational(1, 4), 4, "A_{1,1} x E_{8,1}"},
        {C::semion, 17, Rational(5, 4), 2, "coset (GHM)"},
        {C::semion, 33, Rational(9, 4), 4, "new (c=33 construction)"},
        {C::semion_bar, 7, Rational(3, 4), 0, "E_{7,1}"},
        {C::semion_bar, 15, Rational(3, 4), 4, "E_{7,1} x E_{8,1}"},
        {C::semion_bar, 23, Rational(7, 4), 2, "coset (GHM)"},
        {C::fib, Rational(14, 5), Rational(2, 5), 0, "G_{2,1}"},
        {C::fib, Rational(54, 5), Rational(2, 5), 4, "G_{2,1} x E_{8,1}"},
        {C::fib, Rational(94, 5), Rational(7, 5), 2, "coset (GHM)"},
        {C::fib_bar, Rational(26, 5), Rational(3, 5), 0, "F_{4,1}"},
        {C::fib_bar, Rational(66, 5), Rational(3, 5), 4, "F_{4,1} x E_{8,1}"},
        {C::fib_bar, Rational(106, 5), Rational(8, 5), 2, "coset (GHM)"},
        {C::yang_lee, Rational(-22, 5), Rational(-1, 5), 0, "Yang-Lee"},
        {C::yang_lee, Rational(18, 5), Rational(-1, 5), 4, "Yang-Lee x E_{8,1}"},
    };
    return rows;
}

bool matches_golden(std::span<const ClassificationRow> rows) {
    const auto golden = golden_genera();
    if (rows.size() != golden.size()) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        const auto& g = golden[i];
        if (r.category != g.category || r.c != g.c || r.h_ext != g.h_ext || r.ell != g.ell) return false;
    }
    return true;
}

}  // namespace extremal
