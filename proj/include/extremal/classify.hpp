#pragma once

// Enumeration of every admissible genus inside [c_min, c_max] and the
// integrality filter that leaves the extremal character vectors.

#include "extremal/chimat.hpp"
#include "extremal/genus.hpp"
#include "extremal/qseries.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace extremal {

struct Candidate {
    Rational c;
    CharMatrix chi;
    Rational h_ext;
};

/// All admissible c in [c_min, c_max], by residue class then ascending c.
std::vector<Candidate> candidates(CategoryId id);

/// chi_00 and chi_10 are non-negative integers.
bool first_column_admissible(const CharMatrix& m);

struct CandidateVerdict {
    CategoryId category;
    Candidate candidate;
    bool constant_terms_ok;  // first_column_admissible
    bool expansion_ok;       // whole first column through `order` is non-negative integral
};

/// Both filters evaluated for every candidate of every category.
std::vector<CandidateVerdict> sweep(int order = kDefaultOrder);

struct ClassificationRow {
    CategoryId category;
    Rational c;
    Rational h_ext;
    long ell;
    CharMatrix chi;
    std::string realization_note;
};

/// Surviving genera, in catalog order then ascending c.
std::vector<ClassificationRow> classify_all(int order = kDefaultOrder);
std::vector<ClassificationRow> classify_category(CategoryId id, int order = kDefaultOrder);

struct GoldenGenus {
    CategoryId category;
    Rational c;
    Rational h_ext;
    long ell;
    std::string_view realization;
};

/// The expected fifteen extremal genera.
std::span<const GoldenGenus> golden_genera();

/// Field-for-field comparison of (category, c, h_ext, ell) against golden_genera().
bool matches_golden(std::span<const ClassificationRow> rows);

}  // namespace extremal
