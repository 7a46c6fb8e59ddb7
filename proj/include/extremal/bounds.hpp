#pragma once

// Effective central-charge bounds. Every threshold is decided by exact
// rational comparison; square roots only ever appear in the reported
// floating-point approximation of a threshold.

#include "extremal/chimat.hpp"
#include "extremal/genus.hpp"

#include <array>

namespace extremal {

enum class Direction { positive, negative };

struct BoundReport {
    CategoryId category;
    int class_index;
    Rational class_rep_c;
    CharMatrix chi;
    Rational h;
    long n_max;
    Direction direction;
    // negative: the exact threshold |alpha - 120(1-h)|(1-h)/860.
    // positive: M = x + w - 240(h-1); the threshold is (|M| + sqrt(radicand))/480.
    Rational threshold_witness;
    Rational threshold_radicand;  // positive only

    double threshold() const;
};

/// Smallest n_max >= 0 with n > (|M| + sqrt(M^2 + 960|(h-1)x|))/480 for all n > n_max.
/// Throws when h <= 0.
long nmax_positive(const CharMatrix& m, const Rational& h);

/// Smallest n_max >= 0 with -240n^2 + Mn + (h-1)x < 0 for all n > n_max.
/// Never larger than nmax_positive.
long nmax_positive_sharp(const CharMatrix& m, const Rational& h);

/// -240n^2 + Mn + (h-1)x, whose sign is the sign of chi(c+24n)_00 when h > 0.
Rational plus_quadratic(const CharMatrix& m, const Rational& h, const Rational& n);

/// Smallest n_max >= 0 with 860n > |alpha - 120(1-h)|(1-h) for all n > n_max.
/// Requires h < 0, beta > 1 and |chi_10| <= 1.
long nmax_negative(const CharMatrix& m, const Rational& h);

/// Walks f_minus from the tabulated seed until h < 0, beta > 1 and |chi_10| <= 1.
Seed negative_base_point(CategoryId id, int class_index);

BoundReport positive_report(CategoryId id, int class_index);
BoundReport negative_report(CategoryId id, int class_index);

struct CExtremes {
    Rational c_min;
    Rational c_max;
    friend bool operator==(const CExtremes&, const CExtremes&) = default;
};

CExtremes c_extremes(CategoryId id);

/// A n^2 > 2B(1 + C^2), the sufficient condition for A n^4 > B(n + C)^2.
/// Requires A, B > 0, C >= 0 and n >= 1.
bool silly_estimate_holds(const Rational& A, const Rational& B, const Rational& C, const Rational& n);

}  // namespace extremal
