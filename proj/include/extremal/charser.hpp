#pragma once

// q-expansions of the fundamental matrix from its characteristic matrix.
//
// Writing q^-Lambda Xi = sum_{n >= -1} X[n] q^n, the differential equation
// q dXi/dq = Xi D with D = sum_k D_k q^k becomes, entrywise,
//
//   (lambda_i - lambda_j + n + 1) X[n]_ij = sum_{m=-1}^{n-1} (X[m] D_{n-m})_ij,
//
// which is triangular in n once X[-1] = I and X[0] = chi are fixed.

#include "extremal/chimat.hpp"
#include "extremal/genus.hpp"
#include "extremal/qseries.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace extremal {

using Mat2 = std::array<std::array<Rational, 2>, 2>;

/// a = (J - 240)/E and b = 1/E as coefficient lists for q^0 .. q^order.
struct OdeSeries {
    std::vector<Rational> a;
    std::vector<Rational> b;
};

OdeSeries ode_series(int order);

/// D_0 .. D_order with D_n = a_n (Lambda - I) + b_n (chi + [Lambda, chi]).
std::vector<Mat2> d_coefficients(const Genus& g, const CharMatrix& m, int order);

struct FundamentalExpansion {
    Genus genus;
    CharMatrix chi;
    std::vector<Mat2> coeffs;  // coeffs[k] = X[k - 1]

    int order() const { return static_cast<int>(coeffs.size()) - 2; }
    /// X[n] for -1 <= n <= order().
    const Mat2& at(int n) const { return coeffs.at(static_cast<std::size_t>(n + 1)); }
};

FundamentalExpansion expand(const Genus& g, const CharMatrix& m, int order = kDefaultOrder);

/// q^exponent * sum_k coeffs[k] q^k.
struct GradedSeries {
    Rational exponent;
    std::vector<Rational> coeffs;

    bool all_nonnegative_integers() const;
};

struct CharacterVector {
    GradedSeries vacuum;  // exponent -c/24, leading coefficient 1
    GradedSeries module;  // exponent h_ext - c/24

    bool all_nonnegative_integers() const {
        return vacuum.all_nonnegative_integers() && module.all_nonnegative_integers();
    }
};

CharacterVector character_vector(const FundamentalExpansion& e);

/// Convenience: chi from the tabulated seeds, then expand.
CharacterVector character_for(CategoryId id, const Rational& c, int order = kDefaultOrder);

GradedSeries graded_sum(std::span<const GradedSeries> parts);
GradedSeries graded_product(const GradedSeries& a, const GradedSeries& b);

/// True iff the coefficient-wise sum of parts equals target wherever every
/// operand is known. Part exponents must sit an integer >= 0 above target's.
bool holomorphic_sum_check(std::span<const GradedSeries> parts, const GradedSeries& target);

/// Character data of the weight-one coset of the c = 33 extremal VOA and of
/// its holomorphic extension, as printed (exponents relative to q^0).
struct CosetData {
    GradedSeries vacuum;       // weight 0
    GradedSeries weight_9_4;   // weight 9/4
    GradedSeries weight_7_4;   // weight 7/4
    GradedSeries weight_2;     // weight 2
    GradedSeries extension;    // holomorphic c = 32 extension
};

const CosetData& coset_data();

/// Naive A_{1,1} branching (0 <-> vacuum, 7/4 <-> spin) against the computed
/// c = 33 vacuum character. Reported only; the two need not agree.
struct BranchingDiagnostic {
    GradedSeries predicted;
    GradedSeries computed;
    bool agrees = false;
};

BranchingDiagnostic branching_diagnostic();

}  // namespace extremal
