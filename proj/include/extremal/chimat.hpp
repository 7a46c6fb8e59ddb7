#pragma once

// Characteristic matrices and the exact recurrences that move them between
// central charges c and c +- 24.

#include "extremal/genus.hpp"
#include "extremal/rational.hpp"

#include <array>
#include <span>

namespace extremal {

/// Constant-term matrix [[x, y], [z, w]] of the fundamental matrix.
struct CharMatrix {
    Rational x;  // chi_00
    Rational y;  // chi_01
    Rational z;  // chi_10
    Rational w;  // chi_11

    friend bool operator==(const CharMatrix&, const CharMatrix&) = default;
};

struct ChiState {
    CharMatrix chi;
    Rational h;
    friend bool operator==(const ChiState&, const ChiState&) = default;
};

/// (alpha, beta) = (x - w, z*y).
struct AlphaBeta {
    Rational alpha;
    Rational beta;
    friend bool operator==(const AlphaBeta&, const AlphaBeta&) = default;
};

struct AlphaBetaState {
    AlphaBeta ab;
    Rational h;
    friend bool operator==(const AlphaBetaState&, const AlphaBetaState&) = default;
};

/// c -> c + 24. Requires z != 0, h not an integer, h not in {-1, -2}.
ChiState f_plus(const CharMatrix& m, const Rational& h);

/// c -> c - 24. Requires y != 0, h not an integer, h not in {3, 4}.
ChiState f_minus(const CharMatrix& m, const Rational& h);

/// |steps| applications of f_plus (steps > 0) or f_minus (steps < 0).
ChiState iterate(const CharMatrix& m, const Rational& h, long steps);

struct Diagonal {
    Rational x;
    Rational w;
    Rational h;
    friend bool operator==(const Diagonal&, const Diagonal&) = default;
};

/// Diagonal restriction of f_plus.
Diagonal g_step(const Rational& x, const Rational& w, const Rational& h);
/// Closed form of the n-fold iterate of g_step (n >= 0).
Diagonal g_closed(const Rational& x, const Rational& w, const Rational& h, long n);

AlphaBeta alpha_beta(const CharMatrix& m);

/// Evolution of (alpha, beta) under c -> c - 24.
AlphaBetaState k_step(const AlphaBeta& ab, const Rational& h);
/// Closed form of the n-fold iterate of k_step (n >= 0).
AlphaBetaState k_closed(const AlphaBeta& ab, const Rational& h, long n);

struct Seed {
    CategoryId category;
    int class_index;
    Rational c;
    CharMatrix chi;
    Rational h;
};

/// Tabulated characteristic matrix for one residue class of c mod 24.
const Seed& seed(CategoryId id, int class_index);
std::span<const Seed> all_seeds();

/// Seed for the residue class of c, iterated to c.
ChiState chi_at(CategoryId id, const Rational& c);

}  // namespace extremal
