#pragma once

// Binary linear codes of length <= 64 and the Reed-Muller computations that
// certify the c = 33 construction.
//
// Bit order: coordinate 1 is the leftmost printed symbol and the most
// significant bit of the packed word, so "0110 1100 1010 0000" has
// coordinates 2, 3, 5, 6, 9, 11 set.

#include "extremal/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace extremal::rm {

class Codeword {
public:
    Codeword() = default;
    Codeword(int length, std::uint64_t bits);

    static Codeword zeros(int length) { return Codeword(length, 0); }
    static Codeword ones(int length);
    /// Parses '0'/'1' symbols, ignoring spaces.
    static Codeword parse(std::string_view text);
    static Codeword concat(std::span<const Codeword> blocks);

    int length() const { return length_; }
    std::uint64_t bits() const { return bits_; }

    /// Coordinate i in [1, length].
    bool get(int i) const;
    void set(int i, bool value = true);

    int weight() const;
    Codeword complement() const;
    /// Block k in [0, length/width) of the given width, leftmost first.
    Codeword block(int k, int width) const;

    /// Space-separated groups of four, as printed.
    std::string to_string() const;

    friend Codeword operator+(const Codeword& a, const Codeword& b);
    /// Pointwise product.
    friend Codeword operator*(const Codeword& a, const Codeword& b);
    friend bool operator==(const Codeword&, const Codeword&) = default;
    friend auto operator<=>(const Codeword&, const Codeword&) = default;

private:
    int length_ = 0;
    std::uint64_t bits_ = 0;
};

/// Standard inner product over GF(2).
bool inner(const Codeword& a, const Codeword& b);

using WeightEnumerator = std::map<int, std::uint64_t>;

class LinearCode {
public:
    LinearCode() = default;
    /// Span of the generators; dependent generators are dropped.
    LinearCode(int length, std::span<const Codeword> generators);

    int length() const { return length_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    /// Independent basis in reduced echelon form.
    std::vector<Codeword> basis() const;

    bool contains(const Codeword& w) const;
    LinearCode dual() const;
    /// All 2^dim codewords; dim must be <= 20.
    std::vector<Codeword> codewords() const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.length_ == b.length_ && a.rows_ == b.rows_; }

private:
    std::uint64_t reduce(std::uint64_t w) const;

    int length_ = 0;
    std::vector<std::uint64_t> rows_;  // RREF, distinct pivots, descending
};

inline constexpr int kMaxEnumerableDimension = 20;

WeightEnumerator weight_enumerator(const LinearCode& code);
WeightEnumerator coset_weight_enumerator(const Codeword& shift, const LinearCode& code);

/// Span of u * v over all basis pairs of a and b.
LinearCode product_span(const LinearCode& a, const LinearCode& b);

struct ReedMullerCodes {
    LinearCode rm14;
    LinearCode rm24;
    LinearCode rm16;
    LinearCode rm46;
    std::vector<Codeword> alpha_basis;  // the five printed rows of RM(1,4)
    std::vector<Codeword> gamma_basis;  // the seven basis rows of RM(1,6)
};

const ReedMullerCodes& rm_codes();

/// Block characterization: block sum in RM(2,4) and block weights of equal parity.
bool rm46_member(const Codeword& word);

struct MinWeightReport {
    int min_weight = 0;
    std::uint64_t words_scanned = 0;  // every word of weight 1..min_weight-1
    Codeword witness;
};

MinWeightReport min_weight_rm46();

/// Number of RM(4,6) members of each weight 0..max_weight, by exhaustive scan.
std::map<int, std::uint64_t> rm46_low_weight_census(int max_weight);

/// Dual weight distribution A'_k for k <= max_weight from a code's enumerator.
std::map<int, Integer> macwilliams_dual(const WeightEnumerator& enumerator, int length, int max_weight);

struct SubcodeConditions {
    bool cond_i = false;    // nu1+nu2+nu3+nu4 in RM(1,4)
    bool cond_ii = false;   // nu_i + nu_j in RM(1,4)^perp
    bool cond_iii = false;  // each block even
    bool cond_iv = false;   // xi * gamma_i doubly even, i = 1..5
    // (iii) alone does not make xi * gamma_6 and xi * gamma_7 doubly even:
    // wt(nu2) + wt(nu4) can be 2 mod 4.
    bool cond_iv_67 = false;
    bool subcode_ok = false;
    bool doubly_even_ok = false;

    bool consistent() const {
        return ((cond_i && cond_ii && cond_iii) == subcode_ok) &&
               ((cond_i && cond_ii && cond_iii && cond_iv && cond_iv_67) == doubly_even_ok);
    }
};

SubcodeConditions subcode_conditions(const Codeword& xi);

/// (a, a, a, a^c).
Codeword xi_from_alpha(const Codeword& alpha);

struct WeightSixScan {
    std::size_t weight6_count = 0;
    std::size_t conditions_pass = 0;
    std::size_t enumerator_matches = 0;  // coset enumerator == 64x^28 + 64x^36
};

WeightSixScan weight_six_scan();

struct XiCertificate {
    Codeword alpha;
    Codeword xi;
    bool alpha_in_rm24 = false;
    int alpha_weight = 0;
    SubcodeConditions conditions;
    WeightEnumerator coset_enumerator;
    int min_coset_weight = 0;
    Rational top_weight;
};

/// Certificate for alpha = 0110 1100 1010 0000.
XiCertificate verify_xi_certificate();

}  // namespace extremal::rm
