#pragma once

// Exact rational scalar used throughout the pipeline.
//
// Thin value wrapper over GMP's mpq_class. The wrapper exists so that every
// value is canonicalized on construction (lowest terms, positive denominator)
// and so the rest of the code never touches raw GMP types.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace extremal {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    // Implicit so that integer literals mix freely with rationals.
    Rational(long n) : v_(n) {}                    // NOLINT
    Rational(int n) : v_(static_cast<long>(n)) {}  // NOLINT
    Rational(const Integer& n) : v_(n) {}          // NOLINT
    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);

    /// Parses "p", "-p", "p/q" (surrounding whitespace allowed).
    static Rational parse(std::string_view text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const;
    Integer floor() const;
    Integer ceil() const;
    double to_double() const { return v_.get_d(); }

    /// Canonical "p/q", or "p" when q = 1.
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    const mpq_class& raw() const { return v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    mpq_class v_;
};

Rational pow(const Rational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace extremal
