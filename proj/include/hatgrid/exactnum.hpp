#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hatgrid/errors.hpp"

namespace hatgrid {

using BigInt = mpz_class;
using Rational = mpq_class;

// Accepts "p/q", integers and plain decimals ("-0.125"); decimals are exact.
Rational parse_rational(std::string_view text);
Rational make_rational(const BigInt& num, const BigInt& den);
std::string to_string(const Rational& x);

enum class Order { less, equal, greater };

// q + r*phi with phi = (sqrt5 - 1)/2, so phi^2 = 1 - phi and Phi = 1 + phi = 1/phi.
class GoldenNumber {
public:
    GoldenNumber() = default;
    GoldenNumber(long v) : q_(v) {}
    // mpq_class(n, d) is not reduced on construction; equality needs canonical parts
    GoldenNumber(const Rational& q) : q_(q) { q_.canonicalize(); }
    GoldenNumber(const Rational& q, const Rational& r) : q_(q), r_(r)
    {
        q_.canonicalize();
        r_.canonicalize();
    }

    static GoldenNumber make(const Rational& q, const Rational& r) { return {q, r}; }
    static GoldenNumber phi() { return {Rational(0), Rational(1)}; }
    static GoldenNumber Phi() { return {Rational(1), Rational(1)}; }
    // "q", "r*phi", "q+r*phi", "q-phi", ...; coefficients as in parse_rational.
    static GoldenNumber parse(std::string_view text);

    const Rational& rational_part() const { return q_; }
    const Rational& phi_part() const { return r_; }

    GoldenNumber conjugate() const;
    // (q + r phi)(conjugate) = q^2 - q r - r^2
    Rational norm() const;
    GoldenNumber inverse() const;
    int sign() const;
    bool is_zero() const { return sgn(q_) == 0 && sgn(r_) == 0; }
    bool is_rational() const { return sgn(r_) == 0; }
    // membership in Z + phi*Z
    bool in_integer_lattice() const;
    double to_double() const;
    std::string str() const;

    GoldenNumber operator-() const { return {Rational(-q_), Rational(-r_)}; }
    GoldenNumber& operator+=(const GoldenNumber& o);
    GoldenNumber& operator-=(const GoldenNumber& o);
    GoldenNumber& operator*=(const GoldenNumber& o);
    GoldenNumber& operator/=(const GoldenNumber& o);

    friend GoldenNumber operator+(GoldenNumber a, const GoldenNumber& b) { return a += b; }
    friend GoldenNumber operator-(GoldenNumber a, const GoldenNumber& b) { return a -= b; }
    friend GoldenNumber operator*(GoldenNumber a, const GoldenNumber& b) { return a *= b; }
    friend GoldenNumber operator/(GoldenNumber a, const GoldenNumber& b) { return a /= b; }

    friend bool operator==(const GoldenNumber& a, const GoldenNumber& b)
    {
        return a.q_ == b.q_ && a.r_ == b.r_;
    }
    friend std::strong_ordering operator<=>(const GoldenNumber& a, const GoldenNumber& b);

private:
    Rational q_{0};
    Rational r_{0};
};

Order compare(const GoldenNumber& x, const GoldenNumber& y);
BigInt floor(const GoldenNumber& x);
// floor for values known to fit; throws std::overflow_error otherwise
std::int64_t floor_i64(const GoldenNumber& x);
GoldenNumber pow(const GoldenNumber& x, int e);

}  // namespace hatgrid
