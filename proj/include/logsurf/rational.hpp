// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace logsurf {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(long n, long d);
    explicit Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& n, const Integer& d);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p", "p/q" or "-p/q". Throws InvalidInput on malformed text or q = 0.
    static Rational parse(std::string_view text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Integer floor() const;
    /// x - floor(x), in [0,1).
    Rational frac() const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inverse() const;

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }
    /// Display-only decimal with the given number of significant digits.
    std::string decimal(int significant_digits = 12) const;
    double to_double() const { return v_.get_d(); }

    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

private:
    mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace logsurf
