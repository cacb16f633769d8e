#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace redei {

using Integer = mpz_class;

/// Exact rational number, always reduced with a positive denominator.
///
/// Equality is structural on the reduced form, so two Rationals compare
/// equal exactly when they denote the same number.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    /// Throws ValidationError when den is zero.
    Rational(const Integer& num, const Integer& den);

    /// Parses "a" or "a/b".
    static Rational parse(const std::string& text);

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational abs() const;
    Rational reciprocal() const;

    /// "a" when the denominator is 1, otherwise "a/b".
    std::string str() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Integer power of a rational; negative exponents invert.
Rational pow(const Rational& base, long exponent);

}  // namespace redei
