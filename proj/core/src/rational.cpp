#include "redei/rational.hpp"

#include <ostream>

#include "redei/errors.hpp"

namespace redei {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ValidationError("not a rational number: '" + text + "'");
    }
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
    if (is_zero()) throw ValidationError("reciprocal of zero");
    return Rational(mpq_class(1 / value_));
}

std::string Rational::str() const { return value_.get_str(); }

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ValidationError("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, long exponent) {
    const unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent)
                                         : static_cast<unsigned long>(exponent);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
    Rational r(n, d);
    return exponent < 0 ? r.reciprocal() : r;
}

}  // namespace redei
