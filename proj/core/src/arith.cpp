#include "redei/arith.hpp"

#include <algorithm>
#include <string>

namespace redei {
namespace {

void require_odd_prime(const Integer& p) {
    if (p == 2) throw ValidationError("p = 2 is not supported");
    if (!is_prime(p)) throw ValidationError("p = " + p.get_str() + " is not prime");
}

Integer powm(const Integer& base, const Integer& exponent, const Integer& m) {
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), m.get_mpz_t());
    return r;
}

long valuation(const Integer& x, const Integer& p) {
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

SqrtModP ordered(const Integer& r, const Integer& p) {
    Integer other = p - r;
    if (other < r) return {other, r};
    return {r, other};
}

}  // namespace

bool is_square(const Integer& d) {
    if (d < 0) throw ValidationError("is_square: negative argument");
    return mpz_perfect_square_p(d.get_mpz_t()) != 0;
}

bool is_prime(const Integer& p) {
    if (p < 2) return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

Integer ipow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw ValidationError(a.get_str() + " is not invertible modulo " + m.get_str());
    return r;
}

long vp(const Rational& x, const Integer& p) {
    if (x.is_zero()) throw ValidationError("valuation of zero undefined");
    if (!is_prime(p)) throw ValidationError("p = " + p.get_str() + " is not prime");
    return valuation(x.num(), p) - valuation(x.den(), p);
}

bool rat_congruent(const Rational& x, const Rational& y, const Integer& p, long k) {
    if (!is_prime(p)) throw ValidationError("p = " + p.get_str() + " is not prime");
    if (k < 1) throw ValidationError("congruence modulus exponent must be positive");
    if (mpz_divisible_p(x.den().get_mpz_t(), p.get_mpz_t()) ||
        mpz_divisible_p(y.den().get_mpz_t(), p.get_mpz_t()))
        throw ValidationError("not a p-adic integer");
    if (x == y) return true;
    return vp(x - y, p) >= k;
}

int legendre(const Integer& d, const Integer& p) {
    require_odd_prime(p);
    const Integer e = powm(mod(d, p), (p - 1) / 2, p);
    if (e == 0) return 0;
    return e == 1 ? 1 : -1;
}

std::optional<SqrtModP> sqrt_mod_p(const Integer& d, const Integer& p) {
    require_odd_prime(p);
    const Integer a = mod(d, p);
    if (a == 0) throw ValidationError("ramified case unsupported (p divides d)");
    if (legendre(a, p) != 1) return std::nullopt;

    // p - 1 = q * 2^s with q odd
    Integer q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }

    Integer n = 2;
    while (legendre(n, p) != -1) ++n;

    Integer r = powm(a, (q + 1) / 2, p);
    Integer t = powm(a, q, p);
    Integer c = powm(n, q, p);
    unsigned long m = s;

    while (t != 1) {
        // least i with t^(2^i) = 1
        unsigned long i = 0;
        Integer t2 = t;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
            if (i == m) throw ConsistencyError("Tonelli-Shanks did not terminate");
        }
        Integer b = c;
        for (unsigned long j = 0; j + 1 < m - i; ++j) b = b * b % p;
        r = r * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return ordered(r, p);
}

std::optional<SqrtModP> sqrt_mod_p_3mod4(const Integer& d, const Integer& p) {
    require_odd_prime(p);
    if (mod(p, 4) != 3) throw ValidationError("shortcut requires p = 3 (mod 4)");
    const Integer a = mod(d, p);
    if (a == 0) throw ValidationError("ramified case unsupported (p divides d)");
    if (legendre(a, p) != 1) return std::nullopt;
    return ordered(powm(a, (p + 1) / 4, p), p);
}

Integer PadicExpansion::truncation(std::size_t n) const {
    if (n >= digits.size()) throw ValidationError("truncation index beyond precision");
    Integer a = 0;
    Integer scale = 1;
    for (std::size_t i = 0; i <= n; ++i) {
        a += digits[i] * scale;
        scale *= p;
    }
    return a;
}

namespace {

void check_lift_preconditions(const Integer& d, const Integer& p, const Integer& b0,
                              std::size_t prec) {
    require_odd_prime(p);
    if (prec == 0) throw ValidationError("precision must be positive");
    if (mod(d, p) == 0) throw ValidationError("ramified case unsupported (p divides d)");
    if (b0 <= 0 || b0 >= p) throw ValidationError("starting root must lie in (0, p)");
    if (mod(b0 * b0 - d, p) != 0) throw ValidationError("not a starting root");
}

}  // namespace

PadicExpansion hensel_digits(const Integer& d, const Integer& p, const Integer& b0,
                             std::size_t prec) {
    check_lift_preconditions(d, p, b0, prec);

    PadicExpansion out{p, d, {b0}};
    out.digits.reserve(prec);
    // 2 a_{n-1} = 2 b0 (mod p) for every n, so one inverse serves all digits.
    const Integer inv2b0 = inverse_mod(2 * b0, p);
    Integer a = b0;
    Integer pn = p;  // p^n
    for (std::size_t n = 1; n < prec; ++n) {
        const Integer diff = a * a - d;
        if (!mpz_divisible_p(diff.get_mpz_t(), pn.get_mpz_t()))
            throw ConsistencyError("Hensel invariant lost at digit " + std::to_string(n));
        const Integer r = diff / pn;
        const Integer bn = mod(-r * inv2b0, p);
        out.digits.push_back(bn);
        a += bn * pn;
        pn *= p;
    }
    return out;
}

Integer hensel_lift_quadratic(const Integer& d, const Integer& p, const Integer& b0,
                              std::size_t prec) {
    check_lift_preconditions(d, p, b0, prec);
    Integer x = b0;
    std::size_t have = 1;
    while (have < prec) {
        have = std::min(2 * have, prec);
        const Integer m = ipow(p, have);
        x = mod(x - (x * x - d) * inverse_mod(2 * x, m), m);
    }
    return mod(x, ipow(p, prec));
}

}  // namespace redei
