#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "redei/errors.hpp"
#include "redei/rational.hpp"

namespace redei {

// ---------------------------------------------------------------------------
// Integer helpers
// ---------------------------------------------------------------------------

/// Exact perfect-square test. Negative input is a ValidationError.
bool is_square(const Integer& d);

/// Primality (GMP's BPSW + Miller-Rabin; deterministic below 2^64).
bool is_prime(const Integer& p);

Integer ipow(const Integer& base, unsigned long exponent);

/// Least nonnegative residue of a mod m (m > 0).
Integer mod(const Integer& a, const Integer& m);

/// Inverse of a modulo m; ValidationError when gcd(a, m) != 1.
Integer inverse_mod(const Integer& a, const Integer& m);

// ---------------------------------------------------------------------------
// p-adic valuation and congruence of rationals
// ---------------------------------------------------------------------------

/// Exponent of the prime p in x: v_p(num) - v_p(den).
/// Throws ValidationError for x == 0 or composite p.
long vp(const Rational& x, const Integer& p);

/// True iff x == y or v_p(x - y) >= k. Both denominators must be prime to p.
bool rat_congruent(const Rational& x, const Rational& y, const Integer& p, long k);

// ---------------------------------------------------------------------------
// Square roots modulo p and Hensel lifting
// ---------------------------------------------------------------------------

/// Both square roots of d modulo an odd prime, ordered (smaller, larger);
/// smaller + larger == p.
struct SqrtModP {
    Integer smaller;
    Integer larger;
};

/// Euler's criterion: d^((p-1)/2) mod p, returned as -1, 0 or 1.
int legendre(const Integer& d, const Integer& p);

/// Square roots of d mod p via Tonelli-Shanks; std::nullopt for a nonresidue.
/// Requires p an odd prime not dividing d.
std::optional<SqrtModP> sqrt_mod_p(const Integer& d, const Integer& p);

/// The p = 3 (mod 4) shortcut d^((p+1)/4). Same contract as sqrt_mod_p but
/// rejects primes outside that class.
std::optional<SqrtModP> sqrt_mod_p_3mod4(const Integer& d, const Integer& p);

/// Truncated p-adic expansion sqrt(d) = sum b_i p^i.
struct PadicExpansion {
    Integer p;
    Integer d;
    std::vector<Integer> digits;  // b_0 .. b_{prec-1}, each in [0, p)

    std::size_t prec() const { return digits.size(); }

    /// a_n = sum_{i<=n} b_i p^i. Requires n < prec().
    Integer truncation(std::size_t n) const;
};

/// Lifts the root b0 of x^2 = d (mod p) one digit at a time: with
/// a_{n-1}^2 - d = r p^n, the next digit solves r + 2 a_{n-1} b_n = 0 (mod p).
PadicExpansion hensel_digits(const Integer& d, const Integer& p, const Integer& b0,
                             std::size_t prec);

/// Quadratic (Newton) lift of b0 to a root of x^2 = d modulo p^prec.
/// Agrees with hensel_digits(...).truncation(prec - 1).
Integer hensel_lift_quadratic(const Integer& d, const Integer& p, const Integer& b0,
                              std::size_t prec);

}  // namespace redei
