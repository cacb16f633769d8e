#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "redei/rational.hpp"

namespace redei {

/// Power series c_0 + c_1 t + ... + c_m t^m with exact rational
/// coefficients; everything beyond t^m is discarded.
class TruncatedSeries {
public:
    static constexpr std::size_t kMaxOrder = 64;

    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order);
    /// Coefficients are padded with zeros or truncated to order + 1 entries.
    TruncatedSeries(std::vector<Rational> coeffs, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    /// Requires b[0] != 0.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    std::string str() const;

private:
    std::vector<Rational> coeffs_;
};

// ---------------------------------------------------------------------------
// Newton iteration
// ---------------------------------------------------------------------------

/// Newton's method for b x^2 - a x - c: x_n = (b x_{n-1}^2 + c) / (2b x_{n-1} - a).
/// Returns x_0 .. x_k.
std::vector<Rational> newton_general(const Integer& a, const Integer& b, const Integer& c,
                                     const Rational& x0, std::size_t k);

/// Newton iterates for sqrt d from x_0 = z; x_n equals Q_{2^n}(d, z).
std::vector<Rational> newton_sqrt(const Integer& d, const Integer& z, std::size_t k);

/// Q_{2^n}(d, z) from n squarings in Z[sqrt d], skipping the intermediate
/// Newton steps.
Rational newton_direct(const Integer& d, const Integer& z, std::size_t n);

// ---------------------------------------------------------------------------
// Pade behaviour around d = z^2 (t = d - z^2)
// ---------------------------------------------------------------------------

/// sqrt(z^2 + t) = z sum_k binom(1/2, k) (t / z^2)^k through order m.
TruncatedSeries sqrt_series(const Integer& z, std::size_t m);

/// Integer coefficient vectors (ascending in t) of N_n(z^2 + t, z) and
/// D_n(z^2 + t, z), trailing zeros stripped.
struct RedeiPolynomials {
    std::vector<Integer> numerator;
    std::vector<Integer> denominator;

    std::size_t numerator_degree() const { return numerator.empty() ? 0 : numerator.size() - 1; }
    std::size_t denominator_degree() const {
        return denominator.empty() ? 0 : denominator.size() - 1;
    }
};

RedeiPolynomials redei_polynomials(const Integer& z, std::uint64_t n);

/// Series of Q_n(z^2 + t, z) through order m.
TruncatedSeries redei_series(const Integer& z, std::uint64_t n, std::size_t m);

struct PadeContact {
    std::uint64_t n = 0;
    std::size_t r = 0;           // n = 2r + 1
    std::size_t contact = 0;     // largest m with coefficients 0..m equal
    bool exact = false;          // contact == 2r
    std::size_t numerator_degree = 0;
    std::size_t denominator_degree = 0;
};

/// Contact order between Q_n(z^2 + t, z) and sqrt(z^2 + t) for odd n = 2r + 1.
/// Raises ConsistencyError when contact < 2r or a t-degree differs from r.
PadeContact pade_contact_order(const Integer& z, std::uint64_t n);

// ---------------------------------------------------------------------------
// Real error and decimal expansion
// ---------------------------------------------------------------------------

/// |Q_n^2 - d| = |z^2 - d|^n / D_n^2, exactly. Requires z >= 1, n >= 1.
Rational error_exact(const Integer& d, const Integer& z, std::uint64_t n);

/// floor(sqrt(d) * 10^digits) rendered as "I.FFFF" (truncated, not rounded),
/// derived from Redei approximants and certified by integer comparison.
std::string decimal_digits(const Integer& d, const Integer& z, std::size_t digits);

}  // namespace redei
