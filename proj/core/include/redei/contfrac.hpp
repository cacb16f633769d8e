#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "redei/rational.hpp"

namespace redei {

/// One partial quotient a/b, kept as the chosen integer pair. The integer
/// convergent sequences depend on the representatives, so (2, 4) and (1, 2)
/// are different partial quotients even though they denote the same value.
struct PartialQuotient {
    Integer a;
    Integer b;  // nonzero

    Rational value() const { return Rational(a, b); }
    friend bool operator==(const PartialQuotient&, const PartialQuotient&) = default;
};

/// Continued fraction [a_0/b_0, a_1/b_1, ...] with rational partial quotients.
/// When period_start is set, terms[period_start..] repeat forever.
class RationalCF {
public:
    RationalCF(std::vector<PartialQuotient> terms, std::optional<std::size_t> period_start = {});

    const std::vector<PartialQuotient>& terms() const { return terms_; }
    std::optional<std::size_t> period_start() const { return period_start_; }
    bool periodic() const { return period_start_.has_value(); }

    /// Number of partial quotients available: unbounded when periodic.
    std::optional<std::size_t> length() const;

    /// i-th partial quotient, unrolling the period.
    const PartialQuotient& term(std::size_t i) const;

    /// Reduced display, e.g. "[22; period(-22/229, 44)]" or "[1; 2, 3]".
    std::string str() const;

    friend bool operator==(const RationalCF&, const RationalCF&) = default;

private:
    std::vector<PartialQuotient> terms_;
    std::optional<std::size_t> period_start_;
};

/// Numerator and denominator tracks p_n, q_n of the convergents from
/// x_n = (a_n/b_n) x_{n-1} + x_{n-2}, seeded with p_{-1} = 1, p_{-2} = 0,
/// q_{-1} = 0, q_{-2} = 1.
struct ConvergentPair {
    Rational p;
    Rational q;
};

std::vector<ConvergentPair> convergent_tracks(const RationalCF& cf, std::size_t k);

/// First k convergents p_n/q_n. ValidationError if some q_n vanishes.
std::vector<Rational> convergents_direct(const RationalCF& cf, std::size_t k);

/// Integer tracks of a rational-quotient continued fraction:
///   p_n = s_n / (b_0 u_n),  q_n = t_n / u_n.
struct ConvergentRecord {
    std::size_t index = 0;
    Integer s;
    Integer t;
    Integer u;

    Rational p(const Integer& b0) const { return Rational(s, b0 * u); }
    Rational q() const { return Rational(t, u); }
    /// p_n / q_n = s_n / (b_0 t_n); ValidationError when t_n = 0.
    Rational value(const Integer& b0) const;
};

/// s_n = a_n s_{n-1} + b_n b_{n-1} s_{n-2}, same for t, u_n = b_n u_{n-1};
/// s_0 = a_0, s_1 = a_0 a_1 + b_0 b_1, t_0 = 1, t_1 = a_1, u_0 = 1, u_1 = b_1.
std::vector<ConvergentRecord> convergents_lemma(const RationalCF& cf, std::size_t k);

/// [z; period(2z/(d - z^2), 2z/1)], the continued fraction whose n-th
/// convergent (counting from 0) is Q_{n+1}(d, z). The first periodic term is
/// stored unreduced as (2z, d - z^2). Requires z >= 1 and d a nonsquare.
RationalCF sqrt_cf(const Integer& d, const Integer& z);

/// True iff convergent n-1 of sqrt_cf(d, z) equals Q_n(d, z) for 1 <= n <= k.
bool cf_equals_redei(const Integer& d, const Integer& z, std::size_t k);

/// Ordinary simple continued fraction of sqrt d: [a0; period].
struct ClassicalCF {
    Integer a0;
    std::vector<Integer> period;

    std::string str() const;
};

/// Surd algorithm on the integer state (m, q); stops at a_k = 2 a_0.
ClassicalCF classical_sqrt_cf(const Integer& d);

}  // namespace redei
