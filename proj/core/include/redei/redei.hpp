#pragma once

#include <cstdint>
#include <vector>

#include "redei/arith.hpp"

namespace redei {

/// Parameters (d, z, n) of the Redei polynomials, with
/// (z + sqrt d)^n = N_n(d, z) + D_n(d, z) sqrt d.
///
/// d >= 2 must not be a perfect square and z must be nonzero. Negative z is
/// accepted here; operations that need real convergence reject it.
struct RedeiParams {
    Integer d;
    Integer z;
    std::uint64_t n = 0;

    RedeiParams(Integer d, Integer z, std::uint64_t n);
};

/// Throws ValidationError unless d >= 2 is a nonsquare and z != 0.
void validate_dz(const Integer& d, const Integer& z);

/// (N_n, D_n) together with the parameters that produced them.
struct RedeiPair {
    RedeiParams params;
    Integer N;
    Integer D;

    friend bool operator==(const RedeiPair& a, const RedeiPair& b) {
        return a.params.d == b.params.d && a.params.z == b.params.z &&
               a.params.n == b.params.n && a.N == b.N && a.D == b.D;
    }
};

/// Reference evaluator: the explicit binomial sums.
RedeiPair redei_binomial(const RedeiParams& params);

/// Pairs for n = 0 .. count-1 from the order-2 recurrence
/// c_n = 2z c_{n-1} - (z^2 - d) c_{n-2}, N: (1, z), D: (0, 1).
std::vector<RedeiPair> redei_sequence(const Integer& d, const Integer& z, std::size_t count);

/// n-th power of [[z, d], [1, z]] by square-and-multiply, realised as
/// arithmetic in Z[sqrt d]: (N, D)^2 = (N^2 + d D^2, 2 N D) and
/// (N, D)(z + sqrt d) = (z N + d D, N + z D).
RedeiPair redei_matrix_pow(const RedeiParams& params);

/// Q_n(d, z) = N_n / D_n, reduced. Requires n >= 1.
Rational q(const RedeiParams& params);

/// (z^2 - d)^n.
Integer expected_norm(const RedeiParams& params);

/// N^2 - d D^2; throws ConsistencyError unless it equals (z^2 - d)^n.
Integer norm_check(const RedeiPair& pair);

/// Q_n(d, x) for a rational second argument. With x = a/b the binomial sums
/// are homogenised in (a, b), so the common factor b^n cancels.
Rational q_rational(const Integer& d, const Rational& x, std::uint64_t n);

// ---------------------------------------------------------------------------
// Finite fields
// ---------------------------------------------------------------------------

/// A point of the projective line over F_p: an element or infinity.
struct ProjectivePoint {
    std::uint64_t value = 0;
    bool infinite = false;

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// Images of every point of P^1(F_p) under z -> Q_n(d, z), ordered
/// 0, 1, ..., p-1, infinity. Q_n is evaluated through the homogeneous form
/// (z + w sqrt d)^n, so infinity = [1 : 0] maps to [z^n : 0] = infinity.
/// Requires p an odd prime below 2^32 and d a nonresidue mod p.
std::vector<ProjectivePoint> redei_map_mod_p(std::uint64_t p, const Integer& d, std::uint64_t n);

/// True iff redei_map_mod_p is a bijection (exhaustive check only).
bool is_permutation_exhaustive(std::uint64_t p, const Integer& d, std::uint64_t n);

/// Exhaustive bijectivity of Q_n on P^1(F_p), cross-checked against
/// gcd(n, p + 1) == 1. A disagreement raises ConsistencyError.
bool permutation_check(std::uint64_t p, const Integer& d, std::uint64_t n);

}  // namespace redei
