#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "redei/arith.hpp"
#include "redei/contfrac.hpp"

namespace redei {

enum class RootChoice { Smaller, Larger };

/// sqrt(d) in Q_p anchored at the root z of z^2 = d (mod p).
///
/// p is an odd prime with p not dividing 2d, so D_n = (2z)^{n-1} (mod p) is a
/// p-adic unit and every Q_n(d, z) is a p-adic integer.
struct PadicSqrtContext {
    Integer d;
    Integer p;
    Integer z;                  // 0 < z < p
    PadicExpansion expansion;   // b_0 = z
    long root_valuation = 0;    // v_p(z^2 - d) >= 1
};

/// Picks a root of d modulo p and lifts it to prec digits.
/// ValidationError "sqrt(d) not in Q_p" for a nonresidue.
PadicSqrtContext make_padic_context(const Integer& d, const Integer& p,
                                    RootChoice choice = RootChoice::Smaller,
                                    std::size_t prec = 1);

/// Same, with an explicit root value z in (0, p).
PadicSqrtContext make_padic_context_at(const Integer& d, const Integer& p, const Integer& z,
                                       std::size_t prec = 1);

struct PadicOrder {
    long norm_order = 0;   // v_p(N_n^2 - d D_n^2)
    long denominator = 0;  // v_p(D_n), always 0
    long q_order = 0;      // v_p(Q_n^2 - d) = norm_order - 2 * denominator
};

/// Valuations of the n-th Redei pair, computed from N_n and D_n themselves.
PadicOrder padic_order(const PadicSqrtContext& ctx, std::uint64_t n);

/// a_n = Q_{2^n}(d, z) (mod p^{n+1}) for 0 <= n <= k.
bool check_newton_padic(const PadicSqrtContext& ctx, std::size_t k);

/// a_n = Q_{n+1}(d, z) (mod p^{n+1}) for 0 <= n <= k.
bool check_linear_padic(const PadicSqrtContext& ctx, std::size_t k);

/// [z; period(2z/(d - z^2), 2z)] for the chosen root: a periodic
/// representation of sqrt(d) in Q_p whose convergents also converge in R.
RationalCF padic_cf(const Integer& d, const Integer& p, RootChoice choice = RootChoice::Smaller);

struct SimultaneousRow {
    std::uint64_t n = 0;
    Rational q;
    Rational real_error;   // |Q_n^2 - d|
    long padic_order = 0;  // v_p(Q_n^2 - d)
};

struct SimultaneousReport {
    Integer d;
    Integer p;
    Integer z;
    long root_valuation = 0;
    std::vector<SimultaneousRow> rows;          // n = 1 .. k
    bool padic_orders_exact = false;            // order == n * root_valuation for all rows
    std::uint64_t real_monotone_from = 0;       // errors strictly decrease from this n on
    bool real_error_shrinks = false;            // last error < first error
};

SimultaneousReport simultaneous_report(const PadicSqrtContext& ctx, std::uint64_t k);

}  // namespace redei
