#include "redei/padic.hpp"

#include <string>

#include "redei/approx.hpp"
#include "redei/redei.hpp"

namespace redei {

PadicSqrtContext make_padic_context_at(const Integer& d, const Integer& p, const Integer& z,
                                       std::size_t prec) {
    if (!is_prime(p) || p == 2) throw ValidationError("p must be an odd prime");
    if (d < 2 || is_square(d)) throw ValidationError("d must be a nonsquare >= 2");
    if (mod(d, p) == 0) throw ValidationError("p divides d (ramified case unsupported)");
    if (z <= 0 || z >= p) throw ValidationError("root must lie in (0, p)");
    if (mod(z * z - d, p) != 0) throw ValidationError("z^2 != d (mod p)");
    PadicSqrtContext ctx{d, p, z, hensel_digits(d, p, z, prec), 0};
    ctx.root_valuation = vp(Rational(Integer(z * z - d)), p);
    return ctx;
}

PadicSqrtContext make_padic_context(const Integer& d, const Integer& p, RootChoice choice,
                                    std::size_t prec) {
    if (!is_prime(p) || p == 2) throw ValidationError("p must be an odd prime");
    if (mod(d, p) == 0) throw ValidationError("p divides d (ramified case unsupported)");
    const auto roots = sqrt_mod_p(d, p);
    if (!roots) throw ValidationError("sqrt(d) not in Q_p (d is a nonresidue mod p)");
    return make_padic_context_at(d, p, choice == RootChoice::Smaller ? roots->smaller : roots->larger,
                                 prec);
}

namespace {

PadicOrder order_of(const RedeiPair& pair, const Integer& p) {
    PadicOrder out;
    const Integer norm = pair.N * pair.N - pair.params.d * pair.D * pair.D;
    out.norm_order = vp(Rational(norm), p);
    out.denominator = vp(Rational(pair.D), p);
    if (out.denominator != 0) throw ValidationError("denominator not a p-adic unit");
    out.q_order = out.norm_order - 2 * out.denominator;
    return out;
}

}  // namespace

PadicOrder padic_order(const PadicSqrtContext& ctx, std::uint64_t n) {
    if (n == 0) throw ValidationError("n must be positive");
    return order_of(redei_matrix_pow(RedeiParams(ctx.d, ctx.z, n)), ctx.p);
}

bool check_newton_padic(const PadicSqrtContext& ctx, std::size_t k) {
    const auto digits = hensel_digits(ctx.d, ctx.p, ctx.z, k + 1);
    for (std::size_t n = 0; n <= k; ++n) {
        const Rational newton = newton_direct(ctx.d, ctx.z, n);
        if (!rat_congruent(Rational(digits.truncation(n)), newton, ctx.p, static_cast<long>(n + 1)))
            return false;
    }
    return true;
}

bool check_linear_padic(const PadicSqrtContext& ctx, std::size_t k) {
    const auto digits = hensel_digits(ctx.d, ctx.p, ctx.z, k + 1);
    const auto seq = redei_sequence(ctx.d, ctx.z, k + 2);
    Integer a = 0, scale = 1;
    for (std::size_t n = 0; n <= k; ++n) {
        a += digits.digits[n] * scale;
        scale *= ctx.p;
        if (!rat_congruent(Rational(a), Rational(seq[n + 1].N, seq[n + 1].D), ctx.p,
                           static_cast<long>(n + 1)))
            return false;
    }
    return true;
}

RationalCF padic_cf(const Integer& d, const Integer& p, RootChoice choice) {
    return sqrt_cf(d, make_padic_context(d, p, choice).z);
}

SimultaneousReport simultaneous_report(const PadicSqrtContext& ctx, std::uint64_t k) {
    if (k == 0) throw ValidationError("k must be positive");
    SimultaneousReport rep{ctx.d, ctx.p, ctx.z, ctx.root_valuation, {}, true, 1, false};
    const auto seq = redei_sequence(ctx.d, ctx.z, k + 1);
    const Integer base = abs(ctx.z * ctx.z - ctx.d);
    Integer norm = 1;
    for (std::uint64_t n = 1; n <= k; ++n) {
        const auto& pair = seq[n];
        norm *= base;
        SimultaneousRow row{n, Rational(pair.N, pair.D), Rational(norm, pair.D * pair.D),
                            order_of(pair, ctx.p).q_order};
        if (row.padic_order != static_cast<long>(n) * ctx.root_valuation)
            rep.padic_orders_exact = false;
        if (n > 1 && !(row.real_error < rep.rows.back().real_error)) rep.real_monotone_from = n;
        rep.rows.push_back(std::move(row));
    }
    rep.real_error_shrinks = rep.rows.back().real_error < rep.rows.front().real_error;
    return rep;
}

}  // namespace redei
