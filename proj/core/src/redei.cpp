#include "redei/redei.hpp"

#include <numeric>
#include <tuple>
#include <utility>
#include <string>

namespace redei {

RedeiParams::RedeiParams(Integer d_, Integer z_, std::uint64_t n_)
    : d(std::move(d_)), z(std::move(z_)), n(n_) {
    validate_dz(d, z);
}

void validate_dz(const Integer& d, const Integer& z) {
    if (d < 2) throw ValidationError("d must be at least 2");
    if (is_square(d)) throw ValidationError("d = " + d.get_str() + " is a perfect square");
    if (z == 0) throw ValidationError("z must be nonzero");
}

namespace {

Integer binomial(std::uint64_t n, std::uint64_t k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

RedeiPair redei_binomial(const RedeiParams& params) {
    const auto& [d, z, n] = params;
    Integer N = 0, D = 0;
    Integer dpow = 1;  // d^i
    for (std::uint64_t i = 0; 2 * i <= n; ++i) {
        N += binomial(n, 2 * i) * dpow * ipow(z, n - 2 * i);
        if (2 * i + 1 <= n) D += binomial(n, 2 * i + 1) * dpow * ipow(z, n - 2 * i - 1);
        dpow *= d;
    }
    return {params, N, D};
}

std::vector<RedeiPair> redei_sequence(const Integer& d, const Integer& z, std::size_t count) {
    validate_dz(d, z);
    if (count == 0) throw ValidationError("count must be positive");
    const Integer h = 2 * z;
    const Integer k = z * z - d;

    std::vector<RedeiPair> out;
    out.reserve(count);
    out.push_back({RedeiParams(d, z, 0), 1, 0});
    if (count > 1) out.push_back({RedeiParams(d, z, 1), z, 1});
    for (std::size_t n = 2; n < count; ++n) {
        const auto& prev = out[n - 1];
        const auto& prev2 = out[n - 2];
        Integer N = h * prev.N - k * prev2.N;
        Integer D = h * prev.D - k * prev2.D;
        out.push_back({RedeiParams(d, z, n), std::move(N), std::move(D)});
    }
    return out;
}

RedeiPair redei_matrix_pow(const RedeiParams& params) {
    const auto& [d, z, n] = params;
    Integer N = 1, D = 0;
    if (n == 0) return {params, N, D};

    int bit = 63;
    while (((n >> bit) & 1U) == 0) --bit;
    for (; bit >= 0; --bit) {
        Integer N2 = N * N + d * D * D;
        D = 2 * N * D;
        N = std::move(N2);
        if ((n >> bit) & 1U) {
            Integer N3 = z * N + d * D;
            D = N + z * D;
            N = std::move(N3);
        }
    }
    return {params, N, D};
}

Rational q(const RedeiParams& params) {
    if (params.n == 0) throw ValidationError("Q_n is defined for n >= 1");
    const RedeiPair pair = redei_matrix_pow(params);
    if (pair.D == 0)
        throw ValidationError("Q_n undefined at this index (D_" + std::to_string(params.n) +
                              " = 0)");
    return Rational(pair.N, pair.D);
}

Integer expected_norm(const RedeiParams& params) {
    Integer r;
    const Integer base = params.z * params.z - params.d;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), params.n);
    return r;
}

Integer norm_check(const RedeiPair& pair) {
    Integer norm = pair.N * pair.N - pair.params.d * pair.D * pair.D;
    if (norm != expected_norm(pair.params))
        throw ConsistencyError("norm identity N^2 - d D^2 = (z^2 - d)^n violated at n = " +
                               std::to_string(pair.params.n));
    return norm;
}

Rational q_rational(const Integer& d, const Rational& x, std::uint64_t n) {
    if (n == 0) throw ValidationError("Q_n is defined for n >= 1");
    if (d < 2 || is_square(d)) throw ValidationError("d must be a nonsquare >= 2");
    const Integer a = x.num();
    const Integer b = x.den();
    Integer N = 0, D = 0;
    Integer dpow = 1;
    for (std::uint64_t i = 0; 2 * i <= n; ++i) {
        N += binomial(n, 2 * i) * dpow * ipow(a, n - 2 * i) * ipow(b, 2 * i);
        if (2 * i + 1 <= n)
            D += binomial(n, 2 * i + 1) * dpow * ipow(a, n - 2 * i - 1) * ipow(b, 2 * i + 1);
        dpow *= d;
    }
    if (D == 0) throw ValidationError("Q_n(d, x) has a vanishing denominator");
    return Rational(N, D);
}

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

}  // namespace

std::vector<ProjectivePoint> redei_map_mod_p(u64 p, const Integer& d, u64 n) {
    if (p >= (u64{1} << 32)) throw ValidationError("p must be below 2^32");
    const Integer P(static_cast<unsigned long>(p));
    const int chi = legendre(d, P);  // validates p as an odd prime
    if (chi != -1) throw ValidationError("sqrt(d) lies in the field");
    const u64 dm = mod(d, P).get_ui();

    // (x + y sqrt d)(u + v sqrt d) in F_p[sqrt d]
    auto mul = [&](u64 x, u64 y, u64 u, u64 v) {
        return std::pair<u64, u64>{(mulmod(x, u, p) + mulmod(dm, mulmod(y, v, p), p)) % p,
                                   (mulmod(x, v, p) + mulmod(y, u, p)) % p};
    };
    // [z : w] -> (z + w sqrt d)^n = N + D sqrt d
    auto power = [&](u64 z, u64 w) {
        u64 N = 1, D = 0;
        u64 bz = z, bw = w;
        for (u64 e = n; e > 0; e >>= 1) {
            if (e & 1U) std::tie(N, D) = mul(N, D, bz, bw);
            std::tie(bz, bw) = mul(bz, bw, bz, bw);
        }
        return std::pair<u64, u64>{N, D};
    };
    auto to_point = [&](u64 N, u64 D) -> ProjectivePoint {
        if (D == 0) return {0, true};
        const Integer inv = inverse_mod(Integer(static_cast<unsigned long>(D)), P);
        return {mulmod(N, inv.get_ui(), p), false};
    };

    std::vector<ProjectivePoint> images;
    images.reserve(p + 1);
    for (u64 z = 0; z < p; ++z) {
        const auto [N, D] = power(z, 1);
        // N^2 - d D^2 = (z^2 - d)^n is a unit, so N and D never vanish together.
        if (N == 0 && D == 0) throw ConsistencyError("degenerate projective image");
        images.push_back(to_point(N, D));
    }
    const auto [N, D] = power(1, 0);
    images.push_back(to_point(N, D));
    return images;
}

bool is_permutation_exhaustive(u64 p, const Integer& d, u64 n) {
    const auto images = redei_map_mod_p(p, d, n);
    std::vector<bool> seen(p + 1, false);
    for (const auto& pt : images) {
        const u64 slot = pt.infinite ? p : pt.value;
        if (seen[slot]) return false;
        seen[slot] = true;
    }
    return true;
}

bool permutation_check(u64 p, const Integer& d, u64 n) {
    if (n == 0) throw ValidationError("n must be positive");
    const bool bijective = is_permutation_exhaustive(p, d, n);
    const bool predicted = std::gcd(n, p + 1) == 1;
    if (bijective != predicted)
        throw ConsistencyError("permutation criterion gcd(n, p+1) = 1 disagrees with "
                               "exhaustive evaluation for p = " + std::to_string(p) +
                               ", n = " + std::to_string(n));
    return bijective;
}

}  // namespace redei
