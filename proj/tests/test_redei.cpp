#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "redei/redei.hpp"

using namespace redei;

namespace {

// Homogeneous binomial sums mod p: (z + w sqrt d)^n = N + D sqrt d.
std::pair<Integer, Integer> binomial_mod(const Integer& d, long z, long w, std::uint64_t n, long p) {
    Integer N = 0, D = 0;
    for (std::uint64_t i = 0; 2 * i <= n; ++i) {
        Integer c;
        mpz_bin_uiui(c.get_mpz_t(), n, 2 * i);
        N += c * ipow(d, i) * ipow(z, n - 2 * i) * ipow(w, 2 * i);
        if (2 * i + 1 <= n) {
            mpz_bin_uiui(c.get_mpz_t(), n, 2 * i + 1);
            D += c * ipow(d, i) * ipow(z, n - 2 * i - 1) * ipow(w, 2 * i + 1);
        }
    }
    return {mod(N, p), mod(D, p)};
}

bool oracle_is_permutation(long p, const Integer& d, std::uint64_t n) {
    std::vector<int> hits(p + 1, 0);
    auto mark = [&](const Integer& N, const Integer& D) {
        if (D == 0) {
            ++hits[p];
            return;
        }
        ++hits[mod(N * inverse_mod(D, p), p).get_si()];
    };
    for (long z = 0; z < p; ++z) {
        const auto [N, D] = binomial_mod(d, z, 1, n, p);
        mark(N, D);
    }
    const auto [N, D] = binomial_mod(d, 1, 0, n, p);
    mark(N, D);
    for (int h : hits)
        if (h != 1) return false;
    return true;
}

}  // namespace

TEST_SUITE("redei") {
    TEST_CASE("params validation") {
        CHECK_THROWS_AS(RedeiParams(25, 3, 2), ValidationError);
        CHECK_THROWS_AS(RedeiParams(1, 3, 2), ValidationError);
        CHECK_THROWS_AS(RedeiParams(10, 0, 2), ValidationError);
        CHECK_NOTHROW(RedeiParams(10, -3, 2));
    }

    TEST_CASE("redei_binomial examples") {
        auto p = redei_binomial({2, 1, 3});
        CHECK(p.N == 7);
        CHECK(p.D == 5);
        p = redei_binomial({123, 45, 0});
        CHECK(p.N == 1);
        CHECK(p.D == 0);
        p = redei_binomial({10, 3, 2});
        CHECK(p.N == 19);
        CHECK(p.D == 6);
    }

    TEST_CASE("redei_sequence examples") {
        auto s = redei_sequence(10, 3, 4);
        REQUIRE(s.size() == 4);
        for (std::size_t i = 0; i < 4; ++i) CHECK(s[i].params.n == i);
        CHECK(s[0].N == 1); CHECK(s[1].N == 3); CHECK(s[2].N == 19); CHECK(s[3].N == 117);
        CHECK(s[0].D == 0); CHECK(s[1].D == 1); CHECK(s[2].D == 6); CHECK(s[3].D == 37);
        s = redei_sequence(2, 1, 2);
        CHECK(s[1].N == 1);
        CHECK(s[1].D == 1);
        s = redei_sequence(26, 22, 2);
        CHECK(s[0].N == 1); CHECK(s[0].D == 0);
        CHECK(s[1].N == 22); CHECK(s[1].D == 1);
        CHECK_THROWS_AS(redei_sequence(10, 3, 0), ValidationError);
    }

    TEST_CASE("redei_matrix_pow examples") {
        auto p = redei_matrix_pow({10, 3, 4});
        CHECK(p.N == 721);
        CHECK(p.D == 228);
        p = redei_matrix_pow({10, 3, 6});
        CHECK(p.N == 27379);
        CHECK(p.D == 8658);
        p = redei_matrix_pow({77, -9, 1});
        CHECK(p.N == -9);
        CHECK(p.D == 1);
    }

    TEST_CASE("matrix power equals the literal 2x2 matrix product") {
        for (std::uint64_t n = 0; n <= 40; ++n) {
            const auto m = oracle::matrix_power_naive(13, 5, n);
            const auto p = redei_matrix_pow({13, 5, n});
            CHECK(m[0] == p.N);
            CHECK(m[2] == p.D);
            CHECK(m[3] == p.N);
            CHECK(m[1] == 13 * p.D);
        }
    }

    TEST_CASE("three evaluators agree, norm identity holds") {
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<long> zdist(-1000, 1000);
        std::uniform_int_distribution<std::uint64_t> ndist(0, 120);
        for (int it = 0; it < 40; ++it) {
            const Integer d = oracle::random_nonsquare(rng, 2, 1'000'000);
            long z = 0;
            while (z == 0) z = zdist(rng);
            const std::uint64_t n = ndist(rng);
            const RedeiParams params(d, z, n);
            const auto a = redei_binomial(params);
            const auto b = redei_sequence(d, z, n + 1).back();
            const auto c = redei_matrix_pow(params);
            CHECK(a == b);
            CHECK(a == c);
            CHECK(norm_check(c) == expected_norm(params));
        }
    }

    TEST_CASE("q examples") {
        CHECK(q({10, 3, 2}) == Rational(Integer(19), Integer(6)));
        CHECK(q({2, 1, 3}) == Rational(Integer(7), Integer(5)));
        CHECK(q({26, 22, 1}) == Rational(22));
        CHECK(q({26, -22, 1}) == Rational(-22));
        CHECK_THROWS_AS(q({10, 3, 0}), ValidationError);
    }

    TEST_CASE("norm_check examples") {
        CHECK(norm_check(redei_binomial({2, 1, 3})) == -1);
        CHECK(norm_check(redei_binomial({2, 1, 0})) == 1);
        CHECK(norm_check(redei_binomial({26, 22, 1})) == 458);
        RedeiPair broken{RedeiParams(2, 1, 3), 7, 4};
        CHECK_THROWS_AS(norm_check(broken), ConsistencyError);
    }

    TEST_CASE("q_rational examples") {
        CHECK(q_rational(10, Rational(Integer(117), Integer(37)), 2) ==
              Rational(Integer(27379), Integer(8658)));
        CHECK(q_rational(10, Rational(Integer(19), Integer(6)), 2) ==
              Rational(Integer(721), Integer(228)));
        for (std::uint64_t n = 1; n <= 10; ++n) CHECK(q_rational(10, Rational(3), n) == q({10, 3, n}));
        CHECK_THROWS_AS(q_rational(10, Rational(0), 2), ValidationError);  // D_2 = 2x = 0
    }

    TEST_CASE("composition Q_mn = Q_m(d, Q_n)") {
        for (const auto& [d, z] : {std::pair{10L, 3L}, std::pair{26L, 22L}, std::pair{7L, -2L}}) {
            for (std::uint64_t m = 1; m <= 6; ++m)
                for (std::uint64_t n = 1; n <= 6; ++n)
                    CHECK(q({d, z, m * n}) == q_rational(d, q({d, z, n}), m));
        }
    }

    TEST_CASE("parity in z and degree of D_n") {
        for (std::uint64_t n = 0; n <= 12; ++n) {
            const auto plus = redei_binomial({11, 4, n});
            const auto minus = redei_binomial({11, -4, n});
            const int sN = n % 2 == 0 ? 1 : -1;
            CHECK(minus.N == sN * plus.N);
            if (n > 0) CHECK(minus.D == -sN * plus.D);
        }
        // D_n(11, z) as a polynomial in z: n-th finite difference vanishes,
        // (n-1)-th equals n * (n-1)! (leading coefficient n).
        for (std::uint64_t n = 1; n <= 9; ++n) {
            std::vector<Integer> vals;
            for (long z = 1; z <= static_cast<long>(n) + 1; ++z)
                vals.push_back(redei_binomial({11, z, n}).D);
            std::vector<std::vector<Integer>> diffs{vals};
            while (diffs.back().size() > 1) {
                const auto& prev = diffs.back();
                std::vector<Integer> next;
                for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
                diffs.push_back(next);
            }
            Integer fact = 1;
            for (std::uint64_t i = 2; i < n; ++i) fact *= i;
            CHECK(diffs[n - 1][0] == Integer(n) * fact);
            CHECK(diffs[n][0] == 0);
        }
    }

    TEST_CASE("permutation_check examples") {
        CHECK(permutation_check(7, 3, 3));
        CHECK_FALSE(permutation_check(7, 3, 2));
        CHECK(permutation_check(11, 2, 1));
        CHECK_THROWS_WITH_AS(permutation_check(7, 2, 3), "sqrt(d) lies in the field", ValidationError);
        CHECK_THROWS_AS(permutation_check(9, 2, 3), ValidationError);
    }

    TEST_CASE("finite-field map agrees with the binomial oracle") {
        for (long p : {3L, 5L, 7L, 11L, 13L, 29L}) {
            Integer d = 2;
            while (legendre(d, p) != -1) ++d;
            for (std::uint64_t n = 1; n <= 12; ++n) {
                const auto images = redei_map_mod_p(p, d, n);
                for (long z = 0; z < p; ++z) {
                    const auto [N, D] = binomial_mod(d, z, 1, n, p);
                    if (D == 0) CHECK(images[z].infinite);
                    else CHECK(images[z].value == mod(N * inverse_mod(D, p), p).get_ui());
                }
                CHECK(images[p].infinite);
                CHECK(is_permutation_exhaustive(p, d, n) == oracle_is_permutation(p, d, n));
            }
        }
    }

    TEST_CASE("permutation criterion for p <= 60") {
        for (long p = 3; p <= 60; p += 2) {
            if (!oracle::naive_is_prime(p)) continue;
            Integer d = 2;
            while (legendre(d, p) != -1) ++d;
            for (std::uint64_t n = 1; n <= 30; ++n)
                CHECK(is_permutation_exhaustive(p, d, n) == (std::gcd<std::uint64_t>(n, p + 1) == 1));
        }
    }
}
