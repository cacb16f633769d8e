// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "redei/approx.hpp"
#include "redei/contfrac.hpp"
#include "redei/padic.hpp"
#include "redei/redei.hpp"
#include "redei_cli.hpp"

using namespace redei;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && pass) detail << "first failure: " << what << "; ";
        pass = pass && cond;
    }
};

using Criterion = std::function<void(Outcome&)>;

// 1. Worked example: sqrt(26) in Q_229.
void worked_example(Outcome& o) {
    const auto roots = sqrt_mod_p(26, 229);
    o.expect(roots && (roots->smaller == 22 || roots->larger == 22), "22 is a root of x^2 = 26 mod 229");

    const auto cf = padic_cf(26, 229, RootChoice::Smaller);
    o.expect(cf.str() == "[22; period(-22/229, 44)]", "CF prints as [22; period(-22/229, 44)], got " + cf.str());

    // c_n = Q_n: convergent n-1 of the CF.
    const auto conv = convergents_direct(cf, 20);
    for (std::size_t n = 1; n <= 20; ++n) {
        const Rational& c = conv[n - 1];
        const long v = vp(c * c - Rational(26), 229);
        o.expect(v == static_cast<long>(n), "v_229(c_" + std::to_string(n) + "^2 - 26) = " + std::to_string(n));
    }
    const Rational& c20 = conv[19];
    const Rational err = (c20 * c20 - Rational(26)).abs();
    const Rational tol(Integer(1), Integer(1000));
    o.detail << "|c_20^2 - 26| = " << err.raw().get_d() << " (tolerance 1e-3); ";
    o.expect(err < tol, "|c_20^2 - 26| < 1e-3");
}

// 2. Three evaluators agree; norm identity.
void cross_method(Outcome& o) {
    std::mt19937_64 rng(20240201);
    std::uniform_int_distribution<long> zdist(-1000, 1000);
    std::uniform_int_distribution<std::uint64_t> ndist(0, 200);
    for (int it = 0; it < 200; ++it) {
        const Integer d = oracle::random_nonsquare(rng, 2, 1'000'000);
        long z = 0;
        while (z == 0) z = zdist(rng);
        const RedeiParams params(d, z, ndist(rng));
        const auto a = redei_binomial(params);
        const auto b = redei_sequence(d, z, params.n + 1).back();
        const auto c = redei_matrix_pow(params);
        o.expect(a == b && b == c, "evaluators agree");
        o.expect(c.N * c.N - d * c.D * c.D == expected_norm(params), "norm identity");
    }
}

// 3. CF convergents are Q_n; integer tracks equal rational tracks.
void cf_theorem(Outcome& o) {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> zdist(1, 1000);
    for (int it = 0; it < 50; ++it) {
        const Integer d = oracle::random_nonsquare(rng, 2, 1'000'000);
        const long z = zdist(rng);
        o.expect(cf_equals_redei(d, z, 100), "cf_equals_redei(" + d.get_str() + ", " + std::to_string(z) + ", 100)");
    }
    std::uniform_int_distribution<long> qd(-20, 20);
    for (int it = 0; it < 100; ++it) {
        std::vector<PartialQuotient> terms;
        for (int i = 0; i < 40; ++i) {
            long b = 0;
            while (b == 0) b = qd(rng);
            terms.push_back({qd(rng), b});
        }
        const RationalCF cf(std::move(terms));
        const auto tracks = convergent_tracks(cf, 40);
        const auto recs = convergents_lemma(cf, 40);
        const Integer b0 = cf.term(0).b;
        for (std::size_t n = 0; n < 40; ++n) {
            o.expect(recs[n].p(b0) == tracks[n].p && recs[n].q() == tracks[n].q, "p_n, q_n tracks agree");
            if (!tracks[n].q.is_zero())
                o.expect(recs[n].value(b0) == tracks[n].p / tracks[n].q, "convergent values agree");
        }
    }
}

const std::vector<std::pair<long, long>>& grid20() {
    static const std::vector<std::pair<long, long>> g{
        {2, 1},  {3, 1},   {5, 2},   {6, 2},    {7, 3},     {10, 3},  {11, 3},
        {12, 1}, {13, 4},  {26, 22}, {26, 5},   {31, 6},    {99, 10}, {101, 7},
        {2, 5},  {7, 100}, {1000, 31}, {999983, 1000}, {123456, 1}, {65537, 256}};
    return g;
}

// 4. Newton iterates are Q_{2^n}.
void newton_theorem(Outcome& o) {
    for (const auto& [d, z] : grid20()) {
        const auto xs = newton_sqrt(d, z, 12);
        for (std::size_t n = 0; n <= 12; ++n) {
            o.expect(xs[n] == q({d, z, std::uint64_t{1} << n}), "x_n = Q_{2^n}");
            o.expect(newton_direct(d, z, n) == xs[n], "newton_direct = x_n");
        }
    }
}

// 5. Pade contact and degrees.
void pade_theorem(Outcome& o) {
    int exact = 0, total = 0;
    for (long z = 1; z <= 10; ++z)
        for (std::size_t r = 1; r <= 8; ++r) {
            const auto c = pade_contact_order(z, 2 * r + 1);
            o.expect(c.contact >= 2 * r, "contact >= 2r");
            o.expect(c.numerator_degree == r && c.denominator_degree == r, "t-degrees equal r");
            exact += c.exact ? 1 : 0;
            ++total;
        }
    o.detail << "contact exactly 2r in " << exact << "/" << total << " cases; ";
}

// 6. p-adic convergence and digit congruences.
void padic_theorem(Outcome& o) {
    std::mt19937_64 rng(31337);
    std::vector<long> primes;
    for (long p = 3; p < 1000; p += 2)
        if (oracle::naive_is_prime(p)) primes.push_back(p);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    int found = 0;
    while (found < 30) {
        const long p = primes[pick(rng)];
        const Integer d = oracle::random_nonsquare(rng, 2, 1'000'000);
        if (mod(d, p) == 0 || legendre(d, p) != 1) continue;
        ++found;
        const auto ctx = make_padic_context(d, p);
        const auto seq = redei_sequence(d, ctx.z, 101);
        for (std::uint64_t n = 1; n <= 100; ++n) {
            const auto& pr = seq[n];
            const long v = oracle::trial_valuation(pr.N * pr.N - d * pr.D * pr.D, p);
            o.expect(padic_order(ctx, n).norm_order == v, "padic_order matches trial division");
            o.expect(v == static_cast<long>(n) * ctx.root_valuation, "v_p = n v_p(z^2 - d)");
        }
        o.expect(check_newton_padic(ctx, 8), "check_newton_padic(k = 8)");
        o.expect(check_linear_padic(ctx, 50), "check_linear_padic(k = 50)");
    }
}

// 7. Permutation criterion on P^1(F_p).
void permutation_criterion(Outcome& o) {
    int cases = 0;
    for (long p = 3; p <= 100; p += 2) {
        if (!oracle::naive_is_prime(p)) continue;
        Integer d = 2;
        while (legendre(d, p) != -1) ++d;
        for (std::uint64_t n = 1; n <= 30; ++n, ++cases)
            o.expect(is_permutation_exhaustive(p, d, n) == (std::gcd<std::uint64_t>(n, p + 1) == 1),
                     "bijective iff gcd(n, p+1) = 1 at p = " + std::to_string(p) + ", n = " + std::to_string(n));
    }
    o.detail << cases << " (p, n) cases; ";
}

// 8. Q_mn = Q_m(d, Q_n).
void multiplicative(Outcome& o) {
    const std::vector<std::pair<long, long>> grid{{2, 1}, {3, 2}, {10, 3}, {26, 22}, {7, -2},
                                                  {13, 5}, {50, 7}, {99, -10}, {5, 11}, {1001, 3}};
    for (const auto& [d, z] : grid)
        for (std::uint64_t m = 1; m <= 12; ++m)
            for (std::uint64_t n = 1; n <= 12; ++n)
                o.expect(q({d, z, m * n}) == q_rational(d, q({d, z, n}), m), "Q_mn = Q_m(d, Q_n)");
}

// 9. Bench checksums and bit-length growth.
void bench_integrity(Outcome& o) {
    std::ostringstream out, err;
    const int code = cli::run({"--format", "json", "bench", "--d", "2", "--z", "1", "--exps", "10,14,18", "--reps", "1"},
                              out, err);
    o.expect(code == 0, "bench exits 0");
    if (code != 0) return;
    const auto rows = nlohmann::json::parse(out.str());
    std::map<unsigned, std::set<std::string>> sums;
    std::map<unsigned, double> bits;
    for (const auto& r : rows) {
        const unsigned e = r["params"]["exponent"];
        sums[e].insert(r["values"]["checksum"].get<std::string>());
        bits[e] = r["values"]["numerator_bits"].get<double>();
    }
    o.expect(sums.size() == 3, "three exponents");
    for (const auto& [e, s] : sums) o.expect(s.size() == 1, "checksums agree at e = " + std::to_string(e));
    for (auto it = bits.begin(); std::next(it) != bits.end(); ++it) {
        const auto nx = std::next(it);
        const double slope = std::log2(nx->second / it->second) / (nx->first - it->first);
        o.detail << "bit-length growth per e step " << it->first << "->" << nx->first << ": x"
                 << std::exp2(slope) << "; ";
        o.expect(std::abs(slope - 1.0) <= 0.1, "bit length doubles per exponent step (within 10%)");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion>> criteria{
        {"1 worked example sqrt(26) in Q_229", worked_example},
        {"2 cross-method equality and norm identity", cross_method},
        {"3 CF convergents are Q_n; integer vs rational tracks", cf_theorem},
        {"4 Newton iterates are Q_{2^n}", newton_theorem},
        {"5 Pade contact order and degrees", pade_theorem},
        {"6 p-adic convergence and congruences", padic_theorem},
        {"7 permutation criterion on P^1(F_p)", permutation_criterion},
        {"8 multiplicative property", multiplicative},
        {"9 bench checksums and bit-length slope", bench_integrity},
    };

    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what() << "; ";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << "  (" << secs << " s)";
        if (!o.detail.str().empty()) std::cout << "  " << o.detail.str();
        std::cout << std::endl;
        failures += o.pass ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
