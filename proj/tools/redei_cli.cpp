#include "redei_cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "redei/approx.hpp"
#include "redei/contfrac.hpp"
#include "redei/padic.hpp"
#include "redei/redei.hpp"

namespace redei::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kMaxIndex = std::uint64_t{1} << 30;
constexpr std::uint64_t kMaxPrecision = 10000;

struct RunConfig {
    std::string d, z, p;
    std::uint64_t n = 0;
    std::uint64_t terms = 10;
    std::uint64_t prec = 10;
    std::uint64_t order = 1;
    std::uint64_t iters = 5;
    std::uint64_t count = 20;
    unsigned reps = 3;
    std::string exps = "10,14,18";
    std::string method = "all";
    std::string root = "smaller";
    std::string format = "text";
    bool simultaneous = false;
    bool unsafe_large = false;

    bool as_json() const { return format == "json"; }
};

Integer parse_int(const std::string& text, const char* name) {
    try {
        return Integer(text);
    } catch (const std::invalid_argument&) {
        throw ValidationError(std::string("--") + name + ": not an integer: '" + text + "'");
    }
}

Integer require_d(const RunConfig& cfg) {
    if (cfg.d.empty()) throw ValidationError("--d is required");
    const Integer d = parse_int(cfg.d, "d");
    if (d < 2) throw ValidationError("d must be at least 2");
    if (is_square(d)) throw ValidationError("d = " + d.get_str() + " is a perfect square");
    return d;
}

Integer require_z(const RunConfig& cfg, bool positive) {
    if (cfg.z.empty()) throw ValidationError("--z is required");
    const Integer z = parse_int(cfg.z, "z");
    if (z == 0) throw ValidationError("z must be nonzero");
    if (positive && z < 1) throw ValidationError("z must be positive for real approximation");
    return z;
}

Integer require_p(const RunConfig& cfg) {
    if (cfg.p.empty()) throw ValidationError("--p is required");
    const Integer p = parse_int(cfg.p, "p");
    if (p == 2 || !is_prime(p)) throw ValidationError("p must be an odd prime");
    return p;
}

void bound(const RunConfig& cfg, std::uint64_t value, std::uint64_t limit, const char* name) {
    if (!cfg.unsafe_large && value > limit)
        throw ValidationError(std::string("--") + name + " exceeds " + std::to_string(limit) +
                              " (pass --unsafe-large to override)");
}

json rational_json(const Rational& r) { return json{{"num", r.num().get_str()}, {"den", r.den().get_str()}}; }

json envelope(const char* command, json params) {
    return json{{"command", command},
                {"params", std::move(params)},
                {"values", json::object()},
                {"certificates", json::object()},
                {"timings", json::object()}};
}

template <class F>
double time_ns(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::nano>(t1 - t0).count();
}

// ---------------------------------------------------------------------------

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
    const Integer d = require_d(cfg);
    const Integer z = require_z(cfg, false);
    bound(cfg, cfg.n, kMaxIndex, "n");
    const RedeiParams params(d, z, cfg.n);

    static const std::vector<std::string> kMethods{"binomial", "recurrence", "matrix"};
    if (cfg.method != "all" &&
        std::find(kMethods.begin(), kMethods.end(), cfg.method) == kMethods.end())
        throw ValidationError("--method must be binomial, recurrence, matrix or all");

    // The slower evaluators only join the cross-check at moderate n.
    auto usable = [&](const std::string& m) {
        if (m == "binomial") return cfg.n <= 20000;
        if (m == "recurrence") return cfg.n <= 200000;
        return true;
    };
    auto evaluate = [&](const std::string& m) {
        if (m == "binomial") return redei_binomial(params);
        if (m == "recurrence") return redei_sequence(d, z, cfg.n + 1).back();
        return redei_matrix_pow(params);
    };

    const std::string primary = cfg.method == "all" ? "matrix" : cfg.method;
    json timings = json::object();
    RedeiPair result{params, 0, 0};
    timings[primary + "_ns"] = time_ns([&] { result = evaluate(primary); });
    std::vector<std::string> compared{primary};
    bool agree = true;
    for (const auto& m : kMethods) {
        if (m == primary || !usable(m)) continue;
        RedeiPair other{params, 0, 0};
        timings[m + "_ns"] = time_ns([&] { other = evaluate(m); });
        compared.push_back(m);
        agree = agree && other == result;
    }
    const Integer norm = norm_check(result);
    const bool has_q = cfg.n >= 1 && result.D != 0;

    if (cfg.as_json()) {
        json j = envelope("eval", {{"d", d.get_str()}, {"z", z.get_str()}, {"n", cfg.n}, {"method", primary}});
        j["values"] = {{"N", result.N.get_str()}, {"D", result.D.get_str()}, {"norm", norm.get_str()},
                       {"methods_compared", compared}};
        j["values"]["Q"] = has_q ? rational_json(Rational(result.N, result.D)) : json(nullptr);
        j["certificates"] = {{"norm_identity", true}, {"methods_agree", agree}};
        j["timings"] = timings;
        out << j.dump(2) << '\n';
    } else {
        out << "d = " << d << ", z = " << z << ", n = " << cfg.n << '\n';
        out << "N = " << result.N << '\n' << "D = " << result.D << '\n';
        out << "Q = " << (has_q ? Rational(result.N, result.D).str() : std::string("undefined")) << '\n';
        out << "norm N^2 - d D^2 = " << norm << " = (z^2 - d)^n\n";
        out << "methods agree (";
        for (std::size_t i = 0; i < compared.size(); ++i) out << (i ? ", " : "") << compared[i];
        out << "): " << (agree ? "yes" : "NO") << '\n';
    }
    if (!agree) throw ConsistencyError("evaluation methods disagree");
    return kOk;
}

int cmd_cf(const RunConfig& cfg, std::ostream& out) {
    const Integer d = require_d(cfg);
    const Integer z = require_z(cfg, true);
    if (cfg.terms == 0) throw ValidationError("--terms must be positive");
    bound(cfg, cfg.terms, kMaxPrecision, "terms");
    const auto cf = sqrt_cf(d, z);
    const auto conv = convergents_direct(cf, cfg.terms);
    const bool matches = cf_equals_redei(d, z, cfg.terms);

    if (cfg.as_json()) {
        json j = envelope("cf", {{"d", d.get_str()}, {"z", z.get_str()}, {"terms", cfg.terms}});
        json rows = json::array();
        for (std::size_t i = 0; i < conv.size(); ++i)
            rows.push_back({{"index", i},
                            {"value", rational_json(conv[i])},
                            {"error", rational_json((conv[i] * conv[i] - Rational(d)).abs())}});
        j["values"] = {{"cf", cf.str()}, {"convergents", rows}};
        j["certificates"] = {{"convergents_are_redei", matches}};
        out << j.dump(2) << '\n';
    } else {
        out << cf.str() << '\n';
        for (std::size_t i = 0; i < conv.size(); ++i)
            out << "c_" << i << " = " << conv[i] << "    |c^2 - d| = "
                << (conv[i] * conv[i] - Rational(d)).abs() << '\n';
        out << "convergent n equals Q_{n+1}: " << (matches ? "OK" : "FAILED") << '\n';
    }
    if (!matches) throw ConsistencyError("continued fraction convergents differ from Q_n");
    return kOk;
}

int cmd_newton(const RunConfig& cfg, std::ostream& out) {
    const Integer d = require_d(cfg);
    const Integer z = require_z(cfg, true);
    bound(cfg, cfg.iters, 30, "iters");
    const auto xs = newton_sqrt(d, z, cfg.iters);
    bool ok = true;
    for (std::size_t n = 0; n < xs.size(); ++n)
        ok = ok && xs[n] == q(RedeiParams(d, z, std::uint64_t{1} << n));
    ok = ok && xs.back() == newton_direct(d, z, cfg.iters);

    if (cfg.as_json()) {
        json j = envelope("newton", {{"d", d.get_str()}, {"z", z.get_str()}, {"iters", cfg.iters}});
        json rows = json::array();
        for (const auto& x : xs) rows.push_back(rational_json(x));
        j["values"] = {{"iterates", rows}};
        j["certificates"] = {{"iterates_equal_Q_2^n", ok}};
        out << j.dump(2) << '\n';
    } else {
        for (std::size_t n = 0; n < xs.size(); ++n) out << "x_" << n << " = " << xs[n] << '\n';
        out << "certificate x_n = Q_{2^n}(d, z): " << (ok ? "OK" : "FAILED") << '\n';
    }
    if (!ok) throw ConsistencyError("Newton iterates differ from Q_{2^n}");
    return kOk;
}

int cmd_pade(const RunConfig& cfg, std::ostream& out) {
    const Integer z = require_z(cfg, true);
    if (cfg.order > 31) throw ValidationError("--order must be at most 31");
    const auto c = pade_contact_order(z, 2 * cfg.order + 1);
    if (cfg.as_json()) {
        json j = envelope("pade", {{"z", z.get_str()}, {"order", cfg.order}});
        j["values"] = {{"n", c.n},
                       {"contact", c.contact},
                       {"numerator_degree", c.numerator_degree},
                       {"denominator_degree", c.denominator_degree}};
        j["certificates"] = {{"contact_at_least_2r", c.contact >= 2 * c.r},
                             {"contact_exactly_2r", c.exact},
                             {"degrees_equal_r", c.numerator_degree == c.r && c.denominator_degree == c.r}};
        out << j.dump(2) << '\n';
    } else {
        out << "Q_" << c.n << "(z^2 + t, " << z << ") vs sqrt(z^2 + t)\n";
        out << "contact " << c.contact << " (2r = " << 2 * c.r << (c.exact ? ", exact" : "") << ")\n";
        out << "degrees (" << c.numerator_degree << ", " << c.denominator_degree << ")\n";
    }
    return kOk;
}

int cmd_digits(const RunConfig& cfg, std::ostream& out) {
    const Integer d = require_d(cfg);
    const Integer z = cfg.z.empty() ? Integer(1) : require_z(cfg, true);
    const std::string s = decimal_digits(d, z, cfg.count);
    if (cfg.as_json()) {
        json j = envelope("digits", {{"d", d.get_str()}, {"z", z.get_str()}, {"count", cfg.count}});
        j["values"] = {{"digits", s}};
        j["certificates"] = {{"truncated_exactly", true}};
        out << j.dump(2) << '\n';
    } else {
        out << s << '\n';
    }
    return kOk;
}

int cmd_padic(const RunConfig& cfg, std::ostream& out) {
    const Integer d = require_d(cfg);
    const Integer p = require_p(cfg);
    if (cfg.prec == 0) throw ValidationError("--prec must be positive");
    bound(cfg, cfg.prec, kMaxPrecision, "prec");
    if (cfg.root != "smaller" && cfg.root != "larger")
        throw ValidationError("--root must be smaller or larger");
    const auto choice = cfg.root == "smaller" ? RootChoice::Smaller : RootChoice::Larger;
    const auto ctx = make_padic_context(d, p, choice, cfg.prec);

    std::vector<PadicOrder> orders;
    bool law = true;
    for (std::uint64_t n = 1; n <= cfg.prec; ++n) {
        orders.push_back(padic_order(ctx, n));
        law = law && orders.back().norm_order == static_cast<long>(n) * ctx.root_valuation;
    }
    const std::size_t newton_k = std::min<std::size_t>(cfg.prec - 1, 12);
    const bool newton_ok = check_newton_padic(ctx, newton_k);
    const bool linear_ok = check_linear_padic(ctx, cfg.prec - 1);
    const auto cf = sqrt_cf(d, ctx.z);

    SimultaneousReport rep;
    if (cfg.simultaneous) rep = simultaneous_report(ctx, cfg.prec);

    if (cfg.as_json()) {
        json j = envelope("padic", {{"d", d.get_str()}, {"p", p.get_str()}, {"prec", cfg.prec},
                                    {"root", cfg.root}, {"simultaneous", cfg.simultaneous}});
        json digits = json::array();
        for (const auto& b : ctx.expansion.digits) digits.push_back(b.get_str());
        json table = json::array();
        for (std::size_t i = 0; i < orders.size(); ++i) {
            json row{{"n", i + 1}, {"norm_order", orders[i].norm_order}, {"q_order", orders[i].q_order}};
            if (cfg.simultaneous) row["real_error"] = rational_json(rep.rows[i].real_error);
            table.push_back(row);
        }
        j["values"] = {{"z", ctx.z.get_str()}, {"root_valuation", ctx.root_valuation},
                       {"digits", digits}, {"valuations", table}, {"cf", cf.str()}};
        j["certificates"] = {{"norm_valuation_law", law},
                             {"newton_congruence", newton_ok},
                             {"newton_checked_through", newton_k},
                             {"linear_congruence", linear_ok}};
        if (cfg.simultaneous) {
            j["certificates"]["real_error_shrinks"] = rep.real_error_shrinks;
            j["certificates"]["real_monotone_from"] = rep.real_monotone_from;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "z = " << ctx.z << "  (v_p(z^2 - d) = " << ctx.root_valuation << ")\n";
        out << "digits [";
        for (std::size_t i = 0; i < ctx.expansion.digits.size(); ++i)
            out << (i ? ", " : "") << ctx.expansion.digits[i];
        out << "]\n";
        out << "cf " << cf.str() << '\n';
        out << std::setw(6) << "n" << std::setw(12) << "v_p(Q^2-d)";
        if (cfg.simultaneous) out << "  |Q^2 - d|";
        out << '\n';
        for (std::size_t i = 0; i < orders.size(); ++i) {
            out << std::setw(6) << i + 1 << std::setw(12) << orders[i].q_order;
            if (cfg.simultaneous) {
                const auto& e = rep.rows[i].real_error;
                out << "  " << std::setprecision(6) << e.raw().get_d();
            }
            out << '\n';
        }
        out << "a_n = Q_{2^n} mod p^{n+1} (n <= " << newton_k << "): " << (newton_ok ? "true" : "false") << '\n';
        out << "a_n = Q_{n+1} mod p^{n+1} (n <= " << cfg.prec - 1 << "): " << (linear_ok ? "true" : "false") << '\n';
        if (cfg.simultaneous)
            out << "real error shrinks: " << (rep.real_error_shrinks ? "yes" : "no")
                << " (monotone from n = " << rep.real_monotone_from << ")\n";
    }
    if (!law || !newton_ok || !linear_ok) throw ConsistencyError("p-adic certificate failed");
    return kOk;
}

std::vector<unsigned> parse_exponents(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const unsigned long e = std::stoul(item, &pos);
            if (pos != item.size() || e > 30) throw std::invalid_argument(item);
            out.push_back(static_cast<unsigned>(e));
        } catch (const std::exception&) {
            throw ValidationError("--exps: bad exponent '" + item + "' (expected 0..30)");
        }
    }
    if (out.empty()) throw ValidationError("--exps must list at least one exponent");
    return out;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
    const Integer d = cfg.d.empty() ? Integer(2) : require_d(cfg);
    const Integer z = cfg.z.empty() ? Integer(1) : require_z(cfg, true);
    if (cfg.reps == 0) throw ValidationError("--reps must be positive");
    const auto exps = parse_exponents(cfg.exps);
    const auto rows = run_bench(d, z, exps, cfg.reps);

    if (cfg.as_json()) {
        json arr = json::array();
        for (const auto& r : rows) {
            json j = envelope("bench", {{"d", d.get_str()}, {"z", z.get_str()}, {"method", r.method},
                                        {"exponent", r.exponent}, {"reps", cfg.reps}});
            j["values"] = {{"numerator_bits", r.numerator_bits},
                           {"denominator_bits", r.denominator_bits},
                           {"checksum", std::to_string(r.checksum)}};
            j["certificates"] = {{"checksums_agree", true}};
            j["timings"] = {{"median_ns", r.median_ns}, {"samples_ns", r.samples_ns}};
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << '\n';
    } else {
        out << std::left << std::setw(12) << "method" << std::right << std::setw(4) << "e"
            << std::setw(14) << "median_ms" << std::setw(12) << "bits" << "  checksum\n";
        for (const auto& r : rows)
            out << std::left << std::setw(12) << r.method << std::right << std::setw(4) << r.exponent
                << std::setw(14) << std::fixed << std::setprecision(3) << r.median_ns / 1e6
                << std::setw(12) << r.numerator_bits << "  " << std::hex << r.checksum << std::dec
                << '\n';
    }
    return kOk;
}

}  // namespace

std::uint64_t checksum(const Rational& r) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : r.str()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::vector<BenchResult> run_bench(const Integer& d, const Integer& z,
                                   const std::vector<unsigned>& exponents, unsigned repetitions) {
    std::vector<BenchResult> rows;
    for (unsigned e : exponents) {
        std::map<std::string, BenchResult> by_method;
        for (const char* method : {"direct", "sequential"}) {
            BenchResult r{method, e};
            Rational value;
            for (unsigned rep = 0; rep < repetitions; ++rep) {
                r.samples_ns.push_back(time_ns([&] {
                    value = r.method == "direct" ? newton_direct(d, z, e) : newton_sqrt(d, z, e).back();
                }));
            }
            auto sorted = r.samples_ns;
            std::sort(sorted.begin(), sorted.end());
            r.median_ns = sorted[sorted.size() / 2];
            r.numerator_bits = mpz_sizeinbase(value.num().get_mpz_t(), 2);
            r.denominator_bits = mpz_sizeinbase(value.den().get_mpz_t(), 2);
            r.checksum = checksum(value);
            by_method.emplace(method, std::move(r));
        }
        if (by_method.at("direct").checksum != by_method.at("sequential").checksum)
            throw ConsistencyError("bench checksum mismatch at e = " + std::to_string(e));
        for (auto& [name, r] : by_method) rows.push_back(std::move(r));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const BenchResult& a, const BenchResult& b) {
        return a.method != b.method ? a.method < b.method : a.exponent < b.exponent;
    });
    return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Redei rational functions: real and p-adic approximation of square roots", "redei"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", cfg.format, "Output format")
        ->envname("REDEI_FORMAT")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--unsafe-large", cfg.unsafe_large, "Lift the bounds on n, terms and precision");

    auto* eval = app.add_subcommand("eval", "N_n, D_n, Q_n by binomial sums, recurrence, matrix power");
    eval->add_option("--d", cfg.d, "Nonsquare d >= 2")->required();
    eval->add_option("--z", cfg.z, "Nonzero integer z")->required();
    eval->add_option("--n", cfg.n, "Index n")->required();
    eval->add_option("--method", cfg.method, "binomial | recurrence | matrix | all");

    auto* cf = app.add_subcommand("cf", "Periodic continued fraction whose convergents are Q_n");
    cf->add_option("--d", cfg.d)->required();
    cf->add_option("--z", cfg.z)->required();
    cf->add_option("--terms", cfg.terms, "Number of convergents");

    auto* newton = app.add_subcommand("newton", "Newton iterates and their identity with Q_{2^n}");
    newton->add_option("--d", cfg.d)->required();
    newton->add_option("--z", cfg.z)->required();
    newton->add_option("--iters", cfg.iters, "Number of Newton steps");

    auto* pade = app.add_subcommand("pade", "Series contact of Q_{2r+1} with sqrt(z^2 + t)");
    pade->add_option("--z", cfg.z)->required();
    pade->add_option("--order", cfg.order, "r, for n = 2r + 1");

    auto* digits = app.add_subcommand("digits", "Truncated decimal digits of sqrt d");
    digits->add_option("--d", cfg.d)->required();
    digits->add_option("--z", cfg.z, "Starting value (default 1)");
    digits->add_option("--count", cfg.count, "Digits after the point");

    auto* padic = app.add_subcommand("padic", "p-adic square root, congruences and periodic CF");
    padic->add_option("--d", cfg.d)->required();
    padic->add_option("--p", cfg.p)->required();
    padic->add_option("--prec", cfg.prec, "Number of p-adic digits");
    padic->add_option("--root", cfg.root, "smaller | larger");
    padic->add_flag("--simultaneous", cfg.simultaneous, "Add the real error column");

    auto* bench = app.add_subcommand("bench", "Sequential Newton vs direct doubling");
    bench->add_option("--d", cfg.d, "default 2");
    bench->add_option("--z", cfg.z, "default 1");
    bench->add_option("--exps", cfg.exps, "Comma-separated exponents e, n = 2^e");
    bench->add_option("--reps", cfg.reps, "Repetitions per measurement");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kValidation;
    }

    try {
        if (eval->parsed()) return cmd_eval(cfg, out);
        if (cf->parsed()) return cmd_cf(cfg, out);
        if (newton->parsed()) return cmd_newton(cfg, out);
        if (pade->parsed()) return cmd_pade(cfg, out);
        if (digits->parsed()) return cmd_digits(cfg, out);
        if (padic->parsed()) return cmd_padic(cfg, out);
        if (bench->parsed()) return cmd_bench(cfg, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const ConsistencyError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kValidation;
}

}  // namespace redei::cli
