#include "redei/contfrac.hpp"

#include <sstream>

#include "redei/redei.hpp"

namespace redei {

RationalCF::RationalCF(std::vector<PartialQuotient> terms, std::optional<std::size_t> period_start)
    : terms_(std::move(terms)), period_start_(period_start) {
    if (terms_.empty()) throw ValidationError("continued fraction needs at least one term");
    for (const auto& t : terms_)
        if (t.b == 0) throw ValidationError("partial quotient with zero denominator");
    if (period_start_ && *period_start_ >= terms_.size())
        throw ValidationError("period start beyond the stored terms");
}

std::optional<std::size_t> RationalCF::length() const {
    if (period_start_) return std::nullopt;
    return terms_.size();
}

const PartialQuotient& RationalCF::term(std::size_t i) const {
    if (i < terms_.size()) return terms_[i];
    if (!period_start_) throw ValidationError("index beyond finite continued fraction");
    const std::size_t start = *period_start_;
    return terms_[start + (i - start) % (terms_.size() - start)];
}

std::string RationalCF::str() const {
    std::ostringstream os;
    os << '[' << terms_[0].value();
    for (std::size_t i = 1; i < terms_.size(); ++i) {
        if (period_start_ && i == *period_start_) os << (i == 1 ? "; period(" : ", period(");
        else os << (i == 1 ? "; " : ", ");
        os << terms_[i].value();
    }
    if (period_start_) os << ')';
    os << ']';
    return os.str();
}

namespace {

void require_terms(const RationalCF& cf, std::size_t k) {
    if (k == 0) throw ValidationError("convergent count must be positive");
    if (auto len = cf.length(); len && k > *len)
        throw ValidationError("requested more convergents than the continued fraction has terms");
}

}  // namespace

std::vector<ConvergentPair> convergent_tracks(const RationalCF& cf, std::size_t k) {
    require_terms(cf, k);
    std::vector<ConvergentPair> out;
    out.reserve(k);
    Rational p2 = 0, p1 = 1;  // p_{n-2}, p_{n-1}
    Rational q2 = 1, q1 = 0;
    for (std::size_t n = 0; n < k; ++n) {
        const Rational c = cf.term(n).value();
        Rational p = c * p1 + p2;
        Rational qn = c * q1 + q2;
        out.push_back({p, qn});
        p2 = std::move(p1);
        p1 = std::move(p);
        q2 = std::move(q1);
        q1 = std::move(qn);
    }
    return out;
}

std::vector<Rational> convergents_direct(const RationalCF& cf, std::size_t k) {
    std::vector<Rational> out;
    out.reserve(k);
    std::size_t n = 0;
    for (const auto& [p, qn] : convergent_tracks(cf, k)) {
        if (qn.is_zero()) throw ValidationError("convergent undefined at n = " + std::to_string(n));
        out.push_back(p / qn);
        ++n;
    }
    return out;
}

Rational ConvergentRecord::value(const Integer& b0) const {
    if (t == 0) throw ValidationError("convergent undefined at n = " + std::to_string(index));
    return Rational(s, b0 * t);
}

std::vector<ConvergentRecord> convergents_lemma(const RationalCF& cf, std::size_t k) {
    require_terms(cf, k);
    std::vector<ConvergentRecord> out;
    out.reserve(k);
    const auto& t0 = cf.term(0);
    out.push_back({0, t0.a, 1, 1});
    if (k > 1) {
        const auto& t1 = cf.term(1);
        out.push_back({1, t0.a * t1.a + t0.b * t1.b, t1.a, t1.b});
    }
    for (std::size_t n = 2; n < k; ++n) {
        const auto& cur = cf.term(n);
        const Integer bb = cur.b * cf.term(n - 1).b;
        const auto& r1 = out[n - 1];
        const auto& r2 = out[n - 2];
        out.push_back({n, cur.a * r1.s + bb * r2.s, cur.a * r1.t + bb * r2.t, cur.b * r1.u});
    }
    return out;
}

RationalCF sqrt_cf(const Integer& d, const Integer& z) {
    if (z <= 0) throw ValidationError("z must be positive");
    validate_dz(d, z);
    const Integer two_z = 2 * z;
    return RationalCF({{z, 1}, {two_z, d - z * z}, {two_z, 1}}, 1);
}

bool cf_equals_redei(const Integer& d, const Integer& z, std::size_t k) {
    const auto conv = convergents_direct(sqrt_cf(d, z), k);
    const auto seq = redei_sequence(d, z, k + 1);
    for (std::size_t n = 1; n <= k; ++n) {
        if (seq[n].D == 0) return false;
        if (conv[n - 1] != Rational(seq[n].N, seq[n].D)) return false;
    }
    return true;
}

std::string ClassicalCF::str() const {
    std::ostringstream os;
    os << '[' << a0 << "; period(";
    for (std::size_t i = 0; i < period.size(); ++i) os << (i ? ", " : "") << period[i];
    os << ")]";
    return os.str();
}

ClassicalCF classical_sqrt_cf(const Integer& d) {
    if (d < 2 || is_square(d)) throw ValidationError("d must be a nonsquare >= 2");
    ClassicalCF out;
    mpz_sqrt(out.a0.get_mpz_t(), d.get_mpz_t());
    Integer m = 0, q = 1, a = out.a0;
    do {
        m = q * a - m;
        q = (d - m * m) / q;
        a = (out.a0 + m) / q;
        out.period.push_back(a);
    } while (a != 2 * out.a0);
    return out;
}

}  // namespace redei
