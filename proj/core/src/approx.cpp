#include "redei/approx.hpp"

#include <algorithm>
#include <sstream>

#include "redei/redei.hpp"

namespace redei {

TruncatedSeries::TruncatedSeries(std::size_t order) : TruncatedSeries({}, order) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
    if (order > kMaxOrder) throw ValidationError("series order capped at 64");
    coeffs_.resize(order + 1, Rational(0));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.order() != order()) throw ValidationError("series orders differ");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (o.order() != order()) throw ValidationError("series orders differ");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw ValidationError("series orders differ");
    TruncatedSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= a.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw ValidationError("series orders differ");
    if (b.coeffs_[0].is_zero()) throw ValidationError("series division by a non-unit");
    // q_i = (a_i - sum_{j=1..i} b_j q_{i-j}) / b_0
    TruncatedSeries q(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
        Rational acc = a.coeffs_[i];
        for (std::size_t j = 1; j <= i; ++j) acc -= b.coeffs_[j] * q.coeffs_[i - j];
        q.coeffs_[i] = acc / b.coeffs_[0];
    }
    return q;
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const auto& c = coeffs_[i];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << '-';
        first = false;
        os << c.abs();
        if (i >= 1) os << "*t";
        if (i >= 2) os << '^' << i;
    }
    if (first) os << '0';
    os << " + O(t^" << coeffs_.size() << ')';
    return os.str();
}

namespace {

void require_positive_z(const Integer& d, const Integer& z) {
    if (z < 1) throw ValidationError("real approximation requires z >= 1");
    validate_dz(d, z);
}

}  // namespace

std::vector<Rational> newton_general(const Integer& a, const Integer& b, const Integer& c,
                                     const Rational& x0, std::size_t k) {
    if (b == 0) throw ValidationError("leading coefficient b must be nonzero");
    std::vector<Rational> xs{x0};
    xs.reserve(k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        const Rational& x = xs.back();
        const Rational slope = Rational(Integer(2 * b)) * x - Rational(a);
        if (slope.is_zero()) throw ValidationError("derivative vanishes");
        xs.push_back((Rational(b) * x * x + Rational(c)) / slope);
    }
    return xs;
}

std::vector<Rational> newton_sqrt(const Integer& d, const Integer& z, std::size_t k) {
    require_positive_z(d, z);
    return newton_general(0, 1, d, Rational(z), k);
}

Rational newton_direct(const Integer& d, const Integer& z, std::size_t n) {
    require_positive_z(d, z);
    Integer N = z, D = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer N2 = N * N + d * D * D;
        D = 2 * N * D;
        N = std::move(N2);
    }
    return Rational(N, D);
}

TruncatedSeries sqrt_series(const Integer& z, std::size_t m) {
    if (z < 1) throw ValidationError("z must be positive");
    std::vector<Rational> c;
    c.reserve(m + 1);
    const Rational half(1, 2);
    const Rational inv_z2(1, z * z);
    Rational binom = 1;                 // binom(1/2, k)
    Rational scale = Rational(z);       // z * z^{-2k}
    for (std::size_t k = 0; k <= m; ++k) {
        if (k > 0) {
            binom *= (half - Rational(static_cast<long>(k - 1))) / Rational(static_cast<long>(k));
            scale *= inv_z2;
        }
        c.push_back(binom * scale);
    }
    return TruncatedSeries(std::move(c), m);
}

namespace {

// (z^2 + t)^i as ascending coefficients.
std::vector<Integer> shifted_power(const Integer& z2, std::uint64_t i) {
    std::vector<Integer> c(i + 1);
    for (std::uint64_t j = 0; j <= i; ++j) {
        Integer bin;
        mpz_bin_uiui(bin.get_mpz_t(), i, j);
        c[j] = bin * ipow(z2, i - j);
    }
    return c;
}

void strip(std::vector<Integer>& v) {
    while (v.size() > 1 && v.back() == 0) v.pop_back();
}

TruncatedSeries as_series(const std::vector<Integer>& poly, std::size_t m) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < poly.size() && i <= m; ++i) c.emplace_back(poly[i]);
    return TruncatedSeries(std::move(c), m);
}

}  // namespace

RedeiPolynomials redei_polynomials(const Integer& z, std::uint64_t n) {
    if (z < 1) throw ValidationError("z must be positive");
    RedeiPolynomials out;
    out.numerator.assign(n / 2 + 1, 0);
    out.denominator.assign(n == 0 ? 1 : (n - 1) / 2 + 1, 0);
    const Integer z2 = z * z;
    for (std::uint64_t i = 0; 2 * i <= n; ++i) {
        const auto pw = shifted_power(z2, i);
        Integer bn, bd;
        mpz_bin_uiui(bn.get_mpz_t(), n, 2 * i);
        mpz_bin_uiui(bd.get_mpz_t(), n, 2 * i + 1);
        const Integer zn = ipow(z, n - 2 * i);
        const Integer zd = 2 * i + 1 <= n ? ipow(z, n - 2 * i - 1) : Integer(0);
        for (std::size_t j = 0; j < pw.size(); ++j) {
            out.numerator[j] += bn * pw[j] * zn;
            if (2 * i + 1 <= n) out.denominator[j] += bd * pw[j] * zd;
        }
    }
    strip(out.numerator);
    strip(out.denominator);
    return out;
}

TruncatedSeries redei_series(const Integer& z, std::uint64_t n, std::size_t m) {
    if (n == 0) throw ValidationError("Q_n is defined for n >= 1");
    const auto polys = redei_polynomials(z, n);
    const auto den = as_series(polys.denominator, m);
    if (den[0].is_zero()) throw ValidationError("D_n series has zero constant term");
    return as_series(polys.numerator, m) / den;
}

PadeContact pade_contact_order(const Integer& z, std::uint64_t n) {
    if (n % 2 == 0) throw ValidationError("Pade contact is defined for odd n = 2r + 1");
    PadeContact out;
    out.n = n;
    out.r = static_cast<std::size_t>(n / 2);
    if (2 * out.r + 1 > TruncatedSeries::kMaxOrder)
        throw ValidationError("index too large for the series order cap");

    const std::size_t m = std::min<std::size_t>(TruncatedSeries::kMaxOrder, 2 * out.r + 4);
    const auto lhs = redei_series(z, n, m);
    const auto rhs = sqrt_series(z, m);
    std::size_t agree = 0;
    while (agree <= m && lhs[agree] == rhs[agree]) ++agree;
    if (agree == 0) throw ConsistencyError("constant terms differ");
    out.contact = agree - 1;
    out.exact = out.contact == 2 * out.r;

    const auto polys = redei_polynomials(z, n);
    out.numerator_degree = polys.numerator_degree();
    out.denominator_degree = polys.denominator_degree();

    if (out.contact < 2 * out.r)
        throw ConsistencyError("Q_" + std::to_string(n) + " contact order " +
                               std::to_string(out.contact) + " below 2r");
    if (out.numerator_degree != out.r || out.denominator_degree != out.r)
        throw ConsistencyError("t-degrees of N, D differ from r");
    return out;
}

Rational error_exact(const Integer& d, const Integer& z, std::uint64_t n) {
    require_positive_z(d, z);
    if (n == 0) throw ValidationError("Q_n is defined for n >= 1");
    const RedeiParams params(d, z, n);
    const auto pair = redei_matrix_pow(params);
    Integer norm = expected_norm(params);
    return Rational(abs(norm), pair.D * pair.D);
}

std::string decimal_digits(const Integer& d, const Integer& z, std::size_t digits) {
    require_positive_z(d, z);
    if (digits > 10000) throw ValidationError("at most 10^4 digits");
    const Integer scale = ipow(10, digits);
    const Integer target = d * scale * scale;  // floor(sqrt(target)) is the answer

    // Q_{2^k} by repeated squaring; stop once floor(Q * 10^t) = F passes
    // F^2 <= d 10^{2t} < (F+1)^2.
    Integer N = z, D = 1;
    for (int k = 0; k < 64; ++k) {
        Integer F = N * scale / D;  // floor for positive operands
        if (F * F <= target && (F + 1) * (F + 1) > target) {
            std::string s = F.get_str();
            if (digits == 0) return s;
            if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
            s.insert(s.size() - digits, ".");
            return s;
        }
        Integer N2 = N * N + d * D * D;
        D = 2 * N * D;
        N = std::move(N2);
    }
    throw ConsistencyError("decimal expansion did not converge");
}

}  // namespace redei
