#include "lame/precision.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <utility>

namespace lame {

mpfr_prec_t bits_for_digits(int digits) {
    if (digits < 1) digits = 1;
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

// ---------------------------------------------------------------------------
// BigFloat
// ---------------------------------------------------------------------------

BigFloat::BigFloat() {
    mpfr_init2(v_, 64);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, 64);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::of(long v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(double v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::ratio(long p, long q, mpfr_prec_t prec) {
    if (q == 0) throw Error("BigFloat::ratio: zero denominator");
    BigFloat r(prec);
    mpfr_set_si(r.v_, p, MPFR_RNDN);
    mpfr_div_si(r.v_, r.v_, q, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::parse(const std::string& s, mpfr_prec_t prec) {
    BigFloat r(prec);
    if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw Error("BigFloat::parse: malformed number '" + s + "'");
    return r;
}

BigFloat BigFloat::pow10(long k, mpfr_prec_t prec) {
    BigFloat r(prec);
    if (k >= 0) {
        mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(k), MPFR_RNDN);
    } else {
        mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(-k), MPFR_RNDN);
        mpfr_si_div(r.v_, 1, r.v_, MPFR_RNDN);
    }
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::at_prec(mpfr_prec_t prec) const {
    BigFloat r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

long BigFloat::to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

std::string BigFloat::str(int digits) const {
    if (digits < 2) digits = 2;
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    if (is_zero()) return "0e0";
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string m(raw);
    mpfr_free_str(raw);
    std::string sign_part;
    if (!m.empty() && m[0] == '-') {
        sign_part = "-";
        m.erase(0, 1);
    }
    // strip trailing zeros but keep at least one digit
    size_t last = m.find_last_not_of('0');
    if (last == std::string::npos) last = 0;
    m.erase(last + 1);
    std::string out = sign_part + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

#define LAME_BF_BINOP(op, fn)                                              \
    BigFloat operator op(const BigFloat& a, const BigFloat& b) {           \
        BigFloat r(std::max(a.prec(), b.prec()));                          \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                          \
        return r;                                                          \
    }

LAME_BF_BINOP(+, mpfr_add)
LAME_BF_BINOP(-, mpfr_sub)
LAME_BF_BINOP(*, mpfr_mul)
LAME_BF_BINOP(/, mpfr_div)
#undef LAME_BF_BINOP

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    mpfr_add(v_, v_, o.raw(), MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
    mpfr_sub(v_, v_, o.raw(), MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
    mpfr_mul(v_, v_, o.raw(), MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
    mpfr_div(v_, v_, o.raw(), MPFR_RNDN);
    return *this;
}

BigFloat operator*(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
BigFloat operator*(long a, const BigFloat& b) { return b * a; }
BigFloat operator/(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
BigFloat operator+(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
BigFloat operator-(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) < 0; }
bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) > 0; }
bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) <= 0; }
bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) >= 0; }
bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) == 0; }
bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) != 0; }
int cmp(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b); }

#define LAME_BF_UNFN(name, fn)                       \
    BigFloat name(const BigFloat& a) {               \
        BigFloat r(a.prec());                        \
        fn(r.raw(), a.raw(), MPFR_RNDN);             \
        return r;                                    \
    }

LAME_BF_UNFN(abs, mpfr_abs)
LAME_BF_UNFN(sqrt, mpfr_sqrt)
LAME_BF_UNFN(cos, mpfr_cos)
LAME_BF_UNFN(sin, mpfr_sin)
LAME_BF_UNFN(log10, mpfr_log10)
LAME_BF_UNFN(log2, mpfr_log2)
#undef LAME_BF_UNFN

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat min(const BigFloat& a, const BigFloat& b) { return a < b ? a : b; }
BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

// ---------------------------------------------------------------------------
// BigComplex
// ---------------------------------------------------------------------------

BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
    mpfr_prec_t p = std::max(re_.prec(), im_.prec());
    if (re_.prec() != p) re_ = re_.at_prec(p);
    if (im_.prec() != p) im_ = im_.at_prec(p);
}

BigComplex::BigComplex(BigFloat re) : re_(std::move(re)), im_(re_.prec()) {}

BigComplex BigComplex::of(long re, long im, mpfr_prec_t prec) {
    return {BigFloat::of(re, prec), BigFloat::of(im, prec)};
}
BigComplex BigComplex::of(double re, double im, mpfr_prec_t prec) {
    return {BigFloat::of(re, prec), BigFloat::of(im, prec)};
}
BigComplex BigComplex::zero(mpfr_prec_t prec) { return of(0L, 0L, prec); }
BigComplex BigComplex::one(mpfr_prec_t prec) { return of(1L, 0L, prec); }
BigComplex BigComplex::i(mpfr_prec_t prec) { return of(0L, 1L, prec); }

BigComplex BigComplex::at_prec(mpfr_prec_t prec) const {
    return {re_.at_prec(prec), im_.at_prec(prec)};
}

BigComplex BigComplex::conj() const { return {re_, -im_}; }
BigFloat BigComplex::abs() const { return hypot(re_, im_); }
BigFloat BigComplex::norm2() const { return re_ * re_ + im_ * im_; }
BigFloat BigComplex::arg() const { return atan2(im_, re_); }

BigComplex BigComplex::sqrt() const {
    // principal branch: Re(result) >= 0
    mpfr_prec_t p = prec();
    if (im_.is_zero()) {
        if (re_.sign() >= 0) return BigComplex(lame::sqrt(re_));
        return {BigFloat::of(0L, p), lame::sqrt(-re_)};
    }
    BigFloat r = abs();
    BigFloat u = lame::sqrt((r + re_) / 2);
    BigFloat v = lame::sqrt((r - re_) / 2);
    if (im_.sign() < 0) v = -v;
    return {u, v};
}

std::string BigComplex::str(int digits) const {
    if (im_.is_zero()) return re_.str(digits);
    return re_.str(digits) + "," + im_.str(digits);
}

BigComplex BigComplex::operator-() const { return {-re_, -im_}; }

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}
BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}
BigComplex& BigComplex::operator*=(const BigComplex& o) {
    *this = *this * o;
    return *this;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re() + b.re(), a.im() + b.im()};
}
BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re() - b.re(), a.im() - b.im()};
}
BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}
BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat n = b.norm2();
    return {(a.re() * b.re() + a.im() * b.im()) / n, (a.im() * b.re() - a.re() * b.im()) / n};
}
BigComplex operator*(const BigComplex& a, const BigFloat& b) { return {a.re() * b, a.im() * b}; }
BigComplex operator*(const BigFloat& a, const BigComplex& b) { return b * a; }
BigComplex operator*(const BigComplex& a, long b) { return {a.re() * b, a.im() * b}; }
BigComplex operator/(const BigComplex& a, long b) { return {a.re() / b, a.im() / b}; }
BigComplex operator/(const BigComplex& a, const BigFloat& b) { return {a.re() / b, a.im() / b}; }
BigComplex operator+(const BigComplex& a, long b) { return {a.re() + b, a.im()}; }
BigComplex operator-(const BigComplex& a, long b) { return {a.re() - b, a.im()}; }

BigFloat dist(const BigComplex& a, const BigComplex& b) { return (a - b).abs(); }

// ---------------------------------------------------------------------------
// Mat2
// ---------------------------------------------------------------------------

Mat2::Mat2(BigComplex a, BigComplex b, BigComplex c, BigComplex d) {
    m_[0] = std::move(a);
    m_[1] = std::move(b);
    m_[2] = std::move(c);
    m_[3] = std::move(d);
}

Mat2 Mat2::identity(mpfr_prec_t prec) {
    return {BigComplex::one(prec), BigComplex::zero(prec), BigComplex::zero(prec),
            BigComplex::one(prec)};
}

BigComplex Mat2::det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
BigComplex Mat2::trace() const { return m_[0] + m_[3]; }

Mat2 Mat2::inverse() const {
    BigComplex d = det();
    return {m_[3] / d, -m_[1] / d, -m_[2] / d, m_[0] / d};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
            a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

// ---------------------------------------------------------------------------
// PrecisionContext
// ---------------------------------------------------------------------------

PrecisionContext PrecisionContext::make(int digits, int guard, long series_order) {
    if (digits < 20) throw Error("PrecisionContext: digits must be >= 20");
    if (guard < 5) throw Error("PrecisionContext: guard must be >= 5");
    if (series_order == 0) series_order = 4L * digits;
    if (series_order < 8) throw Error("PrecisionContext: series_order must be >= 8");
    PrecisionContext ctx;
    ctx.digits = digits;
    ctx.guard = guard;
    ctx.series_order = series_order;
    return ctx;
}

PrecisionContext PrecisionContext::with_digits(int new_digits) const {
    if (new_digits < 20) throw Error("PrecisionContext: digits must be >= 20");
    if (new_digits == digits) return *this;
    long n = std::max(8L, (series_order * new_digits + digits / 2) / digits);
    return make(new_digits, guard, n);
}

// ---------------------------------------------------------------------------
// Polynomial roots
// ---------------------------------------------------------------------------

BigComplex poly_eval(const std::vector<BigComplex>& coeffs, const BigComplex& z) {
    if (coeffs.empty()) throw Error("poly_eval: empty polynomial");
    BigComplex acc = coeffs.back();
    for (size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * z + coeffs[k];
    return acc;
}

std::vector<BigComplex> poly_derivative(const std::vector<BigComplex>& coeffs) {
    std::vector<BigComplex> d;
    for (size_t k = 1; k < coeffs.size(); ++k) d.push_back(coeffs[k] * static_cast<long>(k));
    return d;
}

namespace {

// Durand-Kerner at machine precision, for seeding only.
std::vector<std::complex<double>> machine_roots(const std::vector<std::complex<double>>& c) {
    size_t n = c.size() - 1;
    std::vector<std::complex<double>> monic(c);
    for (auto& x : monic) x /= c.back();
    double radius = 1.0;
    for (size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(monic[k]));
    radius = 1.0 + radius;
    std::vector<std::complex<double>> z(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> w = seed;
    for (size_t j = 0; j < n; ++j, w *= seed) z[j] = radius * w / std::abs(w) * (0.5 + 0.5 * (j + 1.0) / n);
    for (int it = 0; it < 500; ++it) {
        double moved = 0.0;
        for (size_t j = 0; j < n; ++j) {
            std::complex<double> p = monic[n];
            for (size_t k = n; k-- > 0;) p = p * z[j] + monic[k];
            std::complex<double> den(1.0, 0.0);
            for (size_t k = 0; k < n; ++k)
                if (k != j) den *= (z[j] - z[k]);
            if (std::abs(den) == 0.0) {
                z[j] += std::complex<double>(1e-8, 1e-8);
                continue;
            }
            std::complex<double> step = p / den;
            z[j] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-14) break;
    }
    return z;
}

} // namespace

std::vector<BigComplex> poly_roots(const std::vector<BigComplex>& coeffs,
                                   const PrecisionContext& ctx) {
    std::vector<BigComplex> c(coeffs);
    while (!c.empty() && c.back().abs().is_zero()) c.pop_back();
    if (c.size() < 2) throw Error("poly_roots: degree must be >= 1");
    size_t n = c.size() - 1;
    mpfr_prec_t prec = ctx.bits();

    if (n == 1) return {-(c[0] / c[1]).at_prec(prec)};

    std::vector<std::complex<double>> cd;
    double scale = 0.0;
    for (auto& x : c) scale = std::max({scale, std::fabs(x.re().to_double()), std::fabs(x.im().to_double())});
    for (auto& x : c) cd.emplace_back(x.re().to_double() / scale, x.im().to_double() / scale);
    auto seeds = machine_roots(cd);

    std::vector<BigComplex> z;
    for (auto& s : seeds) z.push_back(BigComplex::of(s.real(), s.imag(), prec));

    std::vector<BigComplex> dc = poly_derivative(c);
    BigFloat tol = BigFloat::pow10(-(ctx.digits + ctx.guard - 2), prec);

    // Aberth-Ehrlich at full precision.
    for (int it = 0; it < 400; ++it) {
        BigFloat moved = BigFloat::of(0L, prec);
        for (size_t j = 0; j < n; ++j) {
            BigComplex p = poly_eval(c, z[j]);
            BigComplex dp = poly_eval(dc, z[j]);
            if (dp.abs().is_zero()) {
                z[j] += BigComplex::of(1e-9, 1e-9, prec);
                continue;
            }
            BigComplex w = p / dp;
            BigComplex s = BigComplex::zero(prec);
            for (size_t k = 0; k < n; ++k)
                if (k != j) s += BigComplex::one(prec) / (z[j] - z[k]);
            BigComplex den = BigComplex::one(prec) - w * s;
            BigComplex step = den.abs().is_zero() ? w : w / den;
            z[j] -= step;
            moved = max(moved, step.abs() / max(BigFloat::of(1L, prec), z[j].abs()));
        }
        if (moved < tol) break;
    }
    return z;
}

std::vector<BigComplex> cubic_roots(const BigComplex& g2, const BigComplex& g3,
                                    const PrecisionContext& ctx) {
    mpfr_prec_t prec = ctx.bits();
    BigComplex G2 = g2.at_prec(prec), G3 = g3.at_prec(prec);
    BigComplex disc = G2 * G2 * G2 - G3 * G3 * 27;
    if (disc.abs() <= ctx.eps())
        throw DegenerateCubic("cubic_roots: discriminant g2^3 - 27 g3^2 vanishes at working precision");

    std::vector<BigComplex> coeffs = {-G3, -G2, BigComplex::zero(prec),
                                      BigComplex::of(4L, 0L, prec)};
    auto roots = poly_roots(coeffs, ctx);

    std::sort(roots.begin(), roots.end(), [](const BigComplex& a, const BigComplex& b) {
        int c = mpfr_cmp(a.re().raw(), b.re().raw());
        if (c != 0) return c < 0;
        return mpfr_cmp(a.im().raw(), b.im().raw()) < 0;
    });

    // residual and separation guards
    BigFloat eps = ctx.eps();
    for (auto& r : roots) {
        BigFloat bound = max(BigFloat::of(1L, prec), r.abs());
        bound = bound * bound * bound;
        if (poly_eval(coeffs, r).abs() > eps * bound)
            throw Error("cubic_roots: root residual above tolerance");
    }
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (dist(roots[a], roots[b]) <= eps)
                throw DegenerateCubic("cubic_roots: roots collide at working precision");
    return roots;
}

// ---------------------------------------------------------------------------
// Packed decimal strings
// ---------------------------------------------------------------------------

std::string packed_str(const BigFloat& v, int digits) {
    return v.str(digits) + "@" + std::to_string(digits);
}

std::string packed_str(const BigComplex& v, int digits) {
    return v.re().str(digits) + "," + v.im().str(digits) + "@" + std::to_string(digits);
}

namespace {

std::pair<std::string, int> split_digits(const std::string& s, int default_digits) {
    size_t at = s.rfind('@');
    if (at == std::string::npos) return {s, default_digits};
    int d = std::atoi(s.substr(at + 1).c_str());
    if (d < 2) throw Error("packed number: bad digit count in '" + s + "'");
    return {s.substr(0, at), d};
}

} // namespace

BigFloat parse_packed_real(const std::string& s, int default_digits) {
    auto [body, d] = split_digits(s, default_digits);
    return BigFloat::parse(body, bits_for_digits(d));
}

BigComplex parse_packed_complex(const std::string& s, int default_digits) {
    auto [body, d] = split_digits(s, default_digits);
    mpfr_prec_t prec = bits_for_digits(d);
    size_t comma = body.find(',');
    if (comma == std::string::npos) return BigComplex(BigFloat::parse(body, prec));
    return {BigFloat::parse(body.substr(0, comma), prec),
            BigFloat::parse(body.substr(comma + 1), prec)};
}

} // namespace lame
