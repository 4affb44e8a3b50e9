#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "lame/errors.hpp"

namespace lame {

/// mpfr precision (bits) that comfortably carries `digits` decimal digits.
mpfr_prec_t bits_for_digits(int digits);

// ---------------------------------------------------------------------------
// BigFloat: an arbitrary-precision real.
//
// Every value carries its own precision; arithmetic results are allocated at
// the larger precision of the two operands and correctly rounded to nearest.
// There is no global precision state.
// ---------------------------------------------------------------------------
class BigFloat {
public:
    BigFloat();
    explicit BigFloat(mpfr_prec_t prec);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat of(long v, mpfr_prec_t prec);
    static BigFloat of(double v, mpfr_prec_t prec);
    /// Rational p/q, correctly rounded.
    static BigFloat ratio(long p, long q, mpfr_prec_t prec);
    /// Parses "123", "-1.5", "2.3e-7". Throws Error on malformed input.
    static BigFloat parse(const std::string& s, mpfr_prec_t prec);
    /// 10^k.
    static BigFloat pow10(long k, mpfr_prec_t prec);
    static BigFloat pi(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    /// Same value rounded/padded to a new precision.
    BigFloat at_prec(mpfr_prec_t prec) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const;
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Scientific decimal string with the given number of significant digits,
    /// e.g. "-1.0185185185e0". No precision suffix.
    std::string str(int digits) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

private:
    mpfr_t v_;
};

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, long b);
BigFloat operator*(long a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, long b);
BigFloat operator+(const BigFloat& a, long b);
BigFloat operator-(const BigFloat& a, long b);

bool operator<(const BigFloat& a, const BigFloat& b);
bool operator>(const BigFloat& a, const BigFloat& b);
bool operator<=(const BigFloat& a, const BigFloat& b);
bool operator>=(const BigFloat& a, const BigFloat& b);
bool operator==(const BigFloat& a, const BigFloat& b);
bool operator!=(const BigFloat& a, const BigFloat& b);
int cmp(const BigFloat& a, long b);

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a); // requires a >= 0
BigFloat hypot(const BigFloat& a, const BigFloat& b);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat cos(const BigFloat& a);
BigFloat sin(const BigFloat& a);
BigFloat log10(const BigFloat& a); // requires a > 0
BigFloat log2(const BigFloat& a);  // requires a > 0
BigFloat min(const BigFloat& a, const BigFloat& b);
BigFloat max(const BigFloat& a, const BigFloat& b);

// ---------------------------------------------------------------------------
// BigComplex
// ---------------------------------------------------------------------------
class BigComplex {
public:
    BigComplex() = default;
    BigComplex(BigFloat re, BigFloat im);
    /// Real value.
    explicit BigComplex(BigFloat re);

    static BigComplex of(long re, long im, mpfr_prec_t prec);
    static BigComplex of(double re, double im, mpfr_prec_t prec);
    static BigComplex of(int re, int im, mpfr_prec_t prec) {
        return of(static_cast<long>(re), static_cast<long>(im), prec);
    }
    static BigComplex zero(mpfr_prec_t prec);
    static BigComplex one(mpfr_prec_t prec);
    static BigComplex i(mpfr_prec_t prec);

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    BigFloat& re() { return re_; }
    BigFloat& im() { return im_; }

    mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }
    BigComplex at_prec(mpfr_prec_t prec) const;
    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

    BigComplex conj() const;
    BigFloat abs() const;   // |z|
    BigFloat norm2() const; // re^2 + im^2
    BigFloat arg() const;   // atan2(im, re) in (-pi, pi]
    BigComplex sqrt() const; // principal branch

    std::string str(int digits) const; // "re,im" or just "re" when im == 0

    BigComplex operator-() const;
    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);

private:
    BigFloat re_, im_;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigFloat& b);
BigComplex operator*(const BigFloat& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, long b);
BigComplex operator/(const BigComplex& a, long b);
BigComplex operator/(const BigComplex& a, const BigFloat& b);
BigComplex operator+(const BigComplex& a, long b);
BigComplex operator-(const BigComplex& a, long b);
/// |a - b|
BigFloat dist(const BigComplex& a, const BigComplex& b);

// ---------------------------------------------------------------------------
// 2x2 complex matrix. Layout: (*this)(r, c), row-major.
// ---------------------------------------------------------------------------
class Mat2 {
public:
    Mat2() = default;
    Mat2(BigComplex a, BigComplex b, BigComplex c, BigComplex d);
    static Mat2 identity(mpfr_prec_t prec);

    const BigComplex& operator()(int r, int c) const { return m_[2 * r + c]; }
    BigComplex& operator()(int r, int c) { return m_[2 * r + c]; }

    BigComplex det() const;
    BigComplex trace() const;
    Mat2 inverse() const;

private:
    BigComplex m_[4];
};

Mat2 operator*(const Mat2& a, const Mat2& b);

// ---------------------------------------------------------------------------
// PrecisionContext
// ---------------------------------------------------------------------------
struct PrecisionContext {
    int digits = 40;        // decimal digits of working precision, >= 20
    int guard = 8;          // extra digits against round-off, >= 5
    long series_order = 160; // truncation order N of power series, >= 8

    static PrecisionContext make(int digits, int guard = 8, long series_order = 0);

    /// Same context at a different precision; the series order is rescaled
    /// proportionally (doubling digits roughly doubles N).
    PrecisionContext with_digits(int new_digits) const;

    mpfr_prec_t bits() const { return bits_for_digits(digits + guard); }
    /// Residual tolerance 10^(guard - digits).
    BigFloat eps() const { return BigFloat::pow10(guard - digits, bits()); }

    BigFloat real(long v) const { return BigFloat::of(v, bits()); }
    BigFloat real(const std::string& s) const { return BigFloat::parse(s, bits()); }
    BigFloat ratio(long p, long q) const { return BigFloat::ratio(p, q, bits()); }
    BigComplex cplx(long re, long im = 0) const { return BigComplex::of(re, im, bits()); }
};

// ---------------------------------------------------------------------------
// Polynomial root finding.
// ---------------------------------------------------------------------------

/// Horner evaluation of sum coeffs[k] * z^k (constant term first).
BigComplex poly_eval(const std::vector<BigComplex>& coeffs, const BigComplex& z);
/// Derivative coefficients.
std::vector<BigComplex> poly_derivative(const std::vector<BigComplex>& coeffs);

/// All roots of a polynomial with complex coefficients (constant first,
/// leading coefficient nonzero), by Aberth-Ehrlich iteration seeded at machine
/// precision. Multiple roots are returned as an error only through the
/// callers' residual checks; the iteration itself does not separate them.
std::vector<BigComplex> poly_roots(const std::vector<BigComplex>& coeffs,
                                   const PrecisionContext& ctx);

/// The three roots of 4 t^3 - g2 t - g3, pairwise distinct, sorted by
/// (Re, Im) lexicographically. Throws DegenerateCubic when the discriminant
/// g2^3 - 27 g3^2 is indistinguishable from zero at working precision.
std::vector<BigComplex> cubic_roots(const BigComplex& g2, const BigComplex& g3,
                                    const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// Decimal serialization with an explicit digit count, e.g.
// "-1.0185185185e0@64" and "1.5e0,-2.25e0@40" for complex values.
// ---------------------------------------------------------------------------
std::string packed_str(const BigFloat& v, int digits);
std::string packed_str(const BigComplex& v, int digits);
BigFloat parse_packed_real(const std::string& s, int default_digits = 40);
BigComplex parse_packed_complex(const std::string& s, int default_digits = 40);

} // namespace lame
