#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "lame/precision.hpp"

namespace lame {

/// Integer-coefficient polynomial, constant term first.
using IntPoly = std::vector<mpz_class>;

/// Degree after stripping trailing zero coefficients (-1 for the zero poly).
int poly_degree(const IntPoly& p);
/// Content 1, positive leading coefficient, no trailing zeros.
IntPoly primitive_part(IntPoly p);
/// Largest |coefficient|.
mpz_class poly_height(const IntPoly& p);
BigComplex eval_intpoly(const IntPoly& p, const BigComplex& z);
BigFloat eval_intpoly(const IntPoly& p, const BigFloat& x);
IntPoly intpoly_derivative(const IntPoly& p);
/// Human-readable form like "54x + 55".
std::string intpoly_str(const IntPoly& p);

BigFloat to_bigfloat(const mpz_class& z, mpfr_prec_t prec);
BigFloat to_bigfloat(const mpq_class& q, mpfr_prec_t prec);

// ---------------------------------------------------------------------------
// AlgebraicNumber: an integer polynomial plus an approximation isolating the
// intended root. The polynomial is stored as given; irreducibility is not
// verified.
// ---------------------------------------------------------------------------
struct AlgebraicNumber {
    IntPoly minpoly;
    BigComplex approx;
    int digits_certified = 0;

    static AlgebraicNumber rational(const mpq_class& q, mpfr_prec_t prec);
    bool is_rational() const { return poly_degree(minpoly) == 1; }
    /// For degree-1 polynomials only: the exact value.
    mpq_class rational_value() const;
};

/// The root of a.minpoly nearest a.approx, refined to ctx.digits by Newton
/// iteration. Throws RootLost when the iteration diverges or the root cannot
/// be distinguished from a neighbor at the requested precision.
BigComplex evaluate(const AlgebraicNumber& a, const PrecisionContext& ctx);

/// Integer-relation recognition of `value` as an algebraic number of degree
/// <= max_degree with coefficient magnitudes <= 10^max_height_digits.
/// Returns nothing when no relation passes the residual test; never returns
/// a polynomial with |p(value)| >= 10^(-3/4 * ctx.digits).
std::optional<AlgebraicNumber> identify(const BigComplex& value, int max_degree,
                                        int max_height_digits, const PrecisionContext& ctx);

/// Best rational approximation p/q of x with q <= qmax and
/// |x - p/q| < tol, by continued fractions. Exposed for tests.
std::optional<mpq_class> rational_reconstruct(const BigFloat& x, const mpz_class& qmax,
                                              const BigFloat& tol);

/// Exact integral LLL reduction (delta = 3/4) of the rows of `basis`.
/// Rows must be linearly independent. Exposed for tests.
void lll_reduce(std::vector<std::vector<mpz_class>>& basis);

} // namespace lame
