#pragma once

#include <vector>

#include "lame/curve.hpp"

namespace lame {

/// P(t) y'' + (1/2) P'(t) y' - (n(n+1) t + C) y = 0 with P = 4t^3 - g2 t - g3
/// and n = 1/(2e) - 1/2; the classical algebraic form of w'' = (n(n+1) p(z) + C) w
/// under t = p(z). The three finite singular points are the roots of P; local
/// exponents there are {0, 1/2}, and {-n/2, (n+1)/2} at infinity.
struct LameOperator {
    DepressedCubic cubic;
    int e = 2;
    BigComplex accessory; // the parameter C

    static LameOperator make(DepressedCubic cubic, int e, BigComplex C);

    /// n(n+1) = (1 - e^2) / (4 e^2).
    BigFloat n_product(mpfr_prec_t prec) const;
    /// Coefficient of t in the zeroth-order term: -n(n+1). The classical
    /// Weierstrass-form equation w'' = (n(n+1) p(z) + B) w pulls back to
    /// P y'' + (1/2) P' y' - (n(n+1) t + B) y = 0, and only this sign gives
    /// the local exponents {-n/2, (n+1)/2} at infinity.
    BigFloat t_coefficient(mpfr_prec_t prec) const;
    BigFloat dist_to_singular(const BigComplex& p) const;
};

/// Truncated basis y0 = 1 + O(u^2), y1 = u + O(u^2) at an ordinary point,
/// u = t - p, plus the distance to the nearest singular point.
class FundamentalMatrix {
public:
    FundamentalMatrix(BigComplex p, std::vector<BigComplex> s0, std::vector<BigComplex> s1,
                      BigFloat radius);

    const BigComplex& expansion_point() const { return p_; }
    const BigFloat& radius() const { return radius_; }
    long order() const { return static_cast<long>(s0_.size()) - 1; }
    /// Coefficients of the sigma = 0 / sigma = 1 solution.
    const std::vector<BigComplex>& series(int sigma) const { return sigma == 0 ? s0_ : s1_; }

    /// [[y0(t), y1(t)], [y0'(t), y1'(t)]]: columns are the basis solutions,
    /// so evaluate(expansion_point) is the identity matrix. Enforces the
    /// safety margin |t - p| <= 0.75 * radius (throws OutsideDisk).
    Mat2 evaluate(const BigComplex& t) const;

private:
    BigComplex p_;
    std::vector<BigComplex> s0_, s1_;
    BigFloat radius_;
};

/// Power-series basis at an ordinary point p, coefficients from the
/// recurrence of the operator expanded in u = t - p, truncated at
/// ctx.series_order. Throws NearSingular when dist(p, roots) <= 10^(-digits/2).
FundamentalMatrix series_at(const LameOperator& op, const BigComplex& p,
                            const PrecisionContext& ctx);

struct TruncationOrder {
    long order = 0;
    bool confident = true;
};

/// Smallest N whose estimated geometric tail
/// max(|a_N|, |a_N-1|) * (step_ratio * R)^N / (1 - step_ratio)
/// falls below 10^-(digits+guard), measured on a trial expansion.
/// Capped at 10^6 (confident = false when the cap is hit).
TruncationOrder truncation_order_for(const LameOperator& op, double step_ratio,
                                     const PrecisionContext& ctx);

/// Frobenius basis at the cubic root `root_index`: the analytic solution
/// (exponent 0) and the series factor of the (t - t_i)^(1/2) solution
/// (exponent 1/2, prefactor not included). Used for exponent checks only;
/// analytic continuation never expands at singular points.
struct SingularBasis {
    BigComplex point;
    std::vector<BigComplex> analytic; // exponent 0
    std::vector<BigComplex> half;     // series part of the exponent-1/2 solution
};

SingularBasis singular_series(const LameOperator& op, int root_index,
                              const PrecisionContext& ctx);

} // namespace lame
