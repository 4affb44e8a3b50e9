#include "lame/lame.hpp"

#include <algorithm>

namespace lame {

LameOperator LameOperator::make(DepressedCubic cubic, int e, BigComplex C) {
    if (e < 2) throw Error("LameOperator: ramification index e must be >= 2");
    if (cubic.roots.size() != 3) throw Error("LameOperator: cubic must carry its three roots");
    LameOperator op;
    op.cubic = std::move(cubic);
    op.e = e;
    op.accessory = std::move(C);
    return op;
}

BigFloat LameOperator::n_product(mpfr_prec_t prec) const {
    long e2 = static_cast<long>(e) * e;
    return BigFloat::ratio(1 - e2, 4 * e2, prec);
}

BigFloat LameOperator::t_coefficient(mpfr_prec_t prec) const {
    long e2 = static_cast<long>(e) * e;
    return BigFloat::ratio(e2 - 1, 4 * e2, prec);
}

BigFloat LameOperator::dist_to_singular(const BigComplex& p) const {
    BigFloat d = dist(p, cubic.roots[0]);
    for (int k = 1; k < 3; ++k) d = min(d, dist(p, cubic.roots[k]));
    return d;
}

// ---------------------------------------------------------------------------
// series_at
// ---------------------------------------------------------------------------

namespace {

// One solution of the u-expansion recurrence with initial (a0, a1):
//   a_{k+2} = -( c1 (k+1)(2k+1)/2 a_{k+1} + (c2 k^2 + q0) a_k
//                + (2(2k-1)(k-1) + q1) a_{k-1} ) / ( c0 (k+2)(k+1) )
// where P(p+u) = c0 + c1 u + c2 u^2 + 4 u^3 and q0 + q1 u is the expanded
// accessory term.
std::vector<BigComplex> run_recurrence(long a0, long a1, long N, const BigComplex& c0,
                                       const BigComplex& c1, const BigComplex& c2,
                                       const BigComplex& q0, const BigFloat& q1,
                                       mpfr_prec_t prec) {
    std::vector<BigComplex> a;
    a.reserve(N + 1);
    a.push_back(BigComplex::of(a0, 0L, prec));
    if (N >= 1) a.push_back(BigComplex::of(a1, 0L, prec));
    BigComplex inv_c0 = BigComplex::one(prec) / c0;
    for (long k = 0; k + 2 <= N; ++k) {
        BigComplex num = c1 * a[k + 1] * ((k + 1) * (2 * k + 1));
        num = num / 2;
        num += (c2 * (k * k) + q0) * a[k];
        if (k >= 1) {
            BigFloat s3 = q1 + (2 * (2 * k - 1) * (k - 1));
            num += a[k - 1] * s3;
        }
        BigComplex next = -(num * inv_c0) / ((k + 2) * (k + 1));
        a.push_back(std::move(next));
    }
    return a;
}

} // namespace

FundamentalMatrix series_at(const LameOperator& op, const BigComplex& p,
                            const PrecisionContext& ctx) {
    mpfr_prec_t prec = ctx.bits();
    BigFloat d = op.dist_to_singular(p);
    if (d <= BigFloat::pow10(-ctx.digits / 2, prec))
        throw NearSingular("series_at: expansion point within 10^(-digits/2) of a singular point");

    BigComplex pp = p.at_prec(prec);
    BigComplex g2 = op.cubic.g2.at_prec(prec), g3 = op.cubic.g3.at_prec(prec);
    BigComplex c0 = ((pp * pp) * pp) * 4 - g2 * pp - g3; // P(p)
    BigComplex c1 = (pp * pp) * 12 - g2;                 // P'(p)
    BigComplex c2 = pp * 12;                             // P''(p)/2
    BigFloat q1 = op.t_coefficient(prec);
    BigComplex q0 = pp * q1 - op.accessory.at_prec(prec);

    long N = ctx.series_order;
    auto s0 = run_recurrence(1, 0, N, c0, c1, c2, q0, q1, prec);
    auto s1 = run_recurrence(0, 1, N, c0, c1, c2, q0, q1, prec);
    return FundamentalMatrix(pp, std::move(s0), std::move(s1), d);
}

FundamentalMatrix::FundamentalMatrix(BigComplex p, std::vector<BigComplex> s0,
                                     std::vector<BigComplex> s1, BigFloat radius)
    : p_(std::move(p)), s0_(std::move(s0)), s1_(std::move(s1)), radius_(std::move(radius)) {}

Mat2 FundamentalMatrix::evaluate(const BigComplex& t) const {
    BigComplex u = t - p_;
    if (u.abs() * 4 > radius_ * 3)
        throw OutsideDisk("FundamentalMatrix::evaluate: point outside 0.75 * radius");

    mpfr_prec_t prec = std::max(u.prec(), p_.prec());
    auto horner_pair = [&](const std::vector<BigComplex>& s) {
        // value and derivative in one sweep
        BigComplex val = BigComplex::zero(prec), der = BigComplex::zero(prec);
        for (size_t k = s.size(); k-- > 0;) {
            der = der * u + val;
            val = val * u + s[k];
        }
        return std::pair<BigComplex, BigComplex>(val, der);
    };
    auto [y0, dy0] = horner_pair(s0_);
    auto [y1, dy1] = horner_pair(s1_);
    return Mat2(y0, y1, dy0, dy1);
}

// ---------------------------------------------------------------------------
// truncation_order_for
// ---------------------------------------------------------------------------

TruncationOrder truncation_order_for(const LameOperator& op, double step_ratio,
                                     const PrecisionContext& ctx) {
    if (!(step_ratio > 0.0) || step_ratio > 0.75)
        throw Error("truncation_order_for: step_ratio must lie in (0, 0.75]");
    const long cap = 1000000;
    mpfr_prec_t prec = ctx.bits();

    // representative ordinary point: the most comfortably ordinary candidate
    BigFloat scale = BigFloat::of(1L, prec);
    for (auto& r : op.cubic.roots) scale = max(scale, r.abs());
    std::vector<BigComplex> candidates = {
        BigComplex::i(prec),
        BigComplex::of(1, 1, prec),
        BigComplex::of(1, 0, prec),
        BigComplex::of(0, 2, prec),
        BigComplex::zero(prec),
        BigComplex(BigFloat::of(0L, prec), scale + 1),
    };
    BigComplex trial = candidates[0];
    BigFloat best = op.dist_to_singular(trial);
    for (auto& c : candidates) {
        BigFloat d = op.dist_to_singular(c);
        if (d > best) {
            best = d;
            trial = c;
        }
    }

    BigFloat ratio = BigFloat::of(step_ratio, prec);
    BigFloat target = BigFloat::pow10(-(ctx.digits + ctx.guard), prec);
    BigFloat one_minus = BigFloat::of(1L, prec) - ratio;

    long n_try = std::max<long>(64, ctx.series_order);
    while (true) {
        PrecisionContext trial_ctx = ctx;
        trial_ctx.series_order = std::min(n_try, cap);
        FundamentalMatrix fm = series_at(op, trial, trial_ctx);
        const auto& s0 = fm.series(0);
        const auto& s1 = fm.series(1);
        BigFloat step = ratio * fm.radius();
        BigFloat pw = BigFloat::of(1L, prec);
        for (long i = 0; i < 16; ++i) pw *= step;
        for (long n = 16; n <= trial_ctx.series_order; ++n, pw *= step) {
            BigFloat amp = max(max(s0[n].abs(), s0[n - 1].abs()), max(s1[n].abs(), s1[n - 1].abs()));
            if (amp * pw / one_minus < target) return {n, true};
        }
        if (n_try >= cap) return {cap, false};
        n_try *= 2;
    }
}

// ---------------------------------------------------------------------------
// singular_series
// ---------------------------------------------------------------------------

SingularBasis singular_series(const LameOperator& op, int root_index,
                              const PrecisionContext& ctx) {
    if (root_index < 0 || root_index > 2) throw Error("singular_series: root index out of range");
    mpfr_prec_t prec = ctx.bits();
    BigComplex t0 = op.cubic.roots[root_index].at_prec(prec);
    BigComplex g2 = op.cubic.g2.at_prec(prec);
    BigComplex d1 = (t0 * t0) * 12 - g2; // P'(t_i), nonzero for distinct roots
    BigComplex d2 = t0 * 12;
    BigFloat q1 = op.t_coefficient(prec);
    BigComplex q0 = t0 * q1 - op.accessory.at_prec(prec);

    auto frobenius = [&](const BigFloat& sigma) {
        std::vector<BigComplex> b;
        b.reserve(ctx.series_order + 1);
        b.push_back(BigComplex::one(prec));
        for (long k = 0; k + 1 <= ctx.series_order; ++k) {
            BigFloat ks = sigma + k;
            BigComplex num = (d2 * (ks * ks) + q0) * b[k];
            if (k >= 1) {
                BigFloat km1 = ks - 1, km2 = ks - 2;
                BigFloat s3 = km1 * km2 * 4 + km1 * 6 + q1;
                num += b[k - 1] * s3;
            }
            // coefficient of b_{k+1} is d1 (k+1+sigma)(k+sigma+1/2)
            BigFloat den_factor = (ks + 1) * (ks + BigFloat::ratio(1, 2, prec));
            b.push_back(-(num / (d1 * den_factor)));
        }
        return b;
    };

    SingularBasis out;
    out.point = t0;
    out.analytic = frobenius(BigFloat::of(0L, prec));
    out.half = frobenius(BigFloat::ratio(1, 2, prec));
    return out;
}

} // namespace lame
