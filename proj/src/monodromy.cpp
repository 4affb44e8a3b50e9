#include "lame/monodromy.hpp"

#include <algorithm>

namespace lame {

Mat2 continue_along(const LameOperator& op, const std::vector<BigComplex>& waypoints,
                    const PrecisionContext& ctx) {
    if (waypoints.size() < 2) return Mat2::identity(ctx.bits());
    if (dist(waypoints.front(), waypoints.back()) > ctx.eps())
        throw Error("continue_along: waypoint list is not closed");

    Mat2 M = Mat2::identity(ctx.bits());
    for (size_t k = 0; k + 1 < waypoints.size(); ++k) {
        if (dist(waypoints[k], waypoints[k + 1]).is_zero()) continue;
        FundamentalMatrix F = series_at(op, waypoints[k], ctx);
        M = F.evaluate(waypoints[k + 1]) * M;
    }
    return M;
}

MonodromySet monodromy_set(const LameOperator& op, const PathPlan& plan,
                           const PrecisionContext& ctx) {
    mpfr_prec_t prec = ctx.bits();
    MonodromySet ms;
    ms.A1 = continue_along(op, plan.loops[0], ctx);
    ms.A2 = continue_along(op, plan.loops[1], ctx);
    ms.A3 = continue_along(op, plan.loops[2], ctx);

    Mat2 prod = ms.A1 * ms.A2 * ms.A3;
    ms.A_inf = prod.inverse();

    ms.pair_traces = {(ms.A3 * ms.A2).trace(), (ms.A1 * ms.A2).trace(), (ms.A3 * ms.A1).trace()};
    for (int k = 0; k < 3; ++k) ms.trace_squares[k] = ms.pair_traces[k] * ms.pair_traces[k];

    // digits from the invariant residuals
    BigFloat res(prec);
    auto feed = [&](const BigFloat& r) { res = max(res, abs(r)); };
    for (const Mat2* A : {&ms.A1, &ms.A2, &ms.A3}) {
        BigComplex tr = A->trace();
        BigComplex dt = A->det();
        feed(tr.abs());
        feed((dt + 1).abs());
    }
    BigComplex tr_prod = prod.trace();
    feed((prod.det() + 1).abs());
    feed(tr_prod.re());
    BigFloat half_angle = BigFloat::pi(prec) / (2L * op.e);
    feed(abs(tr_prod.im()) - cos(half_angle) * 2);

    if (res.is_zero()) {
        ms.digits_est = ctx.digits;
    } else {
        long est = (-log10(res)).to_long();
        ms.digits_est = static_cast<int>(std::clamp(est, 0L, static_cast<long>(ctx.digits)));
    }
    return ms;
}

MatchReport match_triple(const MonodromySet& ms, const std::array<BigFloat, 3>& target_squares,
                         const BigFloat& tol) {
    for (auto& t : target_squares)
        if (t.sign() <= 0) throw Error("match_triple: target squares must be positive");

    static const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};

    MatchReport report;
    report.max_deviation = BigFloat::of(0L, tol.prec());
    bool have_best = false;
    for (auto& p : perms) {
        BigFloat dev(tol.prec());
        for (int i = 0; i < 3; ++i)
            dev = max(dev, (ms.trace_squares[p[i]] - BigComplex(target_squares[i])).abs());
        if (!have_best || dev < report.max_deviation) {
            report.max_deviation = dev;
            report.permutation = p;
            have_best = true;
        }
        if (dev < tol) {
            report.matched = true;
            report.permutation = p;
            report.max_deviation = dev;
            report.exact_order = (p[0] == 0 && p[1] == 1 && p[2] == 2);
            return report;
        }
    }
    return report;
}

PrecisionContext tuned_context(const LameOperator& op, double step_ratio,
                               const PrecisionContext& ctx) {
    PrecisionContext out = ctx;
    out.series_order = truncation_order_for(op, step_ratio, ctx).order;
    return out;
}

} // namespace lame
