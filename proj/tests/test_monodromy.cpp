#include <doctest.h>

#include "lame/monodromy.hpp"

using namespace lame;

namespace {

AlgebraicNumber rat(long p, long q = 1) { return AlgebraicNumber::rational(mpq_class(p, q), 64); }

AlgebraicNumber quad(IntPoly poly, double approx_re, double approx_im = 0.0) {
    AlgebraicNumber a;
    a.minpoly = std::move(poly);
    a.approx = BigComplex::of(approx_re, approx_im, 128);
    return a;
}

// catalog 12/3 carries the corrected curve y^2 = x^3 - x (the printed one is
// not a g3 = 0 curve and does not reproduce its own triple); e = 3, C = 0
LameOperator op_12_3(const PrecisionContext& ctx) {
    WeierstrassCurve w;
    w.a1 = rat(0);
    w.a2 = rat(0);
    w.a3 = rat(0);
    w.a4 = rat(-1);
    w.a6 = rat(0);
    return LameOperator::make(depress(w, ctx), 3, BigComplex::zero(ctx.bits()));
}

// catalog 1/10: y^2 + xy + y = x^3 - 19x + 26, e = 3, C = 95/432
LameOperator op_1_10(const PrecisionContext& ctx) {
    WeierstrassCurve w;
    w.a1 = rat(1);
    w.a2 = rat(0);
    w.a3 = rat(1);
    w.a4 = rat(-19);
    w.a6 = rat(26);
    return LameOperator::make(depress(w, ctx), 3,
                              BigComplex(to_bigfloat(mpq_class(95, 432), ctx.bits())));
}

} // namespace

TEST_CASE("continue_along: constant and non-enclosing loops are trivial") {
    auto base = PrecisionContext::make(40);
    auto op = op_12_3(base);
    auto ctx = tuned_context(op, 0.5, base);
    mpfr_prec_t prec = ctx.bits();

    BigComplex p = BigComplex::i(prec);
    Mat2 c = continue_along(op, {p, p, p}, ctx);
    CHECK(dist(c(0, 0), BigComplex::one(prec)).is_zero());
    CHECK(c(0, 1).abs().is_zero());

    // a small square around the basepoint encloses no singular point
    std::vector<BigComplex> square = {p,
                                      p + BigComplex::of(0.2, 0.0, prec),
                                      p + BigComplex::of(0.2, 0.2, prec),
                                      p + BigComplex::of(0.0, 0.2, prec),
                                      p};
    Mat2 m = continue_along(op, square, ctx);
    BigFloat err(prec);
    err = max(err, dist(m(0, 0), BigComplex::one(prec)));
    err = max(err, m(0, 1).abs());
    err = max(err, m(1, 0).abs());
    err = max(err, dist(m(1, 1), BigComplex::one(prec)));
    CHECK(err.to_double() < 1e-30);
}

TEST_CASE("single loop: trace 0, det -1; product trace pins the loop order") {
    auto base = PrecisionContext::make(40);
    auto op = op_12_3(base);
    auto ctx = tuned_context(op, 0.5, base);
    auto plan = plan_loops(op.cubic, 0.5, ctx);
    auto ms = monodromy_set(op, plan, ctx);

    CHECK(ms.digits_est >= 25);
    for (const Mat2* A : {&ms.A1, &ms.A2, &ms.A3}) {
        CHECK(A->trace().abs().to_double() < 1e-25);
        CHECK((A->det() + 1).abs().to_double() < 1e-25);
    }
    // tr(A1 A2 A3) = +-2i cos(pi/(2e))
    BigComplex tp = (ms.A1 * ms.A2 * ms.A3).trace();
    CHECK(abs(tp.re()).to_double() < 1e-25);
    BigFloat want = cos(BigFloat::pi(ctx.bits()) / 6) * 2;
    CHECK(abs(abs(tp.im()) - want).to_double() < 1e-25);
    // A_inf inverts the product
    Mat2 id = (ms.A1 * ms.A2 * ms.A3) * ms.A_inf;
    CHECK(dist(id(0, 0), BigComplex::one(ctx.bits())).to_double() < 1e-25);
    CHECK(id(0, 1).abs().to_double() < 1e-25);
}

TEST_CASE("catalog 12/3 (corrected curve): trace squares (4+2rt3, 4+2rt3, 7+4rt3)") {
    auto base = PrecisionContext::make(40);
    auto op = op_12_3(base);
    auto ctx = tuned_context(op, 0.5, base);
    auto ms = monodromy_set(op, plan_loops(op.cubic, 0.5, ctx), ctx);

    BigFloat rt3 = sqrt(ctx.real(3));
    std::array<BigFloat, 3> target = {ctx.real(4) + rt3 * 2, ctx.real(4) + rt3 * 2,
                                      ctx.real(7) + rt3 * 4};
    auto report = match_triple(ms, target, BigFloat::pow10(-25, ctx.bits()));
    CHECK(report.matched);
}

TEST_CASE("catalog 1/10 at C = 95/432: trace squares (10, 6, 15)") {
    auto base = PrecisionContext::make(40);
    auto op = op_1_10(base);
    auto ctx = tuned_context(op, 0.5, base);
    auto ms = monodromy_set(op, plan_loops(op.cubic, 0.5, ctx), ctx);

    CHECK(ms.digits_est >= 25);
    std::array<BigFloat, 3> target = {ctx.real(10), ctx.real(6), ctx.real(15)};
    auto report = match_triple(ms, target, BigFloat::pow10(-25, ctx.bits()));
    CHECK(report.matched);
}

TEST_CASE("match_triple: permutation bookkeeping") {
    auto ctx = PrecisionContext::make(40);
    MonodromySet ms;
    ms.trace_squares = {ctx.cplx(16), ctx.cplx(5), ctx.cplx(20)};
    std::array<BigFloat, 3> target = {ctx.real(5), ctx.real(16), ctx.real(20)};
    auto r = match_triple(ms, target, BigFloat::pow10(-10, ctx.bits()));
    CHECK(r.matched);
    CHECK(!r.exact_order);
    CHECK(r.permutation == std::array<int, 3>{1, 0, 2});

    std::array<BigFloat, 3> bad = {ctx.real(5), ctx.real(16), ctx.real(21)};
    auto rb = match_triple(ms, bad, BigFloat::pow10(-10, ctx.bits()));
    CHECK(!rb.matched);

    std::array<BigFloat, 3> in_order = {ctx.real(16), ctx.real(5), ctx.real(20)};
    CHECK(match_triple(ms, in_order, BigFloat::pow10(-10, ctx.bits())).exact_order);
}

TEST_CASE("homotopy invariance: refined plan leaves traces unchanged") {
    auto base = PrecisionContext::make(40);
    auto op = op_12_3(base);
    auto ctx = tuned_context(op, 0.5, base);
    auto coarse = monodromy_set(op, plan_loops(op.cubic, 0.5, ctx), ctx);
    auto fine_ctx = tuned_context(op, 0.25, base);
    auto fine = monodromy_set(op, plan_loops(op.cubic, 0.25, fine_ctx), fine_ctx);
    for (int k = 0; k < 3; ++k)
        CHECK(dist(coarse.pair_traces[k], fine.pair_traces[k]).to_double() < 1e-25);
}

TEST_CASE("conjugation invariance: traces do not depend on the basepoint") {
    auto base = PrecisionContext::make(40);
    auto op = op_12_3(base);
    auto ctx = tuned_context(op, 0.5, base);
    auto ms_i = monodromy_set(op, plan_loops(op.cubic, 0.5, ctx), ctx);
    auto ms_alt = monodromy_set(op, build_loops(op.cubic, ctx.cplx(0, 2), 0.5, ctx), ctx);

    // as multisets the squares agree (ordering may permute)
    MonodromySet probe = ms_alt;
    std::array<BigFloat, 3> target = {ms_i.trace_squares[0].re(), ms_i.trace_squares[1].re(),
                                      ms_i.trace_squares[2].re()};
    CHECK(match_triple(probe, target, BigFloat::pow10(-25, ctx.bits())).matched);
}
