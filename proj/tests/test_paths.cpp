#include <doctest.h>

#include <random>

#include "lame/paths.hpp"

using namespace lame;

namespace {

DepressedCubic cubic_from_roots(const BigComplex& r0, const BigComplex& r1,
                                const BigComplex& r2) {
    // roots must sum to zero; P(t) = 4(t-r0)(t-r1)(t-r2)
    DepressedCubic c;
    c.g2 = -(r0 * r1 + r0 * r2 + r1 * r2) * 4;
    c.g3 = (r0 * r1 * r2) * 4;
    c.roots = {r0, r1, r2};
    c.shift = BigComplex::zero(r0.prec());
    return c;
}

BigFloat dist_to_roots(const BigComplex& p, const std::vector<BigComplex>& roots) {
    BigFloat d = dist(p, roots[0]);
    for (size_t k = 1; k < roots.size(); ++k) d = min(d, dist(p, roots[k]));
    return d;
}

} // namespace

TEST_CASE("winding_number on hand-made polylines") {
    auto ctx = PrecisionContext::make(40);
    std::vector<BigComplex> square = {ctx.cplx(1, 1), ctx.cplx(-1, 1), ctx.cplx(-1, -1),
                                      ctx.cplx(1, -1), ctx.cplx(1, 1)};
    CHECK(winding_number(square, ctx.cplx(0)) == 1);
    std::reverse(square.begin(), square.end());
    CHECK(winding_number(square, ctx.cplx(0)) == -1);
    CHECK(winding_number(square, ctx.cplx(5, 5)) == 0);
}

TEST_CASE("choose_basepoint: paper rule and fallback") {
    auto ctx = PrecisionContext::make(40);
    auto prec = ctx.bits();

    // all real parts nonzero -> i  (roots need not sum to zero here)
    DepressedCubic a;
    a.roots = {ctx.cplx(1), BigComplex::of(-1, 1, prec), ctx.cplx(-2)};
    auto ca = choose_basepoint_ex(a, ctx);
    CHECK(ca.paper_convention);
    CHECK(dist(ca.point, BigComplex::i(prec)).is_zero());

    // zero root and purely imaginary others -> rule says 0, fallback to 1
    DepressedCubic b = cubic_from_roots(ctx.cplx(0), ctx.cplx(0, 2), ctx.cplx(0, -2));
    auto cb = choose_basepoint_ex(b, ctx);
    CHECK(!cb.paper_convention);
    CHECK(dist(cb.point, ctx.cplx(1)).is_zero());

    // catalog 1/15: three real roots, all with nonzero real part -> i
    WeierstrassCurve w;
    w.a1 = AlgebraicNumber::rational(mpq_class(1), 64);
    w.a2 = AlgebraicNumber::rational(mpq_class(1), 64);
    w.a3 = AlgebraicNumber::rational(mpq_class(1), 64);
    w.a4 = AlgebraicNumber::rational(mpq_class(-135), 64);
    w.a6 = AlgebraicNumber::rational(mpq_class(-660), 64);
    auto cc = choose_basepoint_ex(depress(w, ctx), ctx);
    CHECK(cc.paper_convention);
    CHECK(dist(cc.point, BigComplex::i(prec)).is_zero());
}

TEST_CASE("order_singulars: worked example and rotation property") {
    auto ctx = PrecisionContext::make(40);
    auto prec = ctx.bits();

    std::vector<BigComplex> roots = {ctx.cplx(1), ctx.cplx(0, 2), ctx.cplx(-1)};
    auto ordered = order_singulars(roots, ctx.cplx(0, -1));
    CHECK(dist(ordered[0], ctx.cplx(1)).is_zero());
    CHECK(dist(ordered[1], ctx.cplx(0, 2)).is_zero());
    CHECK(dist(ordered[2], ctx.cplx(-1)).is_zero());

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-2.0, 2.0), ang(0.0, 6.28);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<BigComplex> r = {BigComplex::of(u(rng), u(rng), prec),
                                     BigComplex::of(u(rng), u(rng), prec),
                                     BigComplex::of(u(rng), u(rng), prec)};
        double phi = ang(rng);
        BigComplex rot = BigComplex::of(std::cos(phi), std::sin(phi), prec);
        auto base = order_singulars(r, BigComplex::zero(prec));
        std::vector<BigComplex> rr;
        for (auto& x : r) rr.push_back(x * rot);
        auto turned = order_singulars(rr, BigComplex::zero(prec));
        // the rotated order must be a cyclic shift of the rotated base order
        bool cyclic = false;
        for (int shift = 0; shift < 3; ++shift) {
            bool ok = true;
            for (int k = 0; k < 3; ++k)
                if (dist(turned[k], base[(k + shift) % 3] * rot).to_double() > 1e-30) ok = false;
            if (ok) cyclic = true;
        }
        CHECK(cyclic);
    }
}

TEST_CASE("build_loops: windings, spacing, closure on a symmetric cubic") {
    auto ctx = PrecisionContext::make(40);
    auto prec = ctx.bits();
    double w3 = std::sqrt(3.0) / 2;
    DepressedCubic c = cubic_from_roots(ctx.cplx(2), BigComplex::of(-1.0, 2 * w3, prec),
                                        BigComplex::of(-1.0, -2 * w3, prec));
    auto plan = plan_loops(c, 0.5, ctx);
    CHECK(plan.paper_convention);
    CHECK(dist(plan.basepoint, BigComplex::i(prec)).is_zero());

    std::vector<BigComplex> concat;
    for (int i = 0; i < 3; ++i) {
        const auto& loop = plan.loops[i];
        REQUIRE(loop.size() >= 4);
        CHECK(dist(loop.front(), plan.basepoint).is_zero());
        CHECK(dist(loop.back(), plan.basepoint).is_zero());
        for (int j = 0; j < 3; ++j)
            CHECK(winding_number(loop, plan.ordered_singulars[j]) == (i == j ? 1 : 0));
        for (size_t k = 0; k + 1 < loop.size(); ++k) {
            BigFloat step = dist(loop[k], loop[k + 1]);
            CHECK(step <= dist_to_roots(loop[k], c.roots) * BigFloat::of(0.5, prec) * 1.0000001);
        }
        concat.insert(concat.end(), loop.begin(), loop.end());
    }
    for (int j = 0; j < 3; ++j) CHECK(winding_number(concat, plan.ordered_singulars[j]) == 1);
}

TEST_CASE("build_loops: halving the step ratio roughly doubles waypoints") {
    auto ctx = PrecisionContext::make(40);
    DepressedCubic c = cubic_from_roots(ctx.cplx(2), ctx.cplx(-1, 1), ctx.cplx(-1, -1));
    auto coarse = plan_loops(c, 0.5, ctx);
    auto fine = plan_loops(c, 0.25, ctx);
    size_t n_coarse = 0, n_fine = 0;
    for (int i = 0; i < 3; ++i) {
        n_coarse += coarse.loops[i].size();
        n_fine += fine.loops[i].size();
    }
    double ratio = double(n_fine) / double(n_coarse);
    CHECK(ratio > 1.5);
    CHECK(ratio < 2.7);
}

TEST_CASE("build_loops: collinear roots force a detour that stays clear") {
    auto ctx = PrecisionContext::make(40);
    DepressedCubic c = cubic_from_roots(ctx.cplx(1), ctx.cplx(2), ctx.cplx(-3));
    // basepoint 0 sits on the line through the roots
    auto plan = build_loops(c, ctx.cplx(0), 0.5, ctx);

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(winding_number(plan.loops[i], plan.ordered_singulars[j]) == (i == j ? 1 : 0));

    // the loop around the root at 2 must keep distance from the root at 1
    int idx2 = -1, idx1 = -1;
    for (int i = 0; i < 3; ++i) {
        if (dist(plan.ordered_singulars[i], ctx.cplx(2)).to_double() < 1e-20) idx2 = i;
        if (dist(plan.ordered_singulars[i], ctx.cplx(1)).to_double() < 1e-20) idx1 = i;
    }
    REQUIRE(idx2 >= 0);
    REQUIRE(idx1 >= 0);
    double min_clear = 1e9;
    for (auto& w : plan.loops[idx2])
        min_clear = std::min(min_clear, dist(w, ctx.cplx(1)).to_double());
    // clearance is half the circle radius of the loop around 1 (radius 1/3)
    CHECK(min_clear > 0.16);
}

TEST_CASE("order regression: catalog curve 1/6ii from basepoint i") {
    auto ctx = PrecisionContext::make(40);
    WeierstrassCurve w;
    w.a2 = AlgebraicNumber::rational(mpq_class(-1), 64);
    w.a4 = AlgebraicNumber::rational(mpq_class(16), 64);
    w.a6 = AlgebraicNumber::rational(mpq_class(-180), 64);
    w.a1 = AlgebraicNumber::rational(mpq_class(0), 64);
    w.a3 = AlgebraicNumber::rational(mpq_class(0), 64);
    auto cubic = depress(w, ctx);
    auto bp = choose_basepoint_ex(cubic, ctx);
    CHECK(bp.paper_convention);
    auto ordered = order_singulars(cubic.roots, bp.point);
    // frozen: conjugate root (Im < 0), then the real root, then Im > 0
    CHECK(ordered[0].im().to_double() < -1);
    CHECK(std::abs(ordered[1].im().to_double()) < 1e-30);
    CHECK(ordered[1].re().to_double() > 4);
    CHECK(ordered[2].im().to_double() > 1);
}
