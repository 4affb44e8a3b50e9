#include <doctest.h>

#include <random>

#include "lame/curve.hpp"

using namespace lame;

namespace {

WeierstrassCurve rational_curve(long a1, long a2, long a3, long a4, long a6) {
    WeierstrassCurve c;
    c.a1 = AlgebraicNumber::rational(mpq_class(a1), 64);
    c.a2 = AlgebraicNumber::rational(mpq_class(a2), 64);
    c.a3 = AlgebraicNumber::rational(mpq_class(a3), 64);
    c.a4 = AlgebraicNumber::rational(mpq_class(a4), 64);
    c.a6 = AlgebraicNumber::rational(mpq_class(a6), 64);
    return c;
}

// Solve y^2 + L y = R for y at a given x and map the point through the
// recorded change of variables; returns the residual in the short form.
BigFloat transport_residual(const WeierstrassCurve& c, const DepressedCubic& d,
                            const BigComplex& x, const PrecisionContext& ctx) {
    BigComplex a1 = evaluate(c.a1, ctx), a2 = evaluate(c.a2, ctx), a3 = evaluate(c.a3, ctx);
    BigComplex a4 = evaluate(c.a4, ctx), a6 = evaluate(c.a6, ctx);
    BigComplex L = a1 * x + a3;
    BigComplex R = ((x + a2) * x + a4) * x + a6;
    BigComplex y = ((L * L + R * 4).sqrt() - L) / 2;
    BigComplex t = x + d.shift;
    BigComplex w = y * 2 + L;
    BigComplex lhs = w * w;
    BigComplex rhs = ((t * t) * t) * 4 - d.g2 * t - d.g3;
    return dist(lhs, rhs);
}

} // namespace

TEST_CASE("depress: leading-4 rescale only") {
    auto ctx = PrecisionContext::make(40);
    auto d = depress(rational_curve(0, 0, 0, 0, -1), ctx);
    CHECK(d.g2.abs().to_double() == doctest::Approx(0.0));
    CHECK(dist(d.g3, ctx.cplx(4)).to_double() < 1e-35);
    CHECK(d.shift.abs().to_double() == doctest::Approx(0.0));
    // 4t^3 - 4 = 0: cube roots of unity
    bool has_one = false;
    for (auto& r : d.roots)
        if (dist(r, ctx.cplx(1)).to_double() < 1e-30) has_one = true;
    CHECK(has_one);
}

TEST_CASE("depress: catalog curve b-invariants") {
    auto ctx = PrecisionContext::make(40);
    auto d = depress(rational_curve(1, 1, 1, -135, -660), ctx);
    // b2 = 5, b4 = -269, b6 = -2639 by direct arithmetic
    CHECK(dist(d.g2, ctx.cplx(6481) / 12).to_double() < 1e-30);
    CHECK(dist(d.g3, ctx.cplx(521479) / 216).to_double() < 1e-30);
    CHECK(dist(d.shift, ctx.cplx(5) / 12).to_double() < 1e-35);
}

TEST_CASE("depress: point transport on sample curves") {
    auto ctx = PrecisionContext::make(64);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-4.0, 4.0);

    std::vector<WeierstrassCurve> curves = {
        rational_curve(1, 1, 1, -135, -660), // catalog 1/15
        rational_curve(0, 0, 1, 0, -7),      // catalog 81/1
        rational_curve(2, -1, 3, 5, -11),
    };
    for (auto& c : curves) {
        auto d = depress(c, ctx);
        for (int k = 0; k < 5; ++k) {
            BigComplex x = BigComplex::of(u(rng), u(rng), ctx.bits());
            CHECK(transport_residual(c, d, x, ctx).to_double() < 1e-50);
        }
    }
}

TEST_CASE("depress: singular curve rejected") {
    auto ctx = PrecisionContext::make(40);
    CHECK_THROWS_AS(depress(rational_curve(0, 0, 0, 0, 0), ctx), DegenerateCubic);
}

TEST_CASE("depress: root labels stable under precision doubling") {
    auto c = rational_curve(1, 1, 1, -135, -660);
    auto lo = depress(c, PrecisionContext::make(40));
    auto hi = depress(c, PrecisionContext::make(80));
    for (int k = 0; k < 3; ++k) CHECK(dist(lo.roots[k], hi.roots[k]).to_double() < 1e-32);
}

TEST_CASE("curve JSON schema") {
    auto j = nlohmann::json::parse(R"({
        "a1": "1", "a2": "1", "a3": "1", "a4": "-135", "a6": "-660"
    })");
    auto c = curve_from_json(j);
    CHECK(c.a4.rational_value() == mpq_class(-135));

    auto quad = nlohmann::json::parse(R"({
        "a3": {"minpoly": [-3, 0, 1], "approx": "1.7320508075688772935,0"}
    })");
    auto cq = curve_from_json(quad);
    auto ctx = PrecisionContext::make(40);
    CHECK(abs(evaluate(cq.a3, ctx).re() - sqrt(ctx.real(3))).to_double() < 1e-35);
    CHECK(cq.a1.rational_value() == 0);

    CHECK_THROWS_AS(curve_from_json(nlohmann::json::parse(R"({"a1": "x/y"})")), SchemaError);
    CHECK_THROWS_AS(curve_from_json(nlohmann::json::parse(R"({"a1": {"minpoly": [1]}})")), SchemaError);

    // round trip through coef_to_json
    auto back = coef_from_json(coef_to_json(cq.a3));
    CHECK(back.minpoly == cq.a3.minpoly);
}
