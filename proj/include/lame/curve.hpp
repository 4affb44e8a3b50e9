#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "lame/algebraic.hpp"

namespace lame {

/// Long Weierstrass equation y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassCurve {
    AlgebraicNumber a1, a2, a3, a4, a6;
};

/// Short form y^2 = 4t^3 - g2 t - g3 together with the cubic's roots.
/// A point (x, y) of the source curve maps to (x + shift, 2y + a1 x + a3).
struct DepressedCubic {
    BigComplex g2, g3;
    std::vector<BigComplex> roots; // 3 roots, sorted by (Re, Im)
    BigComplex shift;              // b2 / 12
};

/// Eliminates the x^2 term and rescales to the 4t^3 normal form via the
/// b-invariants b2 = a1^2 + 4 a2, b4 = 2 a4 + a1 a3, b6 = a3^2 + 4 a6.
DepressedCubic depress(const WeierstrassCurve& curve, const PrecisionContext& ctx);

/// Coefficient schema: a rational string "p/q" (or "n"), or
/// {"minpoly": [c0, ..., cd], "approx": "re,im"}. Large minpoly entries may
/// be decimal strings. Throws SchemaError.
AlgebraicNumber coef_from_json(const nlohmann::json& j);
nlohmann::json coef_to_json(const AlgebraicNumber& a);

/// Curve schema: {"a1": <coef>, ..., "a6": <coef>}; omitted keys mean 0.
WeierstrassCurve curve_from_json(const nlohmann::json& j);
WeierstrassCurve load_curve(const std::string& path);

} // namespace lame
