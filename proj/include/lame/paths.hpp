#pragma once

#include <array>
#include <vector>

#include "lame/curve.hpp"

namespace lame {

/// Basepoint and three closed counterclockwise loops, one around each finite
/// singular point, ordered so their concatenation is homotopic to a loop
/// around infinity. Waypoints obey
/// |p_{k+1} - p_k| <= step_ratio * dist(p_k, roots).
struct PathPlan {
    BigComplex basepoint;
    std::vector<BigComplex> ordered_singulars;       // size 3
    std::array<std::vector<BigComplex>, 3> loops;    // closed: front == back == basepoint
    double step_ratio = 0.5;
    bool paper_convention = true; // false when the basepoint fallback engaged
};

struct BasepointChoice {
    BigComplex point;
    bool paper_convention;
};

/// The imaginary unit when every nonzero root has a nonvanishing real part,
/// otherwise 0; falls back to 1, 1+i, 2i (flagged) when that rule lands on
/// or too close to a singular point.
BasepointChoice choose_basepoint_ex(const DepressedCubic& cubic, const PrecisionContext& ctx);
BigComplex choose_basepoint(const DepressedCubic& cubic, const PrecisionContext& ctx);

/// Roots sorted by arg(t - p) ascending in (-pi, pi], ties by |t - p|.
std::vector<BigComplex> order_singulars(std::vector<BigComplex> roots,
                                        const BigComplex& basepoint);

/// Loop construction: straight approach toward each root (detoured around
/// other roots when a segment passes within half their circle radius), a
/// regular polygon around the root, and the reversed approach.
/// Throws PathCollision only when a detour cannot be routed.
PathPlan build_loops(const DepressedCubic& cubic, const BigComplex& basepoint,
                     double step_ratio, const PrecisionContext& ctx);

/// build_loops at the rule-chosen basepoint.
PathPlan plan_loops(const DepressedCubic& cubic, double step_ratio,
                    const PrecisionContext& ctx);

/// Winding number of a closed polyline around a point, by summed argument
/// increments (exact for polylines that avoid the point).
int winding_number(const std::vector<BigComplex>& loop, const BigComplex& around);

} // namespace lame
