#pragma once

#include <array>

#include "lame/lame.hpp"
#include "lame/paths.hpp"

namespace lame {

/// Monodromy approximations along the three planned loops plus derived data.
/// Invariants at the working accuracy: tr(A_i) = 0, det(A_i) = -1, and
/// tr(A1 A2 A3) = +-2i cos(pi/(2e)); digits_est counts the digits to which
/// these hold.
struct MonodromySet {
    Mat2 A1, A2, A3, A_inf;                  // A_inf = (A1 A2 A3)^(-1)
    std::array<BigComplex, 3> pair_traces;   // tr(A3 A2), tr(A1 A2), tr(A3 A1)
    std::array<BigComplex, 3> trace_squares; // squares of the above
    int digits_est = 0;
};

/// Ordered product of fundamental-matrix evaluations along a closed waypoint
/// list: each consecutive step contributes F_{p_k}(p_{k+1}), composed with
/// later steps on the left.
Mat2 continue_along(const LameOperator& op, const std::vector<BigComplex>& waypoints,
                    const PrecisionContext& ctx);

MonodromySet monodromy_set(const LameOperator& op, const PathPlan& plan,
                           const PrecisionContext& ctx);

struct MatchReport {
    bool matched = false;
    /// target[i] is matched by trace_squares[permutation[i]] (0-based).
    std::array<int, 3> permutation = {0, 1, 2};
    bool exact_order = false;
    BigFloat max_deviation;
};

/// Permutation-tolerant comparison of the computed trace squares against a
/// target triple.
MatchReport match_triple(const MonodromySet& ms, const std::array<BigFloat, 3>& target_squares,
                         const BigFloat& tol);

/// ctx with series_order set by truncation_order_for at this step ratio.
PrecisionContext tuned_context(const LameOperator& op, double step_ratio,
                               const PrecisionContext& ctx);

} // namespace lame
