#include "lame/paths.hpp"

#include <algorithm>
#include <cmath>

namespace lame {

namespace {

BigFloat dist_to_set(const BigComplex& p, const std::vector<BigComplex>& roots) {
    BigFloat d = dist(p, roots[0]);
    for (size_t k = 1; k < roots.size(); ++k) d = min(d, dist(p, roots[k]));
    return d;
}

BigFloat cross(const BigComplex& v, const BigComplex& w) {
    return v.re() * w.im() - v.im() * w.re();
}

BigFloat dot(const BigComplex& v, const BigComplex& w) {
    return v.re() * w.re() + v.im() * w.im();
}

} // namespace

BasepointChoice choose_basepoint_ex(const DepressedCubic& cubic, const PrecisionContext& ctx) {
    mpfr_prec_t prec = ctx.bits();
    BigFloat thresh = BigFloat::pow10(-ctx.digits / 4, prec);

    bool all_re_nonzero = true;
    for (auto& r : cubic.roots) {
        if (r.abs() <= thresh) continue; // a zero root does not count
        if (abs(r.re()) <= thresh) all_re_nonzero = false;
    }
    BigComplex p = all_re_nonzero ? BigComplex::i(prec) : BigComplex::zero(prec);
    if (dist_to_set(p, cubic.roots) > thresh) return {p, true};

    for (auto& cand : {BigComplex::of(1, 0, prec), BigComplex::of(1, 1, prec),
                       BigComplex::of(0, 2, prec)}) {
        if (dist_to_set(cand, cubic.roots) > thresh) return {cand, false};
    }
    throw Error("choose_basepoint: no ordinary basepoint among fallbacks");
}

BigComplex choose_basepoint(const DepressedCubic& cubic, const PrecisionContext& ctx) {
    return choose_basepoint_ex(cubic, ctx).point;
}

std::vector<BigComplex> order_singulars(std::vector<BigComplex> roots,
                                        const BigComplex& basepoint) {
    std::sort(roots.begin(), roots.end(), [&](const BigComplex& a, const BigComplex& b) {
        BigFloat arga = (a - basepoint).arg();
        BigFloat argb = (b - basepoint).arg();
        if (arga != argb) return arga < argb;
        return dist(a, basepoint) < dist(b, basepoint);
    });
    return roots;
}

int winding_number(const std::vector<BigComplex>& loop, const BigComplex& around) {
    mpfr_prec_t prec = around.prec();
    BigFloat total(prec);
    for (size_t k = 0; k + 1 < loop.size(); ++k) {
        BigComplex a = loop[k] - around;
        BigComplex b = loop[k + 1] - around;
        if (a.abs().is_zero() || b.abs().is_zero())
            throw Error("winding_number: polyline touches the point");
        total += (b / a).arg();
    }
    BigFloat turns = total / (BigFloat::pi(prec) * 2);
    double t = turns.to_double();
    int w = static_cast<int>(std::lround(t));
    if (std::fabs(t - w) > 0.01) throw Error("winding_number: non-integral winding");
    return w;
}

namespace {

// Detour machinery: a route is a coarse polyline from the basepoint to the
// circle entry; segments crossing the clearance disk of another root are
// replaced by arcs on that disk's boundary, on the side away from the root
// (left side when the segment hits the root exactly).
struct Obstacle {
    BigComplex center;
    BigFloat clearance;
};

std::vector<BigComplex> arc_points(const BigComplex& center, const BigFloat& radius, double a0,
                                   double a1, int orientation, double max_step,
                                   mpfr_prec_t prec) {
    // angles walked from a0 to a1 in the given orientation (+1 ccw, -1 cw)
    double sweep = orientation > 0 ? a1 - a0 : a0 - a1;
    while (sweep < 0) sweep += 2 * M_PI;
    while (sweep >= 2 * M_PI) sweep -= 2 * M_PI;
    int steps = std::max(1, static_cast<int>(std::ceil(sweep / max_step)));
    std::vector<BigComplex> pts;
    for (int s = 1; s < steps; ++s) {
        double th = a0 + orientation * sweep * s / steps;
        pts.push_back(center + BigComplex::of(std::cos(th), std::sin(th), prec) * radius);
    }
    return pts;
}

// Replace segments that cut an obstacle disk; returns true when anything changed.
bool detour_pass(std::vector<BigComplex>& route, const std::vector<Obstacle>& obstacles,
                 double step_ratio, mpfr_prec_t prec) {
    for (size_t k = 0; k + 1 < route.size(); ++k) {
        const BigComplex a = route[k], b = route[k + 1];
        BigComplex ab = b - a;
        BigFloat len2 = ab.norm2();
        if (len2.is_zero()) continue;
        for (auto& ob : obstacles) {
            BigFloat rho = ob.clearance;
            // endpoints must stay outside the disk (guaranteed by construction,
            // except possibly the basepoint; shrink then)
            BigFloat da = dist(a, ob.center), db = dist(b, ob.center);
            if (da <= rho || db <= rho) rho = min(da, db) * 9 / 10;
            if (rho.sign() <= 0) continue;

            // closest approach of the segment to the center
            BigFloat s = dot(ob.center - a, ab) / len2;
            if (s.sign() <= 0 || s >= BigFloat::of(1L, prec)) continue;
            BigComplex foot = a + ab * s;
            if (dist(foot, ob.center) >= rho) continue;

            // chord endpoints: |a + s ab - o|^2 = rho^2
            BigFloat A = len2;
            BigFloat B = dot(ab, a - ob.center) * 2;
            BigFloat C = (a - ob.center).norm2() - rho * rho;
            BigFloat disc = B * B - A * C * 4;
            if (disc.sign() <= 0) continue;
            BigFloat rt = sqrt(disc);
            BigFloat s_in = (-B - rt) / (A * 2);
            BigFloat s_out = (-B + rt) / (A * 2);
            BigComplex enter = a + ab * s_in;
            BigComplex exit = a + ab * s_out;

            // arc on the side away from the root; left when the hit is exact
            int side = cross(ab, ob.center - a).sign();
            int want = side == 0 ? 1 : -side;
            double a0 = (enter - ob.center).arg().to_double();
            double a1 = (exit - ob.center).arg().to_double();
            for (int orientation : {1, -1}) {
                auto pts = arc_points(ob.center, rho, a0, a1, orientation, step_ratio * 0.9, prec);
                BigComplex mid = pts.empty() ? (enter + exit) / 2 : pts[pts.size() / 2];
                if (cross(ab, mid - a).sign() == want || pts.empty()) {
                    std::vector<BigComplex> repl;
                    repl.push_back(enter);
                    repl.insert(repl.end(), pts.begin(), pts.end());
                    repl.push_back(exit);
                    route.insert(route.begin() + k + 1, repl.begin(), repl.end());
                    return true;
                }
            }
            throw PathCollision("build_loops: detour arc could not be oriented");
        }
    }
    return false;
}

// Waypoints along a polyline with spacing safe in both traversal directions:
// step <= ratio/(1+ratio) * dist keeps |dp| <= ratio * dist at both ends.
void walk_polyline(std::vector<BigComplex>& out, const std::vector<BigComplex>& route,
                   const std::vector<BigComplex>& roots, double step_ratio,
                   mpfr_prec_t prec) {
    BigFloat ratio = BigFloat::of(step_ratio, prec);
    BigFloat shrink = ratio / (ratio + 1);
    for (size_t k = 0; k + 1 < route.size(); ++k) {
        BigComplex cur = route[k];
        const BigComplex& target = route[k + 1];
        if (out.empty() || dist(out.back(), cur).sign() != 0) out.push_back(cur);
        while (true) {
            BigFloat rem = dist(cur, target);
            if (rem.is_zero()) break;
            BigFloat h = min(shrink * dist_to_set(cur, roots), rem);
            cur = (h == rem) ? target : cur + (target - cur) * (h / rem);
            out.push_back(cur);
            if (h == rem) break;
        }
    }
}

} // namespace

PathPlan build_loops(const DepressedCubic& cubic, const BigComplex& basepoint,
                     double step_ratio, const PrecisionContext& ctx) {
    if (!(step_ratio > 0.0) || step_ratio > 0.6)
        throw Error("build_loops: step_ratio must lie in (0, 0.6]");
    mpfr_prec_t prec = ctx.bits();

    PathPlan plan;
    plan.basepoint = basepoint.at_prec(prec);
    plan.step_ratio = step_ratio;
    plan.ordered_singulars = order_singulars(cubic.roots, plan.basepoint);
    const auto& roots = plan.ordered_singulars;

    // circle radii; also the obstacle clearances (half of them)
    std::vector<BigFloat> radii;
    for (int i = 0; i < 3; ++i) {
        BigFloat d_other(prec);
        bool first = true;
        for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            BigFloat d = dist(roots[i], roots[j]);
            d_other = first ? d : min(d_other, d);
            first = false;
        }
        BigFloat reach = dist(plan.basepoint, roots[i]) * 2;
        radii.push_back(min(d_other, reach) / 3);
    }

    for (int i = 0; i < 3; ++i) {
        const BigComplex& t_i = roots[i];
        BigFloat r_i = radii[i];
        BigComplex dir = (plan.basepoint - t_i) / dist(plan.basepoint, t_i);
        BigComplex entry = t_i + dir * r_i;

        std::vector<Obstacle> obstacles;
        for (int j = 0; j < 3; ++j)
            if (j != i) obstacles.push_back({roots[j], radii[j] / 2});

        std::vector<BigComplex> route = {plan.basepoint, entry};
        for (int pass = 0; pass < 6; ++pass) {
            if (!detour_pass(route, obstacles, step_ratio, prec)) break;
            if (pass == 5) throw PathCollision("build_loops: detours did not settle");
        }

        std::vector<BigComplex> approach;
        walk_polyline(approach, route, cubic.roots, step_ratio, prec);
        if (approach.empty() || dist(approach.back(), entry).sign() != 0) approach.push_back(entry);

        // counterclockwise polygon around t_i starting and ending at entry
        int m = static_cast<int>(std::ceil(2 * M_PI / step_ratio));
        double theta0 = (entry - t_i).arg().to_double();
        std::vector<BigComplex> loop = approach;
        for (int s = 1; s < m; ++s) {
            double th = theta0 + 2 * M_PI * s / m;
            loop.push_back(t_i + BigComplex::of(std::cos(th), std::sin(th), prec) * r_i);
        }
        loop.push_back(entry);
        for (size_t k = approach.size() - 1; k-- > 0;) loop.push_back(approach[k]);

        for (int j = 0; j < 3; ++j) {
            int w = winding_number(loop, roots[j]);
            if (w != (j == i ? 1 : 0))
                throw Error("build_loops: winding invariant violated");
        }
        plan.loops[i] = std::move(loop);
    }
    return plan;
}

PathPlan plan_loops(const DepressedCubic& cubic, double step_ratio,
                    const PrecisionContext& ctx) {
    auto bp = choose_basepoint_ex(cubic, ctx);
    PathPlan plan = build_loops(cubic, bp.point, step_ratio, ctx);
    plan.paper_convention = bp.paper_convention;
    return plan;
}

} // namespace lame
