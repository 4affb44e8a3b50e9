#include "lame/algebraic.hpp"

#include <algorithm>
#include <cmath>

namespace lame {

// ---------------------------------------------------------------------------
// IntPoly utilities
// ---------------------------------------------------------------------------

int poly_degree(const IntPoly& p) {
    for (size_t k = p.size(); k-- > 0;)
        if (p[k] != 0) return static_cast<int>(k);
    return -1;
}

IntPoly primitive_part(IntPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) return p;
    mpz_class g = 0;
    for (auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : p) c /= g;
    if (p.back() < 0)
        for (auto& c : p) c = -c;
    return p;
}

mpz_class poly_height(const IntPoly& p) {
    mpz_class h = 0;
    for (auto& c : p) h = std::max(h, mpz_class(abs(c)));
    return h;
}

BigFloat to_bigfloat(const mpz_class& z, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat to_bigfloat(const mpq_class& q, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigComplex eval_intpoly(const IntPoly& p, const BigComplex& z) {
    if (p.empty()) return BigComplex::zero(z.prec());
    mpfr_prec_t prec = z.prec();
    BigComplex acc(to_bigfloat(p.back(), prec));
    for (size_t k = p.size() - 1; k-- > 0;) acc = acc * z + BigComplex(to_bigfloat(p[k], prec));
    return acc;
}

BigFloat eval_intpoly(const IntPoly& p, const BigFloat& x) {
    if (p.empty()) return BigFloat::of(0L, x.prec());
    BigFloat acc = to_bigfloat(p.back(), x.prec());
    for (size_t k = p.size() - 1; k-- > 0;) acc = acc * x + to_bigfloat(p[k], x.prec());
    return acc;
}

IntPoly intpoly_derivative(const IntPoly& p) {
    IntPoly d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    return d;
}

std::string intpoly_str(const IntPoly& p) {
    int deg = poly_degree(p);
    if (deg < 0) return "0";
    std::string out;
    for (int k = deg; k >= 0; --k) {
        if (p[k] == 0) continue;
        mpz_class c = p[k];
        if (!out.empty()) {
            out += (c < 0) ? " - " : " + ";
            c = abs(c);
        } else if (c < 0) {
            out += "-";
            c = abs(c);
        }
        bool unit = (c == 1 && k > 0);
        if (!unit) out += c.get_str();
        if (k > 0) out += "x";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

// ---------------------------------------------------------------------------
// AlgebraicNumber
// ---------------------------------------------------------------------------

AlgebraicNumber AlgebraicNumber::rational(const mpq_class& q, mpfr_prec_t prec) {
    mpq_class c(q);
    c.canonicalize();
    AlgebraicNumber a;
    a.minpoly = primitive_part({mpz_class(-c.get_num()), mpz_class(c.get_den())});
    a.approx = BigComplex(to_bigfloat(c, prec));
    a.digits_certified = static_cast<int>(prec / 3.33);
    return a;
}

mpq_class AlgebraicNumber::rational_value() const {
    if (poly_degree(minpoly) != 1) throw Error("AlgebraicNumber: not rational");
    mpq_class q(-minpoly[0], minpoly[1]);
    q.canonicalize();
    return q;
}

BigComplex evaluate(const AlgebraicNumber& a, const PrecisionContext& ctx) {
    int deg = poly_degree(a.minpoly);
    if (deg < 1) throw Error("evaluate: constant minimal polynomial");
    mpfr_prec_t prec = ctx.bits();
    if (deg == 1) return BigComplex(to_bigfloat(a.rational_value(), prec));

    IntPoly dp = intpoly_derivative(a.minpoly);
    BigComplex z = a.approx.at_prec(prec);
    BigFloat step_tol = BigFloat::pow10(-(ctx.digits + ctx.guard - 3), prec);
    BigFloat hscale = to_bigfloat(poly_height(a.minpoly), prec);

    bool converged = false;
    for (int it = 0; it < 80; ++it) {
        BigComplex pz = eval_intpoly(a.minpoly, z);
        BigComplex dpz = eval_intpoly(dp, z);
        BigFloat zscale = max(BigFloat::of(1L, prec), z.abs());
        BigFloat dscale = hscale;
        for (int k = 0; k < deg - 1; ++k) dscale *= zscale;
        if (dpz.abs() < BigFloat::pow10(-ctx.digits / 2, prec) * dscale)
            throw RootLost("evaluate: derivative vanishes near root of " + intpoly_str(a.minpoly));
        BigComplex step = pz / dpz;
        z -= step;
        if (step.abs() < step_tol * zscale) {
            converged = true;
            break;
        }
    }
    if (!converged) throw RootLost("evaluate: Newton did not converge for " + intpoly_str(a.minpoly));

    BigFloat zscale = max(BigFloat::of(1L, prec), z.abs());
    BigFloat rscale = hscale;
    for (int k = 0; k < deg + 1; ++k) rscale *= zscale;
    rscale = max(BigFloat::of(1L, prec), rscale);
    if (eval_intpoly(a.minpoly, z).abs() > ctx.eps() * rscale)
        throw RootLost("evaluate: residual above tolerance for " + intpoly_str(a.minpoly));
    return z;
}

// ---------------------------------------------------------------------------
// Continued-fraction rational reconstruction
// ---------------------------------------------------------------------------

std::optional<mpq_class> rational_reconstruct(const BigFloat& x, const mpz_class& qmax,
                                              const BigFloat& tol) {
    if (!x.is_finite()) return std::nullopt;
    // exact rational from the mantissa: x = m * 2^e
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.raw());
    mpq_class val(m);
    if (e >= 0) {
        mpz_class sh;
        mpz_ui_pow_ui(sh.get_mpz_t(), 2, static_cast<unsigned long>(e));
        val *= sh;
    } else {
        mpz_class sh;
        mpz_ui_pow_ui(sh.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        val /= sh;
    }
    val.canonicalize();

    mpq_class rest = val;
    mpz_class h0 = 1, h1, k0 = 0, k1 = 1; // convergents h/k; (h1,k1) is current
    h1 = mpz_class(rest.get_num() / rest.get_den());
    if (rest < 0 && mpq_class(h1) != rest) h1 -= 1; // floor
    mpq_class frac = rest - mpq_class(h1);

    mpfr_prec_t prec = x.prec();
    for (int it = 0; it < 20000; ++it) {
        if (k1 > qmax) return std::nullopt;
        mpq_class conv(h1, k1);
        conv.canonicalize();
        BigFloat err = abs(x - to_bigfloat(conv, prec));
        if (err < tol) return conv;
        if (frac == 0) return std::nullopt;
        rest = mpq_class(1) / frac;
        mpz_class a = rest.get_num() / rest.get_den();
        frac = rest - mpq_class(a);
        mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
        h0 = h1;
        k0 = k1;
        h1 = h2;
        k1 = k2;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exact integral LLL (delta = 3/4)
// ---------------------------------------------------------------------------

namespace {

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    mpz_class s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

mpz_class round_div(const mpz_class& a, const mpz_class& b) { // b > 0
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r >= b) q += 1;
    return q;
}

} // namespace

void lll_reduce(std::vector<std::vector<mpz_class>>& basis) {
    const int n = static_cast<int>(basis.size());
    if (n < 2) return;

    // lambda[i][j] for j < i, and d[0..n] with d[0] = 1 (1-indexed rows).
    std::vector<std::vector<mpz_class>> lam(n + 1, std::vector<mpz_class>(n + 1, 0));
    std::vector<mpz_class> d(n + 1, 0);
    d[0] = 1;

    auto row = [&](int i) -> std::vector<mpz_class>& { return basis[i - 1]; };

    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
            mpz_class u = dot(row(i), row(j));
            for (int k = 1; k < j; ++k) u = (d[k] * u - lam[i][k] * lam[j][k]) / d[k - 1];
            if (j < i)
                lam[i][j] = u;
            else
                d[i] = u;
        }
        if (d[i] == 0) throw Error("lll_reduce: rows are not linearly independent");
    }

    auto red = [&](int k, int l) {
        if (2 * abs(lam[k][l]) <= d[l]) return;
        mpz_class q = round_div(lam[k][l], d[l]);
        auto& bk = row(k);
        auto& bl = row(l);
        for (size_t t = 0; t < bk.size(); ++t) bk[t] -= q * bl[t];
        lam[k][l] -= q * d[l];
        for (int i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
    };

    auto swap_step = [&](int k) {
        std::swap(row(k), row(k - 1));
        for (int j = 1; j <= k - 2; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        mpz_class lbar = lam[k][k - 1];
        mpz_class B = (d[k - 2] * d[k] + lbar * lbar) / d[k - 1];
        for (int i = k + 1; i <= n; ++i) {
            mpz_class t = lam[i][k];
            lam[i][k] = (d[k] * lam[i][k - 1] - lbar * t) / d[k - 1];
            lam[i][k - 1] = (B * t + lbar * lam[i][k]) / d[k];
        }
        d[k - 1] = B;
    };

    int k = 2;
    while (k <= n) {
        red(k, k - 1);
        if (4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
            swap_step(k);
            k = std::max(2, k - 1);
        } else {
            for (int l = k - 2; l >= 1; --l) red(k, l);
            ++k;
        }
    }
}

// ---------------------------------------------------------------------------
// identify
// ---------------------------------------------------------------------------

namespace {

mpz_class round_to_mpz(const BigFloat& v) {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v.raw(), MPFR_RNDN);
    return z;
}

struct Candidate {
    IntPoly poly;
    BigFloat residual;
};

// Collect LLL rows that pass the residual and height tests.
std::vector<Candidate> filter_rows(const std::vector<std::vector<mpz_class>>& rows, int degree,
                                   const BigComplex& value, const mpz_class& height_cap,
                                   const BigFloat& accept_tol) {
    std::vector<Candidate> out;
    for (auto& r : rows) {
        IntPoly p = primitive_part(IntPoly(r.begin(), r.begin() + degree + 1));
        if (poly_degree(p) < 1) continue;
        if (poly_height(p) > height_cap) continue;
        BigFloat res = eval_intpoly(p, value).abs();
        if (res < accept_tol) out.push_back({std::move(p), std::move(res)});
    }
    return out;
}

std::optional<IntPoly> pick_best(std::vector<Candidate> cands) {
    if (cands.empty()) return std::nullopt;
    auto best = std::min_element(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        int da = poly_degree(a.poly), db = poly_degree(b.poly);
        if (da != db) return da < db;
        return a.residual < b.residual;
    });
    return best->poly;
}

long scale_guard(const BigComplex& v, int degree) {
    double mag = std::max(1.0, v.abs().to_double());
    return 10 + static_cast<long>(std::ceil(degree * std::log10(mag)));
}

} // namespace

std::optional<AlgebraicNumber> identify(const BigComplex& value, int max_degree,
                                        int max_height_digits, const PrecisionContext& ctx) {
    if (max_degree < 1) throw Error("identify: max_degree must be >= 1");
    if (max_height_digits < 1) throw Error("identify: max_height_digits must be >= 1");
    if (ctx.digits < 2 * max_degree * max_height_digits + 20)
        throw InsufficientPrecision("identify: need digits >= 2*max_degree*max_height_digits + 20");

    mpfr_prec_t prec = ctx.bits();
    BigComplex v = value.at_prec(prec);
    BigFloat accept_tol = BigFloat::pow10(-ctx.digits + ctx.digits / 4, prec);
    mpz_class height_cap;
    mpz_ui_pow_ui(height_cap.get_mpz_t(), 10, static_cast<unsigned long>(max_height_digits));

    auto finish = [&](IntPoly p) -> std::optional<AlgebraicNumber> {
        // isolation: exactly one root near the value
        auto roots = poly_roots([&] {
            std::vector<BigComplex> c;
            for (auto& z : p) c.push_back(BigComplex(to_bigfloat(z, prec)));
            return c;
        }(), ctx);
        BigFloat ball = BigFloat::pow10(-ctx.digits / 2, prec);
        int near = 0;
        for (auto& r : roots)
            if (dist(r, v) < ball) ++near;
        if (near != 1) return std::nullopt;
        AlgebraicNumber a;
        a.minpoly = std::move(p);
        a.approx = v;
        a.digits_certified = ctx.digits;
        return a;
    };

    if (v.abs() < accept_tol) {
        AlgebraicNumber a;
        a.minpoly = {mpz_class(0), mpz_class(1)};
        a.approx = BigComplex::zero(prec);
        a.digits_certified = ctx.digits;
        return a;
    }

    bool is_real = abs(v.im()) < BigFloat::pow10(-ctx.digits / 2, prec) * max(ctx.real(1), v.abs());

    if (is_real) {
        const BigFloat& x = v.re();
        for (int d = 1; d <= max_degree; ++d) {
            long g = scale_guard(v, d);
            if (ctx.digits - g < 10) break;
            BigFloat K = BigFloat::pow10(ctx.digits - g, prec);
            std::vector<std::vector<mpz_class>> rows;
            BigFloat xp = BigFloat::of(1L, prec);
            for (int i = 0; i <= d; ++i) {
                std::vector<mpz_class> r(d + 2, 0);
                r[i] = 1;
                r[d + 1] = round_to_mpz(K * xp);
                rows.push_back(std::move(r));
                xp *= x;
            }
            lll_reduce(rows);
            if (auto p = pick_best(filter_rows(rows, d, v, height_cap, accept_tol))) {
                if (auto a = finish(std::move(*p))) return a;
            }
        }
        return std::nullopt;
    }

    // complex: first try an imaginary quadratic field Q(sqrt(-D))
    {
        mpz_class qmax;
        mpz_ui_pow_ui(qmax.get_mpz_t(), 10, static_cast<unsigned long>(max_height_digits));
        BigFloat rtol = BigFloat::pow10(-(3 * ctx.digits) / 4, prec);
        for (long D : {1L, 2L, 3L, 5L, 6L, 7L, 10L, 11L, 13L, 15L, 17L, 19L, 21L}) {
            BigFloat s = v.im() / sqrt(BigFloat::of(D, prec));
            auto re_q = rational_reconstruct(v.re(), qmax, rtol);
            if (!re_q) break; // Re part is not rational: no quadratic-field shortcut
            auto im_q = rational_reconstruct(s, qmax, rtol);
            if (!im_q) continue;
            // (x - v)(x - conj v) = x^2 - 2 Re x + (Re^2 + D s^2)
            mpq_class a2 = *re_q, c2 = (*re_q) * (*re_q) + mpq_class(D) * (*im_q) * (*im_q);
            mpz_class den = lcm(mpz_class(a2.get_den()), mpz_class(c2.get_den()));
            IntPoly p = {mpz_class(c2.get_num() * (den / c2.get_den())),
                         mpz_class(-2 * a2.get_num() * (den / a2.get_den())),
                         den};
            p = primitive_part(std::move(p));
            if (poly_height(p) <= height_cap && eval_intpoly(p, v).abs() < accept_tol)
                if (auto a = finish(std::move(p))) return a;
        }
    }

    for (int d = 2; d <= max_degree; ++d) {
        long g = scale_guard(v, d);
        if (ctx.digits - g < 10) break;
        BigFloat K = BigFloat::pow10(ctx.digits - g, prec);
        std::vector<std::vector<mpz_class>> rows;
        BigComplex zp = BigComplex::one(prec);
        for (int i = 0; i <= d; ++i) {
            std::vector<mpz_class> r(d + 3, 0);
            r[i] = 1;
            r[d + 1] = round_to_mpz(K * zp.re());
            r[d + 2] = round_to_mpz(K * zp.im());
            rows.push_back(std::move(r));
            zp *= v;
        }
        lll_reduce(rows);
        if (auto p = pick_best(filter_rows(rows, d, v, height_cap, accept_tol))) {
            if (auto a = finish(std::move(*p))) return a;
        }
    }
    return std::nullopt;
}

} // namespace lame
