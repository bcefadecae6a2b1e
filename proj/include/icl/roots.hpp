#pragma once
// Complex root isolation: Aberth-Ehrlich start in double, Newton polish in
// MPFR, then a certified inclusion disk per root from the n*|p/p'| bound.
// Disjointness of the disks certifies one root per ball; failures double the
// working precision and retry. Real roots of rational polynomials are
// pinned exactly via Sturm counting.

#include "icl/poly.hpp"
#include "icl/polyq.hpp"
#include "icl/ball.hpp"
#include "icl/field_ext.hpp"
#include <complex>
#include <random>

namespace icl {

// ---- Sturm machinery over Q -------------------------------------------

inline UniPoly<Rat> primitive_pos(const UniPoly<Rat>& p) {
    if (p.is_zero()) return p;
    Int l = denominator_lcm(p.c), g = 0;
    for (const auto& r : p.c) g = gcd(g, Int(r.get_num() * (l / r.get_den())));
    Rat f(l, g);
    f.canonicalize();
    return f * p; // positive scaling only, sign pattern preserved
}

inline std::vector<UniPoly<Rat>> sturm_chain(const UniPoly<Rat>& p) {
    std::vector<UniPoly<Rat>> ch;
    ch.push_back(primitive_pos(p));
    auto d = derivative(p);
    if (d.is_zero()) return ch;
    ch.push_back(primitive_pos(d));
    while (true) {
        auto r = poly_mod(ch[ch.size() - 2], ch.back());
        if (r.is_zero()) break;
        ch.push_back(primitive_pos(-r));
    }
    return ch;
}

inline int sign_changes_at(const std::vector<UniPoly<Rat>>& ch, const Rat& x) {
    int changes = 0, last = 0;
    for (const auto& p : ch) {
        int s = sgn(p.eval<Rat>(x));
        if (s == 0) continue;
        if (last != 0 && s != last) changes++;
        last = s;
    }
    return changes;
}

inline int sign_changes_at_inf(const std::vector<UniPoly<Rat>>& ch, int dir) {
    int changes = 0, last = 0;
    for (const auto& p : ch) {
        if (p.is_zero()) continue;
        int s = sgn(p.lead());
        if (dir < 0 && (p.degree() & 1)) s = -s;
        if (last != 0 && s != last) changes++;
        last = s;
    }
    return changes;
}

// number of distinct real roots in (a, b]
inline int count_real_roots(const UniPoly<Rat>& p, const Rat& a, const Rat& b) {
    auto ch = sturm_chain(squarefree_part(p));
    return sign_changes_at(ch, a) - sign_changes_at(ch, b);
}

inline int count_real_roots(const UniPoly<Rat>& p) {
    auto ch = sturm_chain(squarefree_part(p));
    return sign_changes_at_inf(ch, -1) - sign_changes_at_inf(ch, +1);
}

// true iff every root of p is real with |w| >= 1/4
inline bool all_roots_in_Wc(const UniPoly<Rat>& p) {
    auto sf = squarefree_part(p);
    if (sf.degree() <= 0) return true;
    auto ch = sturm_chain(sf);
    int total = sign_changes_at_inf(ch, -1) - sign_changes_at_inf(ch, +1);
    if (total != sf.degree()) return false;
    Rat q(1, 4);
    int inside = sign_changes_at(ch, -q) - sign_changes_at(ch, q); // roots in (-1/4, 1/4]
    if (sgn(sf.eval<Rat>(q)) == 0) inside--;
    return inside == 0;
}

// ---- complex root isolation --------------------------------------------

template <class K>
ComplexBall eval_ball(const std::vector<ComplexBall>& coeffs, const K& z);

inline ComplexBall eval_ball(const std::vector<ComplexBall>& coeffs, const ComplexBall& z) {
    ComplexBall r(0L);
    for (int i = (int)coeffs.size() - 1; i >= 0; i--)
        r = r * z + coeffs[i];
    return r;
}

inline ComplexBall ball_exact(const ComplexBall& z) {
    ComplexBall out = z;
    mpfr_set_zero(out.re.r, 1);
    mpfr_set_zero(out.im.r, 1);
    return out;
}

namespace detail {

inline std::vector<std::complex<double>> aberth_double(const std::vector<std::complex<double>>& a) {
    int n = (int)a.size() - 1;
    std::vector<std::complex<double>> z(n);
    // start points on a circle scaled by the Cauchy bound
    double amax = 0;
    for (int i = 0; i < n; i++) amax = std::max(amax, std::abs(a[i]));
    double R = 1.0 + amax / std::abs(a[n]);
    if (!std::isfinite(R) || R <= 0) R = 2.0;
    for (int i = 0; i < n; i++) {
        double th = 2 * 3.14159265358979324 * i / n + 0.4;
        z[i] = std::polar(std::min(R, 1e6) * (0.5 + 0.5 * (i % 7) / 7.0), th);
    }
    auto peval = [&](std::complex<double> x, std::complex<double>& d) {
        std::complex<double> p = a[n], dp = 0.0;
        for (int i = n - 1; i >= 0; i--) {
            dp = dp * x + p;
            p = p * x + a[i];
        }
        d = dp;
        return p;
    };
    for (int it = 0; it < 400; it++) {
        double worst = 0;
        for (int i = 0; i < n; i++) {
            std::complex<double> d, p = peval(z[i], d);
            std::complex<double> corr = (d != 0.0) ? p / d : std::complex<double>(1e-3, 1e-3);
            std::complex<double> s = 0;
            for (int j = 0; j < n; j++)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            std::complex<double> w = corr / (1.0 - corr * s);
            z[i] -= w;
            worst = std::max(worst, std::abs(w));
        }
        if (worst < 1e-13) break;
    }
    return z;
}

} // namespace detail

struct RootBalls {
    std::vector<ComplexBall> roots;
    int digits_achieved = 0;
};

// coefficients as complex balls (exact inputs carry radius zero).
// real_coeffs enforces conjugate-symmetric output.
inline std::vector<ComplexBall> complex_roots_core(const std::vector<ComplexBall>& coeffs,
                                                   int digits, bool real_coeffs) {
    int n = (int)coeffs.size() - 1;
    if (n <= 0) return {};
    std::vector<std::complex<double>> ad(n + 1);
    // exponent-balance into double range (coefficients can be huge integers)
    long ex = 0;
    for (int i = 0; i <= n; i++) {
        if (!mpfr_zero_p(coeffs[i].re.m)) ex = std::max(ex, (long)mpfr_get_exp(coeffs[i].re.m));
        if (!mpfr_zero_p(coeffs[i].im.m)) ex = std::max(ex, (long)mpfr_get_exp(coeffs[i].im.m));
    }
    for (int i = 0; i <= n; i++) {
        mpfr_t t;
        mpfr_init2(t, 64);
        mpfr_div_2si(t, coeffs[i].re.m, ex, MPFR_RNDN);
        double re = mpfr_get_d(t, MPFR_RNDN);
        mpfr_div_2si(t, coeffs[i].im.m, ex, MPFR_RNDN);
        double im = mpfr_get_d(t, MPFR_RNDN);
        mpfr_clear(t);
        ad[i] = {re, im};
    }
    if (std::abs(ad[n]) < 1e-280) {
        // pathological spread; rescale on the leading coefficient and clamp
        long exl = mpfr_get_exp(coeffs[n].re.m);
        for (int i = 0; i <= n; i++) {
            mpfr_t t;
            mpfr_init2(t, 64);
            mpfr_div_2si(t, coeffs[i].re.m, exl, MPFR_RNDN);
            double re = std::clamp(mpfr_get_d(t, MPFR_RNDN), -1e290, 1e290);
            mpfr_div_2si(t, coeffs[i].im.m, exl, MPFR_RNDN);
            double im = std::clamp(mpfr_get_d(t, MPFR_RNDN), -1e290, 1e290);
            mpfr_clear(t);
            ad[i] = {re, im};
        }
    }

    for (int attempt = 0; attempt < 4; attempt++) {
        mpfr_prec_t prec = digits_to_bits(digits) * (1 << attempt);
        PrecGuard pg(prec);
        std::vector<ComplexBall> cb(coeffs.begin(), coeffs.end());
        auto z0 = detail::aberth_double(ad);
        // Newton polish at full precision, midpoints only
        std::vector<ComplexBall> zs;
        std::vector<ComplexBall> dcoeffs; // derivative coefficients
        for (int i = 1; i <= n; i++) dcoeffs.push_back(RealBall((long)i) * cb[i]);
        for (auto& z : z0) {
            ComplexBall x(z.real(), z.imag());
            for (int it = 0; it < 80; it++) {
                ComplexBall p = eval_ball(cb, ball_exact(x));
                ComplexBall d = eval_ball(dcoeffs, ball_exact(x));
                if (d.contains_zero()) break;
                ComplexBall step = p / d;
                x = ball_exact(x - step);
                double sm = std::hypot(step.re.mid_d(), step.im.mid_d());
                double xm = std::hypot(x.re.mid_d(), x.im.mid_d()) + 1;
                if (sm < xm * std::ldexp(1.0, (int)-(prec - 24))) break;
            }
            zs.push_back(ball_exact(x));
        }
        if (real_coeffs) {
            // snap near-real roots onto the axis, mirror conjugate partners
            for (auto& z : zs) {
                double im = std::fabs(z.im.mid_d());
                double re = std::fabs(z.re.mid_d());
                if (im < 1e-10 * (re + 1)) {
                    mpfr_set_zero(z.im.m, 1);
                    // one extra real Newton step
                    ComplexBall p = eval_ball(cb, ball_exact(z));
                    ComplexBall d = eval_ball(dcoeffs, ball_exact(z));
                    if (!d.contains_zero()) {
                        ComplexBall step = p / d;
                        z = ball_exact(z - step);
                        mpfr_set_zero(z.im.m, 1);
                    }
                }
            }
        }
        // certification: r_i = n |p(z_i)| / |p'(z_i)|, pairwise disjoint
        bool ok = true;
        std::vector<ComplexBall> out;
        std::vector<double> rad(n);
        for (int i = 0; i < n && ok; i++) {
            ComplexBall p = eval_ball(cb, zs[i]);
            ComplexBall d = eval_ball(dcoeffs, zs[i]);
            RealBall pn = p.cabs(), dn = d.cabs();
            mpfr_t up, lo;
            mpfr_init2(up, RAD_PREC); mpfr_init2(lo, RAD_PREC);
            pn.mag_upper(up);
            dn.mag_lower(lo);
            if (mpfr_sgn(lo) <= 0) { ok = false; }
            else {
                mpfr_t ri;
                mpfr_init2(ri, RAD_PREC);
                mpfr_div(ri, up, lo, MPFR_RNDU);
                mpfr_mul_ui(ri, ri, n, MPFR_RNDU);
                ComplexBall root = zs[i];
                mpfr_set(root.re.r, ri, MPFR_RNDU);
                mpfr_set(root.im.r, ri, MPFR_RNDU);
                rad[i] = mpfr_get_d(ri, MPFR_RNDU);
                out.push_back(root);
                mpfr_clear(ri);
            }
            mpfr_clear(up); mpfr_clear(lo);
        }
        if (ok) {
            for (int i = 0; i < n && ok; i++)
                for (int j = i + 1; j < n; j++) {
                    double dx = out[i].re.mid_d() - out[j].re.mid_d();
                    double dy = out[i].im.mid_d() - out[j].im.mid_d();
                    if (std::hypot(dx, dy) <= rad[i] + rad[j] + 1e-300) { ok = false; break; }
                }
        }
        if (ok) return out;
    }
    throw std::runtime_error("complex_roots: certification failed; need higher precision or separation");
}

inline std::vector<ComplexBall> complex_roots(const UniPoly<Rat>& p, int digits = 30) {
    if (p.is_zero()) throw std::domain_error("complex_roots of zero polynomial");
    std::vector<ComplexBall> coeffs;
    PrecGuard pg(digits_to_bits(digits) + 64);
    for (const auto& c : p.c) coeffs.push_back(ComplexBall(c));
    return complex_roots_core(coeffs, digits, true);
}

inline std::vector<ComplexBall> complex_roots(const UniPoly<QuadExt>& p, int digits = 30) {
    std::vector<ComplexBall> coeffs;
    PrecGuard pg(digits_to_bits(digits) + 64);
    bool real = true;
    for (const auto& c : p.c) {
        coeffs.push_back(c.to_ball());
        if (!(c.is_rational() || sgn(c.d) > 0)) real = false;
    }
    return complex_roots_core(coeffs, digits, real);
}

} // namespace icl
