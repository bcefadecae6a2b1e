#pragma once
// Certified high-precision arithmetic: real and complex midpoint-radius
// balls over MPFR. Radius propagation is conservative (every op returns a
// ball containing the exact image of the input balls). Radii are kept at
// low precision, rounded up.

#include "icl/rat.hpp"
#include <mpfr.h>
#include <string>
#include <stdexcept>

namespace icl {

inline thread_local mpfr_prec_t tl_prec = 400; // working precision, bits

inline mpfr_prec_t digits_to_bits(int digits) {
    return (mpfr_prec_t)(digits * 3.3219280948873623) + 32;
}

struct PrecGuard {
    mpfr_prec_t saved;
    explicit PrecGuard(mpfr_prec_t p) : saved(tl_prec) { tl_prec = p; }
    ~PrecGuard() { tl_prec = saved; }
};

static constexpr mpfr_prec_t RAD_PREC = 32;

class RealBall {
public:
    mpfr_t m; // midpoint, tl_prec bits, round-to-nearest
    mpfr_t r; // radius, RAD_PREC bits, rounded up

    RealBall() {
        mpfr_init2(m, tl_prec);
        mpfr_init2(r, RAD_PREC);
        mpfr_set_zero(m, 1);
        mpfr_set_zero(r, 1);
    }
    RealBall(const RealBall& o) {
        mpfr_init2(m, mpfr_get_prec(o.m));
        mpfr_init2(r, RAD_PREC);
        mpfr_set(m, o.m, MPFR_RNDN);
        mpfr_set(r, o.r, MPFR_RNDU);
    }
    RealBall(RealBall&& o) noexcept {
        mpfr_init2(m, 2);
        mpfr_init2(r, 2);
        mpfr_swap(m, o.m);
        mpfr_swap(r, o.r);
    }
    RealBall& operator=(RealBall o) {
        mpfr_swap(m, o.m);
        mpfr_swap(r, o.r);
        return *this;
    }
    ~RealBall() {
        mpfr_clear(m);
        mpfr_clear(r);
    }

    explicit RealBall(long n) : RealBall() { mpfr_set_si(m, n, MPFR_RNDN); }
    explicit RealBall(double d) : RealBall() { mpfr_set_d(m, d, MPFR_RNDN); }
    explicit RealBall(const Rat& q) : RealBall() {
        int t = mpfr_set_q(m, q.get_mpq_t(), MPFR_RNDN);
        if (t != 0) bump_ulp();
    }
    explicit RealBall(const Int& z) : RealBall() {
        int t = mpfr_set_z(m, z.get_mpz_t(), MPFR_RNDN);
        if (t != 0) bump_ulp();
    }

    void bump_ulp() {
        // add one ulp of the midpoint to the radius
        if (mpfr_zero_p(m)) return;
        mpfr_t u;
        mpfr_init2(u, RAD_PREC);
        mpfr_set_ui_2exp(u, 1, mpfr_get_exp(m) - mpfr_get_prec(m) + 1, MPFR_RNDU);
        mpfr_add(r, r, u, MPFR_RNDU);
        mpfr_clear(u);
    }
    void add_error(const mpfr_t e) { mpfr_add(r, r, e, MPFR_RNDU); }
    void add_error_2exp(long ex) {
        mpfr_t u;
        mpfr_init2(u, RAD_PREC);
        mpfr_set_ui_2exp(u, 1, ex, MPFR_RNDU);
        mpfr_add(r, r, u, MPFR_RNDU);
        mpfr_clear(u);
    }

    bool is_exact() const { return mpfr_zero_p(r); }
    bool contains_zero() const { return mpfr_cmpabs(m, r) <= 0; }
    bool is_nonzero() const { return !contains_zero(); }
    bool definitely_positive() const { return mpfr_sgn(m) > 0 && !contains_zero(); }
    bool definitely_negative() const { return mpfr_sgn(m) < 0 && !contains_zero(); }

    double mid_d() const { return mpfr_get_d(m, MPFR_RNDN); }
    double rad_d() const { return mpfr_get_d(r, MPFR_RNDU); }

    // upper bound |x| <= this, as a low-prec mpfr value
    void mag_upper(mpfr_t out) const {
        mpfr_abs(out, m, MPFR_RNDU);
        mpfr_add(out, out, r, MPFR_RNDU);
    }
    // lower bound 0 <= this <= |x|; 0 when the ball straddles 0
    void mag_lower(mpfr_t out) const {
        mpfr_abs(out, m, MPFR_RNDD);
        mpfr_sub(out, out, r, MPFR_RNDD);
        if (mpfr_sgn(out) < 0) mpfr_set_zero(out, 1);
    }

    friend RealBall operator+(const RealBall& a, const RealBall& b) {
        RealBall c;
        int t = mpfr_add(c.m, a.m, b.m, MPFR_RNDN);
        mpfr_add(c.r, a.r, b.r, MPFR_RNDU);
        if (t != 0) c.bump_ulp();
        return c;
    }
    friend RealBall operator-(const RealBall& a, const RealBall& b) {
        RealBall c;
        int t = mpfr_sub(c.m, a.m, b.m, MPFR_RNDN);
        mpfr_add(c.r, a.r, b.r, MPFR_RNDU);
        if (t != 0) c.bump_ulp();
        return c;
    }
    RealBall operator-() const {
        RealBall c(*this);
        mpfr_neg(c.m, c.m, MPFR_RNDN);
        return c;
    }
    friend RealBall operator*(const RealBall& a, const RealBall& b) {
        RealBall c;
        int t = mpfr_mul(c.m, a.m, b.m, MPFR_RNDN);
        mpfr_t am, bm, e;
        mpfr_init2(am, RAD_PREC); mpfr_init2(bm, RAD_PREC); mpfr_init2(e, RAD_PREC);
        mpfr_abs(am, a.m, MPFR_RNDU);
        mpfr_abs(bm, b.m, MPFR_RNDU);
        mpfr_mul(e, am, b.r, MPFR_RNDU);
        mpfr_add(c.r, c.r, e, MPFR_RNDU);
        mpfr_mul(e, bm, a.r, MPFR_RNDU);
        mpfr_add(c.r, c.r, e, MPFR_RNDU);
        mpfr_mul(e, a.r, b.r, MPFR_RNDU);
        mpfr_add(c.r, c.r, e, MPFR_RNDU);
        mpfr_clear(am); mpfr_clear(bm); mpfr_clear(e);
        if (t != 0) c.bump_ulp();
        return c;
    }
    RealBall inv() const {
        mpfr_t lo;
        mpfr_init2(lo, RAD_PREC);
        mag_lower(lo);
        if (mpfr_sgn(lo) <= 0) {
            mpfr_clear(lo);
            throw std::domain_error("RealBall::inv: ball contains zero");
        }
        RealBall c;
        int t = mpfr_ui_div(c.m, 1, m, MPFR_RNDN);
        // |1/x - 1/m| <= r / (|m| * lo)
        mpfr_t e, am;
        mpfr_init2(e, RAD_PREC); mpfr_init2(am, RAD_PREC);
        mpfr_abs(am, m, MPFR_RNDD);
        mpfr_mul(e, am, lo, MPFR_RNDD);
        mpfr_div(e, r, e, MPFR_RNDU);
        mpfr_set(c.r, e, MPFR_RNDU);
        mpfr_clear(e); mpfr_clear(am); mpfr_clear(lo);
        if (t != 0) c.bump_ulp();
        return c;
    }
    friend RealBall operator/(const RealBall& a, const RealBall& b) { return a * b.inv(); }

    friend RealBall sqrt(const RealBall& a) {
        // domain: [lo, hi] with hi >= 0; image of the nonnegative part
        RealBall c;
        mpfr_t hi, s_hi, lo;
        mpfr_init2(hi, RAD_PREC); mpfr_init2(s_hi, RAD_PREC); mpfr_init2(lo, RAD_PREC);
        mpfr_add(hi, a.m, a.r, MPFR_RNDU);
        if (mpfr_sgn(hi) < 0) {
            mpfr_clear(hi); mpfr_clear(s_hi); mpfr_clear(lo);
            throw std::domain_error("sqrt of negative ball");
        }
        mpfr_sub(lo, a.m, a.r, MPFR_RNDD);
        if (mpfr_sgn(lo) > 0) {
            int t = mpfr_sqrt(c.m, a.m, MPFR_RNDN);
            // |sqrt(x)-sqrt(m)| <= r / (2 sqrt(lo))
            mpfr_sqrt(lo, lo, MPFR_RNDD);
            mpfr_mul_ui(lo, lo, 2, MPFR_RNDD);
            mpfr_div(c.r, a.r, lo, MPFR_RNDU);
            if (t != 0) c.bump_ulp();
        } else {
            // straddles 0: enclose [0, sqrt(hi)]
            mpfr_sqrt(s_hi, hi, MPFR_RNDU);
            mpfr_div_ui(c.m, s_hi, 2, MPFR_RNDU);
            mpfr_set(c.r, c.m, MPFR_RNDU);
            mpfr_nextabove(c.r);
        }
        mpfr_clear(hi); mpfr_clear(s_hi); mpfr_clear(lo);
        return c;
    }
    friend RealBall abs(const RealBall& a) {
        RealBall c(a);
        mpfr_abs(c.m, c.m, MPFR_RNDN);
        return c;
    }

    static RealBall pi() {
        RealBall c;
        mpfr_const_pi(c.m, MPFR_RNDN);
        c.bump_ulp();
        return c;
    }

    std::string str(int digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, m);
        std::string out(s);
        mpfr_free_str(s);
        if (!mpfr_zero_p(r)) {
            mpfr_asprintf(&s, "%.2Rg", r);
            out += " +/- ";
            out += s;
            mpfr_free_str(s);
        }
        return out;
    }
};

class ComplexBall {
public:
    RealBall re, im;

    ComplexBall() = default;
    ComplexBall(RealBall r, RealBall i) : re(std::move(r)), im(std::move(i)) {}
    explicit ComplexBall(long n) : re(n), im(0L) {}
    explicit ComplexBall(const Rat& q) : re(q), im(0L) {}
    explicit ComplexBall(const RealBall& r) : re(r), im(0L) {}
    ComplexBall(double x, double y) : re(x), im(y) {}

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool is_nonzero() const { return !contains_zero(); }

    double rad_d() const { return re.rad_d() + im.rad_d(); }

    friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
        return {a.re - b.re, a.im - b.im};
    }
    ComplexBall operator-() const { return {-re, -im}; }
    friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    ComplexBall conj() const { return {re, -im}; }
    RealBall norm2() const { return re * re + im * im; }
    ComplexBall inv() const {
        RealBall n = norm2().inv();
        return {re * n, -(im * n)};
    }
    friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) { return a * b.inv(); }
    friend ComplexBall operator*(const RealBall& s, const ComplexBall& a) {
        return {s * a.re, s * a.im};
    }

    // |z| as a real ball
    RealBall cabs() const { return sqrt(norm2()); }

    std::string str(int digits = 20) const {
        return "(" + re.str(digits) + ", " + im.str(digits) + ")";
    }
};

// principal square root; exact negative reals take the +i side (the i0+
// prescription). Balls that straddle the cut are rejected.
inline ComplexBall csqrt(const ComplexBall& z) {
    RealBall a = z.cabs();
    if (a.contains_zero())
        throw std::domain_error("csqrt: ball contains zero");
    RealBall half(Rat(1, 2));
    if (mpfr_sgn(z.re.m) >= 0) {
        RealBall s = sqrt((a + z.re) * half);
        RealBall t = z.im * half / s;
        return {s, t};
    }
    bool im_exact_zero = mpfr_zero_p(z.im.m) && z.im.is_exact();
    if (z.im.contains_zero() && !im_exact_zero)
        throw std::domain_error("csqrt: ball straddles the branch cut");
    RealBall s = sqrt((a - z.re) * half); // |Im(sqrt z)|
    RealBall t = z.im * half / s;
    if (im_exact_zero || z.im.definitely_positive())
        return {t, s};
    return {-t, -s}; // im < 0: Re(w) = -t > 0, Im(w) = -s < 0
}

inline RealBall rlog(const RealBall& x) {
    mpfr_t lo;
    mpfr_init2(lo, RAD_PREC);
    x.mag_lower(lo);
    if (mpfr_sgn(lo) <= 0 || mpfr_sgn(x.m) < 0) {
        mpfr_clear(lo);
        throw std::domain_error("rlog: nonpositive ball");
    }
    RealBall c;
    int t = mpfr_log(c.m, x.m, MPFR_RNDN);
    mpfr_div(c.r, x.r, lo, MPFR_RNDU);
    mpfr_clear(lo);
    if (t != 0) c.bump_ulp();
    return c;
}

inline RealBall ratan2(const RealBall& y, const RealBall& x) {
    // discontinuous across the negative real axis: reject straddling balls
    // (an exact y == 0 with x < 0 is fine and lands on +pi, the i0+ side)
    if (!x.definitely_positive() && y.contains_zero() && !(mpfr_zero_p(y.m) && y.is_exact()))
        throw std::domain_error("ratan2: ball straddles the branch cut");
    // derivative bound: |grad atan2| = 1/|z|
    RealBall n2 = x * x + y * y;
    mpfr_t lo;
    mpfr_init2(lo, RAD_PREC);
    n2.mag_lower(lo);
    if (mpfr_sgn(lo) <= 0) {
        mpfr_clear(lo);
        throw std::domain_error("ratan2: ball contains origin");
    }
    RealBall c;
    int t = mpfr_atan2(c.m, y.m, x.m, MPFR_RNDN);
    mpfr_sqrt(lo, lo, MPFR_RNDD);
    mpfr_t e;
    mpfr_init2(e, RAD_PREC);
    mpfr_add(e, x.r, y.r, MPFR_RNDU);
    mpfr_div(e, e, lo, MPFR_RNDU);
    mpfr_add(c.r, c.r, e, MPFR_RNDU);
    mpfr_clear(e); mpfr_clear(lo);
    if (t != 0) c.bump_ulp();
    return c;
}

inline RealBall rexp(const RealBall& x) {
    RealBall c;
    int t = mpfr_exp(c.m, x.m, MPFR_RNDN);
    // |e^x - e^m| <= e^m (e^r - 1) <= 2 e^m r for r <= 1/2
    if (mpfr_cmp_d(x.r, 0.5) > 0) throw std::domain_error("rexp: radius too large");
    mpfr_t e;
    mpfr_init2(e, RAD_PREC);
    mpfr_abs(e, c.m, MPFR_RNDU);
    mpfr_mul(e, e, x.r, MPFR_RNDU);
    mpfr_mul_ui(e, e, 2, MPFR_RNDU);
    mpfr_add(c.r, c.r, e, MPFR_RNDU);
    mpfr_clear(e);
    if (t != 0) c.bump_ulp();
    return c;
}

inline RealBall rsin(const RealBall& x) {
    RealBall c;
    int t = mpfr_sin(c.m, x.m, MPFR_RNDN);
    mpfr_add(c.r, c.r, x.r, MPFR_RNDU); // |sin'| <= 1
    if (t != 0) c.bump_ulp();
    return c;
}
inline RealBall rcos(const RealBall& x) {
    RealBall c;
    int t = mpfr_cos(c.m, x.m, MPFR_RNDN);
    mpfr_add(c.r, c.r, x.r, MPFR_RNDU);
    if (t != 0) c.bump_ulp();
    return c;
}

// principal log
inline ComplexBall clog(const ComplexBall& z) {
    RealBall a2 = z.norm2();
    RealBall lg = rlog(a2) * RealBall(Rat(1, 2));
    RealBall th = ratan2(z.im, z.re);
    return {lg, th};
}

inline ComplexBall cexp(const ComplexBall& z) {
    RealBall ex = rexp(z.re);
    return {ex * rcos(z.im), ex * rsin(z.im)};
}

// principal power z^e for rational e (integer exponents handled exactly)
inline ComplexBall cpow(const ComplexBall& z, const Rat& e) {
    if (e == 0) return ComplexBall(1L);
    if (denom(e) == 1 && numer(e).fits_slong_p()) {
        long n = numer(e).get_si();
        ComplexBall b = n > 0 ? z : z.inv(), r(1L);
        for (long k = std::abs(n); k > 0; k--) r = r * b;
        return r;
    }
    return cexp(ComplexBall(RealBall(e)) * clog(z));
}

inline ComplexBall cpow_int(const ComplexBall& z, long n) { return cpow(z, Rat(n)); }

} // namespace icl
