#pragma once
// Algebraic extensions used for exact work at singular points:
//  - QuadExt: Q(sqrt(d)) elements a + b*sqrt(d), d a rational non-square
//    (d < 0 carries the quadratic surd points like the roots of 1+3w+4w^2);
//  - ExtElem<K>: K[alpha]/(f) for a squarefree modulus f. Inversion uses the
//    extended Euclid; hitting a zero divisor throws ZeroDivisorSplit carrying
//    the discovered factor so callers can split f and retry (dynamic
//    evaluation).

#include "icl/poly.hpp"
#include "icl/ball.hpp"
#include <memory>

namespace icl {

struct QuadExt {
    Rat a, b;   // a + b*sqrt(d)
    Rat d = 0;  // 0 tags a plain rational (b must be 0)

    QuadExt() = default;
    QuadExt(Rat x) : a(std::move(x)) {}
    QuadExt(long x) : a(Rat(x)) {}
    QuadExt(int x) : a(Rat(x)) {}
    QuadExt(Rat x, Rat y, Rat dd) : a(std::move(x)), b(std::move(y)), d(std::move(dd)) {
        if (sgn(b) == 0) d = 0;
    }

    static Rat join(const Rat& d1, const Rat& d2) {
        if (sgn(d1) == 0) return d2;
        if (sgn(d2) == 0 || d1 == d2) return d1;
        throw std::invalid_argument("QuadExt: mixing different surds");
    }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return {x.a + y.a, x.b + y.b, join(x.d, y.d)};
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return {x.a - y.a, x.b - y.b, join(x.d, y.d)};
    }
    QuadExt operator-() const { return {-a, -b, d}; }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        Rat dd = join(x.d, y.d);
        return {x.a * y.a + x.b * y.b * dd, x.a * y.b + x.b * y.a, dd};
    }
    QuadExt conj() const { return {a, -b, d}; }
    QuadExt inv() const {
        Rat n = a * a - b * b * d;
        if (sgn(n) == 0) throw std::domain_error("QuadExt: inverse of zero");
        return {a / n, -b / n, d};
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inv(); }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        join(x.d, y.d); // throws on incompatible surds
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool is_rational() const { return sgn(b) == 0; }

    // numeric image; sqrt(d) with d < 0 maps to +i*sqrt(-d)
    ComplexBall to_ball() const {
        ComplexBall r{RealBall(a), RealBall(0L)};
        if (sgn(b) != 0) {
            if (sgn(d) > 0) {
                RealBall s = sqrt(RealBall(d));
                r.re = r.re + RealBall(b) * s;
            } else {
                RealBall s = sqrt(RealBall(Rat(-d)));
                r.im = r.im + RealBall(b) * s;
            }
        }
        return r;
    }
};

template <> struct domain_traits<QuadExt> {
    static constexpr bool exact = true;
    static bool is_zero(const QuadExt& x) { return x.is_zero(); }
    static std::string str(const QuadExt& x) {
        if (x.is_rational()) return x.a.get_str();
        return x.a.get_str() + "+" + x.b.get_str() + "*sqrt(" + x.d.get_str() + ")";
    }
};

inline QuadExt operator*(const Rat& s, const QuadExt& x) { return QuadExt(s) * x; }

// thrown when a quotient-ring inverse discovers that the modulus splits
struct ZeroDivisorSplit : std::runtime_error {
    UniPoly<Rat> factor;
    explicit ZeroDivisorSplit(UniPoly<Rat> f)
        : std::runtime_error("modulus splits"), factor(std::move(f)) {}
};

template <class K>
struct ExtCtx {
    UniPoly<K> modulus;
    explicit ExtCtx(UniPoly<K> f) : modulus(std::move(f)) {}
};

template <class K>
class ExtElem {
public:
    UniPoly<K> v;                       // reduced representative
    std::shared_ptr<const ExtCtx<K>> ctx; // null for "plain scalar" zero/ints

    ExtElem() = default;
    ExtElem(long n) : v(UniPoly<K>::constant('a', K(n))) { v.trim(); }
    ExtElem(UniPoly<K> val, std::shared_ptr<const ExtCtx<K>> c)
        : v(std::move(val)), ctx(std::move(c)) {
        v = poly_mod(v, ctx->modulus);
    }

    static ExtElem scalar(const K& x) {
        ExtElem e;
        e.v = UniPoly<K>::constant('a', x);
        return e;
    }
    static ExtElem gen(std::shared_ptr<const ExtCtx<K>> c) {
        return ExtElem(UniPoly<K>::monomial('a', K(1), 1), std::move(c));
    }

    std::shared_ptr<const ExtCtx<K>> join(const ExtElem& o) const { return ctx ? ctx : o.ctx; }

    friend ExtElem operator+(const ExtElem& x, const ExtElem& y) {
        ExtElem r;
        r.v = x.v + y.v;
        r.ctx = x.join(y);
        return r;
    }
    friend ExtElem operator-(const ExtElem& x, const ExtElem& y) {
        ExtElem r;
        r.v = x.v - y.v;
        r.ctx = x.join(y);
        return r;
    }
    ExtElem operator-() const {
        ExtElem r;
        r.v = -v;
        r.ctx = ctx;
        return r;
    }
    friend ExtElem operator*(const ExtElem& x, const ExtElem& y) {
        ExtElem r;
        r.ctx = x.join(y);
        r.v = r.ctx ? poly_mod(x.v * y.v, r.ctx->modulus) : x.v * y.v;
        return r;
    }
    ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }
    ExtElem& operator-=(const ExtElem& o) { return *this = *this - o; }
    ExtElem& operator*=(const ExtElem& o) { return *this = *this * o; }

    bool is_zero() const { return v.is_zero(); }
    friend bool operator==(const ExtElem& x, const ExtElem& y) { return (x - y).is_zero(); }
    friend bool operator!=(const ExtElem& x, const ExtElem& y) { return !(x == y); }

    ExtElem inv() const; // defined below; may throw ZeroDivisorSplit
    friend ExtElem operator/(const ExtElem& x, const ExtElem& y) { return x * y.inv(); }
};

template <class K> struct domain_traits<ExtElem<K>> {
    static constexpr bool exact = true;
    static bool is_zero(const ExtElem<K>& x) { return x.is_zero(); }
    static std::string str(const ExtElem<K>& x) { return to_string_generic(x.v); }
    static std::string to_string_generic(const UniPoly<K>&) { return "<ext>"; }
};

// extended Euclid in K[x] mod f; non-invertible elements expose a factor
template <class K>
ExtElem<K> ExtElem<K>::inv() const {
    if (!ctx) {
        if (v.degree() > 0 || v.is_zero()) throw std::domain_error("ExtElem: inverse without context");
        ExtElem r;
        r.v = UniPoly<K>::constant(v.var, K(1) / v.c[0]);
        return r;
    }
    UniPoly<K> r0 = ctx->modulus, r1 = v;
    UniPoly<K> s0(v.var), s1 = UniPoly<K>::constant(v.var, K(1));
    while (!r1.is_zero() && r1.degree() > 0) {
        auto [q, r2] = divrem(r0, r1);
        auto s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r1.is_zero()) {
        // gcd(v, modulus) = r0 is a proper factor of the modulus
        if constexpr (std::is_same_v<K, Rat>)
            throw ZeroDivisorSplit(make_monic(r0));
        else
            throw std::domain_error("ExtElem: zero divisor");
    }
    ExtElem out;
    out.ctx = ctx;
    { K inv_lead = K(1) / r1.c[0]; out.v = poly_mod(inv_lead * s1, ctx->modulus); }
    return out;
}

template <>
inline ExtElem<Fp> ExtElem<Fp>::inv() const {
    if (!ctx) {
        if (v.degree() > 0 || v.is_zero()) throw std::domain_error("ExtElem: inverse without context");
        ExtElem r;
        r.v = UniPoly<Fp>::constant(v.var, v.c[0].inv());
        return r;
    }
    UniPoly<Fp> r0 = ctx->modulus, r1 = v;
    UniPoly<Fp> s0(v.var), s1 = UniPoly<Fp>::constant(v.var, Fp(1, ctx->modulus.lead().p));
    while (!r1.is_zero() && r1.degree() > 0) {
        auto [q, r2] = divrem(r0, r1);
        auto s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r1.is_zero()) throw std::domain_error("ExtElem<Fp>: zero divisor (modulus not irreducible)");
    ExtElem out;
    out.ctx = ctx;
    out.v = poly_mod(r1.c[0].inv() * s1, ctx->modulus);
    return out;
}

} // namespace icl
