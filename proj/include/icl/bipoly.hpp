#pragma once
// Bivariate polynomials in an auxiliary variable v with UniPoly coefficients
// in t, and the Sylvester resultant eliminating v. The resultant is computed
// multimodularly: specialize t over F_p, take scalar resultants, interpolate,
// then CRT back to Q. Evaluation points where a leading coefficient drops
// degree are skipped so the interpolated values agree with the determinant
// polynomial.

#include "icl/poly.hpp"
#include "icl/polyq.hpp"
#include "icl/crt.hpp"

namespace icl {

struct BiPoly {
    // coefficient of v^i is a UniPoly in t
    char inner = 't';
    std::vector<UniPoly<Rat>> c;

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree_v() const { return (int)c.size() - 1; }
    int degree_t() const {
        int d = -1;
        for (const auto& p : c) d = std::max(d, p.degree());
        return d;
    }

    static BiPoly from_v_poly(const UniPoly<Rat>& pv, char inner = 't') {
        BiPoly b;
        b.inner = inner;
        for (const auto& coef : pv.c)
            b.c.push_back(UniPoly<Rat>::constant(inner, coef));
        b.trim();
        return b;
    }

    UniPoly<Fp> specialize(const Fp& tval) const {
        UniPoly<Fp> r('v');
        r.c.reserve(c.size());
        for (const auto& p : c) r.c.push_back(reduce_mod(p, tval.p).eval<Fp>(tval));
        r.trim();
        return r;
    }
};

// p(v) with polynomial-in-t coefficients, built by substituting v-polynomials
// whose coefficients are t-polynomials into a scalar polynomial: helper to
// compose q(expr) where expr is BiPoly and q is a plain polynomial
inline BiPoly bipoly_compose(const UniPoly<Rat>& q, const BiPoly& expr) {
    BiPoly r;
    r.inner = expr.inner;
    for (int i = q.degree(); i >= 0; i--) {
        // r = r*expr + q_i
        BiPoly nr;
        nr.inner = r.inner;
        if (!r.is_zero() && !expr.is_zero()) {
            nr.c.assign(r.c.size() + expr.c.size() - 1, UniPoly<Rat>(expr.inner));
            for (size_t a = 0; a < r.c.size(); a++)
                for (size_t b = 0; b < expr.c.size(); b++)
                    nr.c[a + b] = nr.c[a + b] + r.c[a] * expr.c[b];
        }
        if (sgn(q.c[i]) != 0) {
            if (nr.c.empty()) nr.c.push_back(UniPoly<Rat>::constant(expr.inner, q.c[i]));
            else nr.c[0] = nr.c[0] + UniPoly<Rat>::constant(expr.inner, q.c[i]);
        }
        nr.trim();
        r = nr;
    }
    return r;
}

inline BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    r.inner = a.c.empty() ? b.inner : a.inner;
    r.c.resize(std::max(a.c.size(), b.c.size()), UniPoly<Rat>(r.inner));
    for (size_t i = 0; i < r.c.size(); i++) {
        if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
        if (i < b.c.size()) r.c[i] = r.c[i] + b.c[i];
    }
    r.trim();
    return r;
}
inline BiPoly operator-(const BiPoly& a) {
    BiPoly r = a;
    for (auto& p : r.c) p = -p;
    return r;
}
inline BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

// Sylvester resultant w.r.t. v, exact over Q
UniPoly<Rat> resultant_v(const BiPoly& p, const BiPoly& q);

} // namespace icl
