#pragma once
// gcd over Q[x] through prime-field images (monic gcd mod p, CRT lift of
// lc-scaled images, exact divisibility check). Falls back to more primes on
// unlucky reductions.

#include "icl/poly.hpp"
#include "icl/crt.hpp"

namespace icl {

inline UniPoly<Rat> gcd(const UniPoly<Rat>& A, const UniPoly<Rat>& B) {
    if (A.is_zero()) return B.is_zero() ? B : make_monic(B);
    if (B.is_zero()) return make_monic(A);
    UniPoly<Rat> a = make_primitive(A), b = make_primitive(B);
    if (a.degree() == 0 || b.degree() == 0) return UniPoly<Rat>::constant(A.var, Rat(1));
    Int la = numer(a.lead()), lb = numer(b.lead());
    Int l = gcd(la, lb);

    int dmin = std::min(a.degree(), b.degree()) + 1;
    Int lift_mod = 0;
    UniPoly<Rat> lift(a.var);
    uint64_t pstart = 0;
    for (int tries = 0; tries < 200; tries++) {
        auto ps = primes_below_bit(62, 1, pstart);
        uint64_t p = ps.at(0);
        pstart = p;
        if (mpz_divisible_ui_p(la.get_mpz_t(), p) || mpz_divisible_ui_p(lb.get_mpz_t(), p))
            continue;
        auto g = gcd_field(reduce_mod(a, p), reduce_mod(b, p));
        if (g.degree() == 0) return UniPoly<Rat>::constant(A.var, Rat(1));
        if (g.degree() > dmin) continue; // unlucky prime
        Fp lp = Fp::from_mpz(l, p);
        UniPoly<Fp> gs = lp * g;
        if (g.degree() < dmin) { // restart accumulation at the smaller degree
            dmin = g.degree();
            lift_mod = 0;
        }
        // CRT-accumulate coefficient-wise with symmetric lift
        if (lift_mod == 0) {
            lift.c.assign(dmin + 1, Rat(0));
            for (int i = 0; i <= dmin; i++) lift.c[i] = Rat(Int((unsigned long)gs.coeff(i).v));
            lift_mod = Int((unsigned long)p);
        } else {
            for (int i = 0; i <= dmin; i++) {
                Int r = numer(lift.c[i]);
                if (r < 0) r += lift_mod;
                Int m = lift_mod;
                crt_step(r, m, gs.coeff(i).v, p);
                lift.c[i] = Rat(r);
            }
            lift_mod *= Int((unsigned long)p);
        }
        // symmetric representatives
        UniPoly<Rat> cand(a.var);
        cand.c.resize(dmin + 1, Rat(0));
        for (int i = 0; i <= dmin; i++) {
            Int r = numer(lift.c[i]);
            if (2 * r > lift_mod) r -= lift_mod;
            cand.c[i] = Rat(r);
        }
        cand.trim();
        if (cand.is_zero()) continue;
        cand = make_primitive(cand);
        if (divides(cand, a) && divides(cand, b))
            return make_monic(cand);
    }
    throw std::runtime_error("modular gcd did not stabilize");
}

} // namespace icl
