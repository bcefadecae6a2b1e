#pragma once
// Chinese remaindering and rational reconstruction of scalars and
// polynomials from prime-field images.

#include "icl/poly.hpp"
#include <optional>

namespace icl {

// x = r1 mod m1, x = r2 mod p2 -> x mod m1*p2, symmetric-range inputs allowed
inline void crt_step(Int& r, Int& m, uint64_t r2, uint64_t p2) {
    Int p(Int((unsigned long)p2));
    Int d = (Int((unsigned long)r2) - r) % p;
    if (d < 0) d += p;
    Int minv;
    mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    Int k = (d * minv) % p;
    r += k * m;
    m *= p;
}

// Wang's rational reconstruction: find n/d with |n|, d <= sqrt(m/2),
// n/d = c mod m. Returns nullopt when no such fraction exists (signals
// "need more primes").
inline std::optional<Rat> rational_reconstruct(const Int& c, const Int& m) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    Int r0 = m, r1 = c % m, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1; r0 = r1; r1 = r2;
        Int t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    if (sgn(t1) < 0) { t1 = -t1; r1 = -r1; }
    if (t1 > bound || gcd(t1, m) != 1) return std::nullopt;
    Rat res(r1, t1);
    res.canonicalize();
    return res;
}

struct PolyResidue {
    UniPoly<Fp> poly;
    uint64_t prime;
};

// coefficient-wise CRT lift + rational reconstruction. Throws on
// inconsistent degrees; returns nullopt when the prime product is too small.
inline std::optional<UniPoly<Rat>> crt_reconstruct(const std::vector<PolyResidue>& residues) {
    if (residues.empty()) throw std::invalid_argument("crt_reconstruct: no residues");
    int deg = residues[0].poly.degree();
    for (const auto& r : residues)
        if (r.poly.degree() != deg)
            throw std::invalid_argument("crt_reconstruct: inconsistent degrees across primes");
    UniPoly<Rat> out(residues[0].poly.var);
    out.c.resize(deg + 1, Rat(0));
    for (int i = 0; i <= deg; i++) {
        Int r = Int((unsigned long)residues[0].poly.coeff(i).v);
        Int m = Int((unsigned long)residues[0].prime);
        for (size_t j = 1; j < residues.size(); j++)
            crt_step(r, m, residues[j].poly.coeff(i).v, residues[j].prime);
        auto q = rational_reconstruct(r, m);
        if (!q) return std::nullopt;
        out.c[i] = *q;
    }
    out.trim();
    return out;
}

} // namespace icl
