#pragma once
// Chebyshev polynomials, cyclotomic polynomials, and the minimal polynomial
// of 2cos(2pi/n) (cyclotomic compressed through z -> z + 1/z).

#include "icl/poly.hpp"
#include <map>

namespace icl {

template <class K>
UniPoly<K> chebyshev_t(int n, char var = 'x') {
    if (n < 0) throw std::invalid_argument("chebyshev_t: n < 0");
    UniPoly<K> t0 = UniPoly<K>::constant(var, K(1));
    if (n == 0) return t0;
    UniPoly<K> x = UniPoly<K>::monomial(var, K(1), 1);
    UniPoly<K> t1 = x;
    for (int k = 2; k <= n; k++) {
        UniPoly<K> t2 = K(2) * (x * t1) - t0;
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

template <class K>
UniPoly<K> chebyshev_u(int n, char var = 'x') {
    if (n < 0) throw std::invalid_argument("chebyshev_u: n < 0");
    UniPoly<K> u0 = UniPoly<K>::constant(var, K(1));
    if (n == 0) return u0;
    UniPoly<K> x = UniPoly<K>::monomial(var, K(1), 1);
    UniPoly<K> u1 = K(2) * x;
    for (int k = 2; k <= n; k++) {
        UniPoly<K> u2 = K(2) * (x * u1) - u0;
        u0 = u1;
        u1 = u2;
    }
    return u1;
}

inline UniPoly<Rat> cyclotomic(int n) {
    // x^n - 1 = prod_{d | n} Phi_d
    static std::map<int, UniPoly<Rat>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    UniPoly<Rat> xn(UniPoly<Rat>::monomial('x', Rat(1), n) - UniPoly<Rat>::constant('x', Rat(1)));
    UniPoly<Rat> q = xn;
    for (int d = 1; d < n; d++)
        if (n % d == 0) q = exact_div(q, cyclotomic(d));
    cache[n] = q;
    return q;
}

// minimal polynomial over Q of y = 2cos(2pi/n), monic with integer coeffs.
// For n > 2 this is the compression of Phi_n: Phi_n(z) = z^(phi/2) psi(z+1/z).
inline UniPoly<Rat> min_poly_2cos(int n) {
    if (n == 1) return parse_poly("-2*y^0 + 1*y^1", 'y'); // y - 2
    if (n == 2) return parse_poly("2*y^0 + 1*y^1", 'y');  // y + 2
    UniPoly<Rat> phi = cyclotomic(n);
    int m = phi.degree() / 2;
    // peel off leading (z+1/z)^k terms: coefficients of psi from the top
    UniPoly<Rat> rem = phi;
    UniPoly<Rat> psi('y');
    psi.c.assign(m + 1, Rat(0));
    UniPoly<Rat> z1 = parse_poly("1*x^0 + 1*x^2", 'x'); // z*(y at z+1/z) = 1 + z^2
    // build (1 + z^2)^k * z^(m-k) incrementally and subtract
    for (int k = m; k >= 0; k--) {
        Rat c = rem.coeff(m + k); // coefficient of z^(m+k)
        psi.c[k] = c;
        if (sgn(c) != 0) {
            UniPoly<Rat> term = UniPoly<Rat>::constant('x', c);
            for (int i = 0; i < k; i++) term = term * z1;
            term = shift_up(term, m - k);
            rem = rem - term;
        }
    }
    if (!rem.is_zero())
        throw std::logic_error("min_poly_2cos: compression failed (cyclotomic not palindromic?)");
    psi.trim();
    return psi;
}

// minimal polynomial of cos(2pi/n): substitute y = 2c and clear the content
inline UniPoly<Rat> min_poly_cos(int n) {
    UniPoly<Rat> psi = min_poly_2cos(n);
    UniPoly<Rat> out('c');
    out.c.resize(psi.c.size(), Rat(0));
    Rat two(2);
    Rat pw(1);
    for (int i = 0; i <= psi.degree(); i++) {
        out.c[i] = psi.c[i] * pw;
        pw *= two;
    }
    out.trim();
    return make_primitive(out);
}

} // namespace icl
