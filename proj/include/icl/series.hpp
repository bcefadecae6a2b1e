#pragma once
// Exact truncated power series: coefficients c0..cN in a tagged variable,
// truncation order N recorded. Every stored coefficient is exact.

#include "icl/poly.hpp"
#include "icl/field_ext.hpp"
#include <string>

namespace icl {

inline Rat k_inv(const Rat& x) { return Rat(1) / x; }
inline Fp k_inv(const Fp& x) { return x.inv(); }
inline QuadExt k_inv(const QuadExt& x) { return x.inv(); }
template <class K> ExtElem<K> k_inv(const ExtElem<K>& x) { return x.inv(); }

template <class K>
struct Series {
    char var = 'w';
    int N = 0;               // truncation order: coefficients 0..N are valid
    std::vector<K> c;        // size N+1 (zero-padded)
    std::string provenance;

    Series() = default;
    Series(char v, int order) : var(v), N(order), c(order + 1, K{}) {}

    const K& at(int k) const { return c.at(k); }
    K coeff(int k) const { return k <= N ? c[k] : K{}; }
    void set(int k, const K& x) { c.at(k) = x; }

    int valuation() const {
        for (int i = 0; i <= N; i++)
            if (!domain_traits<K>::is_zero(c[i])) return i;
        return N + 1; // zero through the truncation order
    }
    bool is_zero_through(int order) const {
        for (int i = 0; i <= std::min(order, N); i++)
            if (!domain_traits<K>::is_zero(c[i])) return false;
        return true;
    }

    Series truncated(int order) const {
        Series r(var, std::min(order, N));
        for (int i = 0; i <= r.N; i++) r.c[i] = c[i];
        r.provenance = provenance;
        return r;
    }

    static Series from_poly(const UniPoly<K>& p, int order) {
        Series r(p.var, order);
        for (int i = 0; i <= std::min(order, p.degree()); i++) r.c[i] = p.c[i];
        return r;
    }
    UniPoly<K> to_poly() const { return UniPoly<K>(var, c); }
};

template <class K>
Series<K> operator+(const Series<K>& a, const Series<K>& b) {
    Series<K> r(detail::join_var(a.var, b.var), std::min(a.N, b.N));
    for (int i = 0; i <= r.N; i++) r.c[i] = a.c[i] + b.c[i];
    return r;
}

template <class K>
Series<K> operator-(const Series<K>& a, const Series<K>& b) {
    Series<K> r(detail::join_var(a.var, b.var), std::min(a.N, b.N));
    for (int i = 0; i <= r.N; i++) r.c[i] = a.c[i] - b.c[i];
    return r;
}

template <class K>
Series<K> operator-(const Series<K>& a) {
    Series<K> r(a.var, a.N);
    for (int i = 0; i <= r.N; i++) r.c[i] = -a.c[i];
    return r;
}

template <class K>
Series<K> mul_trunc(const Series<K>& a, const Series<K>& b, int order) {
    Series<K> r(detail::join_var(a.var, b.var), order);
    for (int i = 0; i <= std::min(a.N, order); i++) {
        if (domain_traits<K>::is_zero(a.c[i])) continue;
        int jmax = std::min(b.N, order - i);
        for (int j = 0; j <= jmax; j++)
            r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

template <class K>
Series<K> operator*(const Series<K>& a, const Series<K>& b) {
    // conservative validity: order min(Na + val_b, Nb + val_a)
    int order = std::min(a.N + b.valuation(), b.N + a.valuation());
    order = std::min(order, a.N + b.N);
    return mul_trunc(a, b, order);
}

template <class K>
Series<K> operator*(const K& s, const Series<K>& a) {
    Series<K> r(a.var, a.N);
    for (int i = 0; i <= r.N; i++) r.c[i] = s * a.c[i];
    return r;
}

template <class K>
Series<K> operator*(const UniPoly<K>& p, const Series<K>& a) {
    return mul_trunc(Series<K>::from_poly(p, a.N), a, a.N);
}

template <class K>
Series<K> derivative(const Series<K>& a) {
    Series<K> r(a.var, std::max(a.N - 1, 0));
    for (int i = 1; i <= a.N; i++) {
        K k = a.c[i];
        // multiply by i without requiring K(int): repeated addition is too
        // slow; use doubling
        K acc{};
        K base = a.c[i];
        int m = i;
        while (m) {
            if (m & 1) acc += base;
            base += base;
            m >>= 1;
        }
        r.c[i - 1] = acc;
        (void)k;
    }
    return r;
}

template <class K>
Series<K> inverse(const Series<K>& a) {
    if (domain_traits<K>::is_zero(a.c[0]))
        throw std::domain_error("series inverse: zero constant term");
    Series<K> r(a.var, a.N);
    K inv0 = k_inv(a.c[0]);
    r.c[0] = inv0;
    for (int k = 1; k <= a.N; k++) {
        K s{};
        for (int j = 1; j <= std::min(k, a.N); j++)
            s += a.c[j] * r.c[k - j];
        r.c[k] = -(inv0 * s);
    }
    return r;
}

// (series with constant term 1) ^ alpha, alpha rational; K must embed Q
template <class K>
Series<K> pow_rat(const Series<K>& a, const Rat& alpha, const std::function<K(const Rat&)>& embed) {
    if (!(a.c[0] == embed(Rat(1))))
        throw std::domain_error("pow_rat: constant term must be 1");
    // y' a = alpha a' y  =>  k c_k = sum_{j=1..k} (alpha j - (k-j)) a_j c_{k-j}
    Series<K> r(a.var, a.N);
    r.c[0] = embed(Rat(1));
    for (int k = 1; k <= a.N; k++) {
        K s{};
        for (int j = 1; j <= k; j++) {
            Rat f = alpha * j - Rat(k - j);
            if (sgn(f) == 0) continue;
            s += embed(f) * (a.c[j] * r.c[k - j]);
        }
        r.c[k] = embed(Rat(1, k)) * s;
    }
    return r;
}

// composition a(b(x)) with b(0) = 0, plain Horner
template <class K>
Series<K> compose(const Series<K>& a, const Series<K>& b) {
    if (!domain_traits<K>::is_zero(b.c[0]))
        throw std::domain_error("series compose: inner constant term must vanish");
    Series<K> r(b.var, b.N);
    for (int i = a.N; i >= 0; i--) {
        r = mul_trunc(r, b, b.N);
        r.c[0] += a.c[i];
    }
    return r;
}

inline Series<Fp> reduce_mod(const Series<Rat>& a, uint64_t p) {
    Series<Fp> r(a.var, a.N);
    r.provenance = a.provenance;
    for (int i = 0; i <= a.N; i++) r.c[i] = Fp::from_rat(a.c[i], p);
    return r;
}

} // namespace icl
