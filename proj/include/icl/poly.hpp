#pragma once
// Dense univariate polynomials over an exact coefficient domain. The
// polynomial carries its variable tag (w, s, t, v, or a local x); operations
// on mismatched tags throw. Invariants: coefficient list trimmed so the
// leading coefficient is nonzero unless the polynomial is zero.

#include "icl/rat.hpp"
#include "icl/fp.hpp"
#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace icl {

template <class K>
struct UniPoly {
    char var = 'w';
    std::vector<K> c;

    UniPoly() = default;
    explicit UniPoly(char v) : var(v) {}
    UniPoly(char v, std::vector<K> coeffs) : var(v), c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && domain_traits<K>::is_zero(c.back())) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; } // -1 for zero poly
    const K& lead() const { return c.back(); }
    K coeff(int i) const {
        if (i < 0 || i >= (int)c.size()) return K{};
        return c[i];
    }

    static UniPoly monomial(char v, const K& a, int k) {
        UniPoly p(v);
        if (!domain_traits<K>::is_zero(a)) {
            p.c.assign(k + 1, K{});
            p.c[k] = a;
        }
        return p;
    }
    static UniPoly constant(char v, const K& a) { return monomial(v, a, 0); }

    template <class T>
    T eval(const T& x) const {
        if (c.empty()) return T{};
        T r = T(c.back());
        for (int i = (int)c.size() - 2; i >= 0; i--)
            r = r * x + T(c[i]);
        return r;
    }
    K operator()(const K& x) const { return eval<K>(x); }
};

namespace detail {
inline char join_var(char a, char b) {
    if (a == b) return a;
    throw std::invalid_argument(std::string("variable mismatch: ") + a + " vs " + b);
}
}

template <class K>
UniPoly<K> operator+(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    UniPoly<K> r(detail::join_var(a.var, b.var));
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); i++) {
        if (i < a.c.size() && i < b.c.size()) r.c[i] = a.c[i] + b.c[i];
        else if (i < a.c.size()) r.c[i] = a.c[i];
        else r.c[i] = b.c[i];
    }
    r.trim();
    return r;
}

template <class K>
UniPoly<K> operator-(const UniPoly<K>& a) {
    UniPoly<K> r(a.var);
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) r.c.push_back(-x);
    return r;
}

template <class K>
UniPoly<K> operator-(const UniPoly<K>& a, const UniPoly<K>& b) { return a + (-b); }

template <class K>
UniPoly<K> operator*(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly<K>(a.is_zero() ? b.var : a.var);
    UniPoly<K> r(detail::join_var(a.var, b.var));
    r.c.assign(a.c.size() + b.c.size() - 1, K{});
    for (size_t i = 0; i < a.c.size(); i++) {
        if (domain_traits<K>::is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); j++)
            r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

template <class K>
UniPoly<K> operator*(const K& s, const UniPoly<K>& a) {
    UniPoly<K> r(a.var);
    if (domain_traits<K>::is_zero(s)) return r;
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) r.c.push_back(s * x);
    r.trim();
    return r;
}

template <class K>
bool operator==(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); i++)
        if (!(a.c[i] == b.c[i])) return false;
    return true;
}

template <class K>
UniPoly<K> shift_up(const UniPoly<K>& a, int k) { // multiply by var^k
    if (a.is_zero()) return a;
    UniPoly<K> r(a.var);
    r.c.assign(a.c.size() + k, K{});
    std::copy(a.c.begin(), a.c.end(), r.c.begin() + k);
    return r;
}

template <class K>
UniPoly<K> derivative(const UniPoly<K>& a) {
    UniPoly<K> r(a.var);
    for (int i = 1; i <= a.degree(); i++)
        r.c.push_back(domain_traits<K>::is_zero(a.c[i]) ? K{} : a.c[i] * K(i));
    r.trim();
    return r;
}

// Fp lacks K(int); specialize via a small factory
template <>
inline UniPoly<Fp> derivative(const UniPoly<Fp>& a) {
    UniPoly<Fp> r(a.var);
    for (int i = 1; i <= a.degree(); i++)
        r.c.push_back(a.c[i] * Fp::from_int(i, a.c[i].p));
    r.trim();
    return r;
}

// field division: a = q*b + r with deg r < deg b
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divrem(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly<K> q(a.var), r = a;
    if (r.degree() < b.degree()) return {q, r};
    q.c.assign(r.degree() - b.degree() + 1, K{});
    K linv = K(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        K f = r.lead() * linv;
        q.c[k] = f;
        for (int i = 0; i <= b.degree(); i++)
            r.c[i + k] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <>
inline std::pair<UniPoly<Fp>, UniPoly<Fp>> divrem(const UniPoly<Fp>& a, const UniPoly<Fp>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly<Fp> q(a.var), r = a;
    if (r.degree() < b.degree()) return {q, r};
    q.c.assign(r.degree() - b.degree() + 1, Fp{});
    Fp linv = b.lead().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Fp f = r.lead() * linv;
        q.c[k] = f;
        for (int i = 0; i <= b.degree(); i++)
            r.c[i + k] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <class K>
UniPoly<K> poly_mod(const UniPoly<K>& a, const UniPoly<K>& b) { return divrem(a, b).second; }

template <class K>
bool divides(const UniPoly<K>& d, const UniPoly<K>& a) {
    if (d.is_zero()) return a.is_zero();
    return divrem(a, d).second.is_zero();
}

template <class K>
UniPoly<K> exact_div(const UniPoly<K>& a, const UniPoly<K>& d) {
    auto [q, r] = divrem(a, d);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

template <class K>
UniPoly<K> make_monic(const UniPoly<K>& a) {
    if (a.is_zero()) return a;
    K f = K(1) / a.lead();
    return f * a;
}
inline UniPoly<Fp> make_monic(const UniPoly<Fp>& a) {
    if (a.is_zero()) return a;
    return a.lead().inv() * a;
}

template <class K>
UniPoly<K> gcd_field(UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero()) {
        auto r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return make_monic(a);
}

// ---- rational-coefficient specifics -----------------------------------

inline Int int_content(const UniPoly<Rat>& a) { return content_gcd(a.c); }

// primitive integer form: divide by content, sign so leading coeff > 0
inline UniPoly<Rat> make_primitive(const UniPoly<Rat>& a) {
    if (a.is_zero()) return a;
    Int l = denominator_lcm(a.c), g = 0;
    for (const auto& r : a.c) g = gcd(g, Int(r.get_num() * (l / r.get_den())));
    Rat f(l, g);
    f.canonicalize();
    UniPoly<Rat> r = f * a;
    if (sgn(r.lead()) < 0) r = Rat(-1) * r;
    return r;
}

inline UniPoly<Fp> reduce_mod(const UniPoly<Rat>& a, uint64_t p) {
    UniPoly<Fp> r(a.var);
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) r.c.push_back(Fp::from_rat(x, p));
    r.trim();
    return r;
}

// gcd over Q via modular images: monic gcd mod several primes, CRT-lifted and
// verified by exact divisibility (retries on unlucky primes).
UniPoly<Rat> gcd(const UniPoly<Rat>& A, const UniPoly<Rat>& B);

inline UniPoly<Fp> gcd(const UniPoly<Fp>& a, const UniPoly<Fp>& b) { return gcd_field(a, b); }

template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part of zero polynomial");
    if (p.degree() == 0) return make_monic(p);
    auto g = gcd(p, derivative(p));
    if (g.degree() == 0) return make_monic(p);
    return make_monic(exact_div(p, UniPoly<K>(p.var, g.c)));
}

// rational version keeps the paper's display convention: primitive integer
// coefficients, positive leading coefficient
inline UniPoly<Rat> squarefree_part(const UniPoly<Rat>& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part of zero polynomial");
    if (p.degree() == 0) return UniPoly<Rat>::constant(p.var, Rat(1));
    auto g = gcd(p, derivative(p));
    if (g.degree() == 0) return make_primitive(p);
    return make_primitive(exact_div(p, UniPoly<Rat>(p.var, g.c)));
}

// resultant over a field via the Euclidean PRS with the standard scaling
template <class K>
K resultant(UniPoly<K> a, UniPoly<K> b, const K& one) {
    if (a.is_zero() || b.is_zero()) return K{};
    K res = one;
    while (true) {
        if (b.degree() == 0) {
            K l = b.lead(), acc = one;
            for (int i = 0; i < a.degree(); i++) acc = acc * l;
            return res * acc;
        }
        auto r = poly_mod(a, b);
        if (r.is_zero()) return K{};
        // res(a,b) = (-1)^(da*db) * lb^(da - dr) * res(b, r)
        int da = a.degree(), db = b.degree(), dr = r.degree();
        K l = b.lead(), acc = one;
        for (int i = 0; i < da - dr; i++) acc = acc * l;
        if ((da & 1) && (db & 1)) acc = -acc;
        res = res * acc;
        a = b;
        b = r;
    }
}

// Taylor shift: p(x + a)
template <class K>
UniPoly<K> taylor_shift(const UniPoly<K>& p, const K& a) {
    UniPoly<K> r(p.var);
    for (int i = p.degree(); i >= 0; i--) {
        // r = r*(x+a) + c[i]
        UniPoly<K> nr(p.var);
        nr.c.assign(r.c.size() + 1, K{});
        for (size_t j = 0; j < r.c.size(); j++) {
            nr.c[j + 1] += r.c[j];
            nr.c[j] += r.c[j] * a;
        }
        if (!domain_traits<K>::is_zero(p.c[i])) {
            if (nr.c.empty()) nr.c.push_back(p.c[i]);
            else nr.c[0] += p.c[i];
        }
        nr.trim();
        r = nr;
    }
    return r;
}

// p(q(x)) by Horner
template <class K>
UniPoly<K> compose(const UniPoly<K>& p, const UniPoly<K>& q) {
    UniPoly<K> r(q.var);
    for (int i = p.degree(); i >= 0; i--) {
        r = r * q;
        if (!domain_traits<K>::is_zero(p.c[i]))
            r = r + UniPoly<K>::constant(q.var, p.c[i]);
    }
    return r;
}

template <class K>
UniPoly<K> reversed(const UniPoly<K>& p, int deg) {
    // x^deg * p(1/x); requires deg >= deg(p)
    UniPoly<K> r(p.var);
    r.c.assign(deg + 1, K{});
    for (int i = 0; i <= p.degree(); i++) r.c[deg - i] = p.c[i];
    r.trim();
    return r;
}

template <class K>
UniPoly<K> retag(UniPoly<K> p, char v) { p.var = v; return p; }

// ---- canonical textual form -------------------------------------------
// sparse "coeff*var^k" terms, ascending powers, rationals as num/den

inline std::string to_string(const UniPoly<Rat>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= p.degree(); i++) {
        if (sgn(p.c[i]) == 0) continue;
        if (!first) os << " + ";
        os << p.c[i].get_str() << "*" << p.var << "^" << i;
        first = false;
    }
    return os.str();
}

inline UniPoly<Rat> parse_poly(const std::string& s, char fallback_var = 'w') {
    UniPoly<Rat> p(fallback_var);
    if (s == "0") return p;
    std::string t;
    for (char ch : s)
        if (!isspace((unsigned char)ch)) t += ch;
    size_t pos = 0;
    while (pos < t.size()) {
        size_t star = t.find('*', pos);
        if (star == std::string::npos) throw std::invalid_argument("bad polynomial text: " + s);
        Rat coef = rat_from_string(t.substr(pos, star - pos));
        char var = t[star + 1];
        if (t[star + 2] != '^') throw std::invalid_argument("bad polynomial text: " + s);
        size_t plus = t.find('+', star + 3);
        // '+' may be a sign of the next coefficient; exponent digits end the term
        size_t end = star + 3;
        while (end < t.size() && isdigit((unsigned char)t[end])) end++;
        int k = std::stoi(t.substr(star + 3, end - star - 3));
        p.var = var;
        if (k >= (int)p.c.size()) p.c.resize(k + 1, Rat(0));
        p.c[k] += coef;
        pos = (end < t.size() && t[end] == '+') ? end + 1 : end;
        (void)plus;
    }
    p.trim();
    return p;
}

// convenience builder from an integer dense list (ascending powers)
inline UniPoly<Rat> ipoly(char var, const std::vector<long>& coeffs) {
    UniPoly<Rat> p(var);
    p.c.reserve(coeffs.size());
    for (long x : coeffs) p.c.push_back(Rat(x));
    p.trim();
    return p;
}

inline UniPoly<Rat> spoly(char var, const std::vector<std::string>& coeffs) {
    UniPoly<Rat> p(var);
    p.c.reserve(coeffs.size());
    for (const auto& x : coeffs) p.c.push_back(rat_from_string(x));
    p.trim();
    return p;
}

} // namespace icl
