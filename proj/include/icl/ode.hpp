#pragma once
// Linear ODEs with polynomial coefficients a_0..a_q of d^k/dx^k, operator
// composition over rational-function coefficients, and variable changes
// x -> phi(x) including w -> s and w -> 1/w.

#include "icl/poly.hpp"
#include "icl/polyq.hpp"
#include "icl/series.hpp"

namespace icl {

template <class K>
struct LinearODE {
    char var = 'w';
    std::vector<UniPoly<K>> a; // a[k] multiplies d^k; a.back() nonzero

    int order() const { return (int)a.size() - 1; }
    void trim() {
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    bool is_zero() const { return a.empty(); }
    const UniPoly<K>& head() const { return a.back(); }

    int max_degree() const {
        int d = -1;
        for (const auto& p : a) d = std::max(d, p.degree());
        return d;
    }
};

// divide by the gcd of integer contents, sign so that the head polynomial's
// leading coefficient is positive
inline LinearODE<Rat> normalize_content(const LinearODE<Rat>& ode) {
    LinearODE<Rat> r = ode;
    r.trim();
    if (r.is_zero()) return r;
    std::vector<Rat> all;
    for (const auto& p : r.a)
        for (const auto& c : p.c) all.push_back(c);
    Int l = denominator_lcm(all), g = 0;
    for (const auto& c : all) g = gcd(g, Int(c.get_num() * (l / c.get_den())));
    Rat f(l, g);
    f.canonicalize();
    if (sgn(r.head().lead()) < 0) f = -f;
    for (auto& p : r.a) p = f * p;
    return r;
}

template <class K>
bool operator==(const LinearODE<K>& x, const LinearODE<K>& y) {
    if (x.a.size() != y.a.size()) return false;
    for (size_t i = 0; i < x.a.size(); i++)
        if (!(x.a[i] == y.a[i])) return false;
    return true;
}

// apply sum a_k d^k to a truncated series; result valid through N - order
template <class K>
Series<K> apply_operator(const LinearODE<K>& ode, const Series<K>& ts) {
    if (ode.var != ts.var)
        throw std::invalid_argument("apply_operator: variable mismatch");
    int q = ode.order();
    int outN = ts.N - q;
    if (outN < 0) throw std::invalid_argument("apply_operator: series shorter than order");
    Series<K> out(ts.var, outN);
    Series<K> der = ts;
    for (int k = 0; k <= q; k++) {
        if (!ode.a[k].is_zero()) {
            auto term = mul_trunc(Series<K>::from_poly(ode.a[k], outN), der, outN);
            out = out + term;
        }
        if (k < q) der = derivative(der);
    }
    return out;
}

// ---- rational functions -------------------------------------------------

template <class K>
struct RatFun {
    UniPoly<K> num, den;

    RatFun() = default;
    RatFun(UniPoly<K> n, UniPoly<K> d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::domain_error("RatFun: zero denominator");
        reduce();
    }
    static RatFun from_poly(UniPoly<K> p) {
        RatFun r;
        r.num = std::move(p);
        r.den = UniPoly<K>::constant(r.num.var, K(1));
        return r;
    }
    static RatFun constant(char var, const K& c) {
        return from_poly(UniPoly<K>::constant(var, c));
    }
    char var() const { return num.is_zero() ? den.var : num.var; }
    bool is_zero() const { return num.is_zero(); }

    void reduce() {
        if (num.is_zero()) {
            den = UniPoly<K>::constant(den.var, K(1));
            return;
        }
        auto g = gcd(num, den);
        if (g.degree() > 0) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
        K lead = K(1) / den.lead();
        num = lead * num;
        den = lead * den;
    }

    friend RatFun operator+(const RatFun& x, const RatFun& y) {
        return RatFun(x.num * y.den + y.num * x.den, x.den * y.den);
    }
    friend RatFun operator-(const RatFun& x, const RatFun& y) {
        return RatFun(x.num * y.den - y.num * x.den, x.den * y.den);
    }
    RatFun operator-() const {
        RatFun r = *this;
        r.num = -r.num;
        return r;
    }
    friend RatFun operator*(const RatFun& x, const RatFun& y) {
        return RatFun(x.num * y.num, x.den * y.den);
    }
    friend RatFun operator/(const RatFun& x, const RatFun& y) {
        if (y.is_zero()) throw std::domain_error("RatFun: division by zero");
        return RatFun(x.num * y.den, x.den * y.num);
    }
    RatFun derivative_() const {
        return RatFun(icl::derivative(num) * den - num * icl::derivative(den), den * den);
    }
    friend bool operator==(const RatFun& x, const RatFun& y) {
        return (x.num * y.den) == (y.num * x.den);
    }
};

template <class K>
RatFun<K> eval_poly_at(const UniPoly<K>& p, const RatFun<K>& x) {
    RatFun<K> r = RatFun<K>::constant(x.var(), K{});
    for (int i = p.degree(); i >= 0; i--) {
        r = r * x;
        if (!domain_traits<K>::is_zero(p.c[i]))
            r = r + RatFun<K>::constant(x.var(), p.c[i]);
    }
    return r;
}

// ---- differential operators with rational-function coefficients ---------

template <class K>
struct DiffOp {
    char var = 'w';
    std::vector<RatFun<K>> c; // c[k] * d^k

    int order() const { return (int)c.size() - 1; }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    static DiffOp from_ode(const LinearODE<K>& ode) {
        DiffOp op;
        op.var = ode.var;
        for (const auto& p : ode.a) op.c.push_back(RatFun<K>::from_poly(p));
        op.trim();
        return op;
    }
    static DiffOp identity(char var) {
        DiffOp op;
        op.var = var;
        op.c = {RatFun<K>::constant(var, K(1))};
        return op;
    }
    static DiffOp d(char var) {
        DiffOp op;
        op.var = var;
        op.c = {RatFun<K>::constant(var, K{}), RatFun<K>::constant(var, K(1))};
        return op;
    }

    // clear denominators and normalize
    LinearODE<K> to_ode() const {
        UniPoly<K> l = UniPoly<K>::constant(var, K(1));
        for (const auto& r : c) {
            auto g = gcd(l, r.den);
            l = l * exact_div(r.den, g);
        }
        LinearODE<K> ode;
        ode.var = var;
        for (const auto& r : c)
            ode.a.push_back(r.num * exact_div(l, r.den));
        ode.trim();
        return ode;
    }
};

// composition A(B(.)): Leibniz expansion with binomials
template <class K>
DiffOp<K> op_mul(const DiffOp<K>& A, const DiffOp<K>& B) {
    if (A.var != B.var) throw std::invalid_argument("op_mul: variable mismatch");
    char var = A.var;
    int oa = A.order(), ob = B.order();
    DiffOp<K> R;
    R.var = var;
    R.c.assign(oa + ob + 1, RatFun<K>::constant(var, K{}));
    for (int i = 0; i <= oa; i++) {
        if (A.c[i].is_zero()) continue;
        // derivatives of each b_j, reused across k
        for (int j = 0; j <= ob; j++) {
            RatFun<K> bder = B.c[j];
            Rat binom(1);
            for (int k = 0; k <= i; k++) {
                if (k > 0) {
                    bder = bder.derivative_();
                    binom = binom * Rat(i - k + 1) / Rat(k);
                }
                if (bder.is_zero()) continue;
                // contributes a_i * C(i,k) * b_j^(k) * d^(i + j - k)
                K scale = K(1);
                {
                    // binom is integral here
                    Int b = numer(binom);
                    K acc{};
                    K base = K(1);
                    Int m = b;
                    // K(1) * integer via doubling
                    while (m > 0) {
                        if (mpz_odd_p(m.get_mpz_t())) acc += base;
                        base += base;
                        m /= 2;
                    }
                    scale = acc;
                }
                auto term = A.c[i] * RatFun<K>::constant(var, scale) * bder;
                R.c[i + j - k] = R.c[i + j - k] + term;
            }
        }
    }
    R.trim();
    return R;
}

// substitute x = phi(t): d/dx = (1/phi'(t)) d/dt applied recursively
template <class K>
LinearODE<K> substitute_var(const LinearODE<K>& ode, const RatFun<K>& phi, char newvar) {
    auto dphi = phi.derivative_();
    if (dphi.is_zero()) throw std::invalid_argument("substitute_var: constant substitution");
    RatFun<K> inv_dphi = RatFun<K>::constant(newvar, K(1)) / dphi;
    DiffOp<K> D;
    D.var = newvar;
    D.c = {RatFun<K>::constant(newvar, K{}), inv_dphi};
    DiffOp<K> power = DiffOp<K>::identity(newvar); // (1/phi' d)^k
    DiffOp<K> R;
    R.var = newvar;
    R.c = {RatFun<K>::constant(newvar, K{})};
    for (int k = 0; k < (int)ode.a.size(); k++) {
        if (!ode.a[k].is_zero()) {
            auto coef = eval_poly_at(ode.a[k], phi);
            DiffOp<K> term = power;
            for (auto& cc : term.c) cc = coef * cc;
            // accumulate
            if ((int)R.c.size() < (int)term.c.size())
                R.c.resize(term.c.size(), RatFun<K>::constant(newvar, K{}));
            for (size_t i = 0; i < term.c.size(); i++) R.c[i] = R.c[i] + term.c[i];
        }
        if (k + 1 < (int)ode.a.size()) power = op_mul(D, power);
    }
    R.trim();
    return R.to_ode();
}

// w = s / (2 (1 + s^2))
inline LinearODE<Rat> change_var_w_to_s(const LinearODE<Rat>& ode) {
    if (ode.var != 'w') throw std::invalid_argument("change_var_w_to_s: input not in w");
    RatFun<Rat> phi(UniPoly<Rat>::monomial('s', Rat(1), 1),
                    UniPoly<Rat>(UniPoly<Rat>('s', {Rat(2), Rat(0), Rat(2)})));
    auto out = substitute_var(ode, phi, 's');
    out.var = 's';
    for (auto& p : out.a) p.var = 's';
    return normalize_content(out);
}

// x = 1/w (expansion at infinity)
inline LinearODE<Rat> change_var_to_infinity(const LinearODE<Rat>& ode) {
    RatFun<Rat> phi(UniPoly<Rat>::constant('x', Rat(1)), UniPoly<Rat>::monomial('x', Rat(1), 1));
    auto out = substitute_var(ode, phi, 'x');
    out.var = 'x';
    for (auto& p : out.a) p.var = 'x';
    return normalize_content(out);
}

// recenter at a finite point: x = 1 - w/ws (local variable), or x = w at 0
template <class K>
LinearODE<K> recenter(const LinearODE<K>& ode, const K& ws, bool at_zero = false) {
    LinearODE<K> out;
    out.var = 'x';
    if (at_zero) {
        out.a = ode.a;
        for (auto& p : out.a) p.var = 'x';
        return out;
    }
    // w = ws (1 - x), d/dw = (-1/ws) d/dx
    UniPoly<K> lin('x', {ws, -ws});
    K minus_inv_ws = -(K(1) / ws);
    K pw = K(1);
    for (int k = 0; k < (int)ode.a.size(); k++) {
        auto p = compose(ode.a[k], lin);
        p.var = 'x';
        out.a.push_back(pw * p);
        pw = pw * minus_inv_ws;
    }
    out.trim();
    return out;
}

// ---- theta form ----------------------------------------------------------
// x^q L = sum_i x^i p_i(theta) with theta = x d/dx; valid at any point,
// the common power of x is stripped so p_0 != 0. p_0 is the indicial
// polynomial at x = 0.

template <class K>
struct ThetaForm {
    int order = 0;
    int strip = 0;                // stripped power of x
    std::vector<UniPoly<K>> p;    // p[i](theta), variable tag 'T'

    const UniPoly<K>& indicial() const { return p.at(0); }
};

template <class K>
ThetaForm<K> theta_form(const LinearODE<K>& ode) {
    int q = ode.order();
    // falling factorial [theta]_k
    std::vector<UniPoly<K>> fall(q + 1, UniPoly<K>::constant('T', K(1)));
    for (int k = 1; k <= q; k++) {
        UniPoly<K> lin('T', {K{} - K(k - 1), K(1)}); // theta - (k-1)
        fall[k] = fall[k - 1] * lin;
    }
    int maxi = ode.max_degree() + q;
    std::vector<UniPoly<K>> p(maxi + 1, UniPoly<K>('T'));
    for (int k = 0; k <= q; k++) {
        for (int j = 0; j <= ode.a[k].degree(); j++) {
            if (domain_traits<K>::is_zero(ode.a[k].c[j])) continue;
            int i = j + q - k;
            p[i] = p[i] + ode.a[k].c[j] * fall[k];
        }
    }
    int strip = 0;
    while (strip <= maxi && p[strip].is_zero()) strip++;
    if (strip > maxi) throw std::domain_error("theta_form: zero operator");
    ThetaForm<K> tf;
    tf.order = q;
    tf.strip = strip;
    tf.p.assign(p.begin() + strip, p.end());
    while (!tf.p.empty() && tf.p.back().is_zero()) tf.p.pop_back();
    return tf;
}

} // namespace icl
