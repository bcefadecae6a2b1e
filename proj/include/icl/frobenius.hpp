#pragma once
// Frobenius construction of local solution bases at regular singular points.
// Solutions in one congruence class of exponents are built from a single
// parametric recurrence in epsilon-jets: y(x, eps) = sum c_k(eps) x^(s+k)
// with c_0 = eps^T; derivatives in eps at the indicial root give the log
// solutions. All branching decisions (which k are resonant, with what
// multiplicity) are taken exactly from the indicial polynomial, so the same
// recurrence runs over exact fields and over complex balls.

#include "icl/ode.hpp"
#include "icl/field_ext.hpp"
#include "icl/ball.hpp"
#include "icl/roots.hpp"
#include <functional>
#include <map>

namespace icl {

inline ComplexBall k_inv(const ComplexBall& x) { return x.inv(); }

template <> struct domain_traits<ComplexBall> {
    static constexpr bool exact = false;
    static bool is_zero(const ComplexBall& x) { return x.contains_zero() && x.re.is_exact() && x.im.is_exact(); }
    static std::string str(const ComplexBall& x) { return x.str(8); }
};

// ---- epsilon jets --------------------------------------------------------

template <class F>
struct Jet {
    int val = 0;
    std::vector<F> c; // coefficient of eps^(val + i)

    static Jet zero(int window) {
        Jet j;
        j.val = 1 << 28;
        j.c.assign(window, F{});
        return j;
    }
    bool is_zero_tag() const { return val >= (1 << 28); }
    int window() const { return (int)c.size(); }
};

template <class F>
Jet<F> jet_monomial(int window, int val) {
    Jet<F> j;
    j.val = val;
    j.c.assign(window, F{});
    j.c[0] = F(1);
    return j;
}

template <class F>
Jet<F> jet_add(const Jet<F>& a, const Jet<F>& b) {
    if (a.is_zero_tag()) return b;
    if (b.is_zero_tag()) return a;
    Jet<F> r;
    r.val = std::min(a.val, b.val);
    r.c.assign(a.window(), F{});
    for (int i = 0; i < r.window(); i++) {
        int ea = r.val + i - a.val;
        int eb = r.val + i - b.val;
        F v{};
        if (ea >= 0 && ea < a.window()) v += a.c[ea];
        if (eb >= 0 && eb < b.window()) v += b.c[eb];
        r.c[i] = v;
    }
    return r;
}

template <class F>
Jet<F> jet_neg(const Jet<F>& a) {
    Jet<F> r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

template <class F>
Jet<F> jet_mul(const Jet<F>& a, const Jet<F>& b) {
    if (a.is_zero_tag() || b.is_zero_tag()) return Jet<F>::zero(a.window() ? a.window() : b.window());
    Jet<F> r;
    r.val = a.val + b.val;
    r.c.assign(a.window(), F{});
    for (int i = 0; i < a.window(); i++) {
        if (domain_traits<F>::is_zero(a.c[i]) && !std::is_same_v<F, ComplexBall>) continue;
        for (int j = 0; i + j < r.window() && j < b.window(); j++)
            r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

// divide by a jet whose leading `mu` coefficients vanish identically (known
// from the exact indicial data). For balls the heads are asserted to contain
// zero and dropped.
template <class F>
Jet<F> jet_div_known_valuation(const Jet<F>& rhs, const Jet<F>& den, int mu) {
    if (rhs.is_zero_tag()) return rhs;
    Jet<F> d;
    d.val = den.val + mu;
    d.c.assign(den.window(), F{});
    for (int i = mu; i < den.window(); i++) d.c[i - mu] = den.c[i];
    for (int i = 0; i < mu; i++) {
        if constexpr (std::is_same_v<F, ComplexBall>) {
            if (!den.c[i].contains_zero())
                throw std::logic_error("jet division: expected vanishing head is certified nonzero");
        } else {
            if (!domain_traits<F>::is_zero(den.c[i]))
                throw std::logic_error("jet division: expected exact zero head");
        }
    }
    // invert d (val now honest, head nonzero), multiply
    F h = k_inv(d.c[0]);
    Jet<F> inv;
    inv.val = -d.val;
    inv.c.assign(d.window(), F{});
    inv.c[0] = h;
    for (int k = 1; k < d.window(); k++) {
        F s{};
        for (int j = 1; j <= k; j++) s += d.c[j] * inv.c[k - j];
        inv.c[k] = -(h * s);
    }
    return jet_mul(rhs, inv);
}

// ---- log-series solutions -------------------------------------------------

template <class F>
struct LogSolution {
    Rat rho;            // leading exponent (solution starts at x^rho)
    int base_shift = 0; // k-index offset: coef[k] multiplies x^(rho + k)
    std::vector<std::vector<F>> coef; // coef[k][j] * x^(rho+k) log(x)^j
    int log_depth = 0;  // max j with a nonzero column

    int nterms() const { return (int)coef.size(); }
};

struct ExponentClass {
    Rat base;                              // smallest exponent in the class
    std::vector<std::pair<int, int>> roots; // (integer offset, multiplicity), ascending
    int dimension() const {
        int d = 0;
        for (auto& [o, m] : roots) d += m;
        return d;
    }
};

// exact rational roots (with multiplicity) of an indicial polynomial over an
// exact field; to_ball embeds coefficients numerically to locate candidates
template <class K>
std::vector<std::pair<Rat, int>> rational_roots_with_mult(
    const UniPoly<K>& p, const std::function<ComplexBall(const K&)>& to_ball,
    const std::function<K(const Rat&)>& embed) {
    // repeated indicial roots foil ball certification, so locate candidates
    // on the exact squarefree part and peel multiplicities exactly below
    UniPoly<K> sf = squarefree_part(p);
    std::vector<ComplexBall> coeffs;
    std::vector<ComplexBall> rts;
    {
        PrecGuard pg(192);
        for (const auto& c : sf.c) coeffs.push_back(to_ball(c));
        rts = complex_roots_core(coeffs, 30, false);
    }
    UniPoly<K> rem = p;
    std::vector<std::pair<Rat, int>> out;
    for (auto& r : rts) {
        if (!r.im.contains_zero()) continue;
        double mid = r.re.mid_d();
        Rat cand;
        bool found = false;
        for (long den = 1; den <= 64 && !found; den++) {
            double scaled = mid * den;
            double rounded = std::round(scaled);
            if (std::fabs(scaled - rounded) < 1e-6 + den * 4 * r.re.rad_d()) {
                cand = Rat((long)rounded, den);
                cand.canonicalize();
                found = true;
            }
        }
        if (!found) continue;
        // exact verification + multiplicity peel
        int mult = 0;
        K ck = embed(cand);
        UniPoly<K> lin(p.var, {-ck, K(1)});
        while (!rem.is_zero() && rem.degree() > 0) {
            auto [q, rr] = divrem(rem, lin);
            if (!rr.is_zero()) break;
            mult++;
            rem = q;
        }
        bool dup = false;
        for (auto& [prev, m] : out)
            if (prev == cand) dup = true;
        if (mult > 0 && !dup) out.push_back({cand, mult});
    }
    return out;
}

inline std::vector<ExponentClass> group_classes(std::vector<std::pair<Rat, int>> roots) {
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<ExponentClass> classes;
    for (auto& [r, m] : roots) {
        bool placed = false;
        for (auto& cls : classes) {
            Rat diff = r - cls.base;
            if (denom(diff) == 1) {
                cls.roots.push_back({(int)numer(diff).get_si(), m});
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({r, {{0, m}}});
    }
    return classes;
}

// derivative of a log solution (with respect to the local variable x)
template <class F>
LogSolution<F> log_solution_derivative(const LogSolution<F>& s,
                                       const std::function<F(const Rat&)>& embed) {
    LogSolution<F> d;
    d.rho = s.rho - 1;
    d.coef.assign(s.coef.size(), {});
    d.log_depth = s.log_depth;
    for (size_t k = 0; k < s.coef.size(); k++) {
        int J = (int)s.coef[k].size();
        d.coef[k].assign(std::max(J, 1), F{});
        for (int j = 0; j < J; j++) {
            F v = embed(s.rho + (long)k) * s.coef[k][j];
            if (j + 1 < J) v += embed(Rat((long)j + 1)) * s.coef[k][j + 1];
            d.coef[k][j] = v;
        }
    }
    return d;
}

// F-generic class construction; theta-form coefficients already over F
template <class F>
std::vector<LogSolution<F>> frobenius_class(const std::vector<UniPoly<F>>& theta_p,
                                            const ExponentClass& cls, int nterms,
                                            const std::function<F(const Rat&)>& embed) {
    int M = (int)theta_p.size() - 1;
    int dim = cls.dimension();
    int W = std::max(2, 2 * dim); // jet window: pole budget + extraction range
    auto mult_at = [&](int offset) {
        for (auto& [o, m] : cls.roots)
            if (o == offset) return m;
        return 0;
    };
    std::vector<LogSolution<F>> out;
    for (size_t ridx = 0; ridx < cls.roots.size(); ridx++) {
        auto [nu, m_i] = cls.roots[ridx];
        int T = 0;
        for (auto& [o, m] : cls.roots)
            if (o > nu) T += m;
        Rat sigma = cls.base + nu;
        int terms = nterms - nu;
        if (terms < 1) terms = 1;
        std::vector<Jet<F>> c(terms, Jet<F>::zero(W));
        c[0] = jet_monomial<F>(W, T);
        // taylor jets of theta_p[d] at sigma + k - d are needed repeatedly
        for (int k = 1; k < terms; k++) {
            Jet<F> rhs = Jet<F>::zero(W);
            for (int d = 1; d <= std::min(k, M); d++) {
                if (theta_p[d].is_zero() || c[k - d].is_zero_tag()) continue;
                auto shifted = taylor_shift(theta_p[d], embed(sigma + (k - d)));
                Jet<F> pj;
                pj.val = 0;
                pj.c.assign(W, F{});
                for (int r = 0; r < W && r <= shifted.degree(); r++) pj.c[r] = shifted.c[r];
                rhs = jet_add(rhs, jet_neg(jet_mul(pj, c[k - d])));
            }
            auto den_shift = taylor_shift(theta_p[0], embed(sigma + k));
            Jet<F> Pj;
            Pj.val = 0;
            Pj.c.assign(W, F{});
            for (int r = 0; r < W && r <= den_shift.degree(); r++) Pj.c[r] = den_shift.c[r];
            int mu = mult_at(nu + k);
            if (rhs.is_zero_tag()) {
                c[k] = Jet<F>::zero(W);
                continue;
            }
            c[k] = jet_div_known_valuation(rhs, Pj, mu);
        }
        // extract solutions t = T .. T + m_i - 1
        for (int t = T; t < T + m_i; t++) {
            LogSolution<F> sol;
            sol.rho = sigma;
            int h = t - T; // leading log power, coefficient normalized to 1
            sol.coef.assign(terms, {});
            Rat hfact(1);
            for (int i = 2; i <= h; i++) hfact *= i;
            for (int k = 0; k < terms; k++) {
                sol.coef[k].assign(t + 1, F{});
                for (int a = 0; a <= t; a++) {
                    int b = t - a; // eps power
                    int idx = b - c[k].val;
                    if (c[k].is_zero_tag() || idx < 0 || idx >= c[k].window()) continue;
                    Rat afact(1);
                    for (int i = 2; i <= a; i++) afact *= i;
                    F v = embed(hfact / afact) * c[k].c[idx];
                    sol.coef[k][a] = v;
                    if (!domain_traits<F>::is_zero(v)) sol.log_depth = std::max(sol.log_depth, a);
                }
            }
            out.push_back(std::move(sol));
        }
    }
    return out;
}

// plain resonance walk: true iff exponents are distinct nonnegative integers
// and every resonance obstruction vanishes (no logarithm), checked through
// maxexp + margin terms
template <class F>
bool frobenius_is_apparent(const std::vector<UniPoly<F>>& theta_p,
                           const std::vector<std::pair<Rat, int>>& roots, int order,
                           const std::function<F(const Rat&)>& embed, int margin = 30) {
    int total = 0;
    long maxexp = 0;
    for (auto& [r, m] : roots) {
        if (m != 1) return false;
        if (denom(r) != 1 || sgn(r) < 0) return false;
        maxexp = std::max(maxexp, numer(r).get_si());
        total += m;
    }
    if (total != order) return false; // exponents not all rational integers
    int M = (int)theta_p.size() - 1;
    auto is_root = [&](const Rat& x) {
        for (auto& [r, m] : roots)
            if (r == x) return true;
        return false;
    };
    for (auto& [r, m] : roots) {
        int terms = (int)(maxexp - numer(r).get_si()) + margin;
        std::vector<F> c(terms, F{});
        c[0] = embed(Rat(1));
        for (int k = 1; k < terms; k++) {
            F rhs{};
            for (int d = 1; d <= std::min(k, M); d++) {
                if (theta_p[d].is_zero()) continue;
                rhs -= theta_p[d].template eval<F>(embed(r + (k - d))) * c[k - d];
            }
            if (is_root(r + k)) {
                if (!domain_traits<F>::is_zero(rhs)) return false; // log forced
                c[k] = F{};
            } else {
                c[k] = rhs * k_inv(theta_p[0].template eval<F>(embed(r + k)));
            }
        }
    }
    return true;
}

} // namespace icl
