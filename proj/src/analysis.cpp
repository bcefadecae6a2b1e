#include "icl/analysis.hpp"
#include "icl/roots.hpp"
#include <set>

namespace icl {

namespace {

// Yun's squarefree decomposition: p = prod part[i]^(i+1)
std::vector<UniPoly<Rat>> squarefree_decomposition(const UniPoly<Rat>& p) {
    std::vector<UniPoly<Rat>> parts;
    auto a = make_primitive(p);
    auto g = gcd(a, derivative(a));
    if (g.degree() == 0) {
        parts.push_back(a);
        return parts;
    }
    auto b = exact_div(a, g);
    auto c = exact_div(derivative(a), g);
    auto d = c - derivative(b);
    while (true) {
        auto h = gcd(b, d);
        parts.push_back(make_primitive(h));
        b = exact_div(b, h);
        if (b.degree() == 0) break;
        c = exact_div(d, h);
        d = c - derivative(b);
    }
    return parts;
}

std::vector<Rat> rational_roots_exact(const UniPoly<Rat>& p, int digits = 40) {
    std::vector<Rat> out;
    if (p.degree() < 1) return out;
    auto sf = squarefree_part(p);
    for (auto& r : complex_roots(sf, digits)) {
        if (!r.im.contains_zero()) continue;
        double mid = r.re.mid_d();
        for (long den = 1; den <= 1000000; den++) {
            double scaled = mid * den;
            double rounded = std::round(scaled);
            if (std::fabs(scaled - rounded) < 1e-9 + den * 4 * r.re.rad_d()) {
                Rat cand((long)rounded, den);
                cand.canonicalize();
                if (sgn(p.eval<Rat>(cand)) == 0) {
                    bool dup = false;
                    for (auto& o : out) dup |= (o == cand);
                    if (!dup) out.push_back(cand);
                }
                break;
            }
        }
    }
    return out;
}

} // namespace

std::vector<std::pair<UniPoly<Rat>, int>> head_singularities(
    const LinearODE<Rat>& ode, const std::vector<UniPoly<Rat>>& candidates) {
    std::vector<std::pair<UniPoly<Rat>, int>> out;
    auto parts = squarefree_decomposition(ode.head());
    for (int i = 0; i < (int)parts.size(); i++) {
        auto part = parts[i];
        if (part.degree() < 1) continue;
        // split rational roots
        for (const auto& r : rational_roots_exact(part)) {
            UniPoly<Rat> lin = make_primitive(UniPoly<Rat>(part.var, {Rat(-r), Rat(1)}));
            out.push_back({lin, i + 1});
            part = exact_div(part, UniPoly<Rat>(part.var, lin.c));
        }
        // match remaining content against the dictionary
        for (const auto& cand : candidates) {
            if (part.degree() < 1) break;
            if (cand.degree() < 1) continue;
            auto g = gcd(part, cand);
            if (g.degree() >= 1) {
                auto gp = make_primitive(g);
                out.push_back({gp, i + 1});
                part = exact_div(part, UniPoly<Rat>(part.var, gp.c));
            }
        }
        if (part.degree() >= 1) out.push_back({make_primitive(part), i + 1});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return to_string(a.first) < to_string(b.first);
    });
    return out;
}

namespace {

std::vector<std::pair<Rat, int>> exponents_with_mult(const LinearODE<Rat>& ode,
                                                     const Rat& point) {
    LinearODE<Rat> local =
        sgn(point) == 0 ? recenter(ode, Rat(1), true) : recenter(ode, point, false);
    auto tf = theta_form(local);
    if (tf.indicial().degree() != ode.order())
        throw IrregularPoint("indicial degree deficit at w = " + point.get_str());
    return rational_roots_with_mult<Rat>(
        tf.indicial(), [](const Rat& c) { return ComplexBall(c); },
        [](const Rat& r) { return r; });
}

} // namespace

std::vector<Rat> indicial_exponents(const LinearODE<Rat>& ode, const Rat& point) {
    auto roots = exponents_with_mult(ode, point);
    std::vector<Rat> out;
    int total = 0;
    for (auto& [r, m] : roots) {
        total += m;
        for (int i = 0; i < m; i++) out.push_back(r);
    }
    if (total != ode.order())
        throw std::runtime_error("indicial exponents: non-rational exponent at w = " +
                                 point.get_str());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rat> indicial_exponents_surd(const LinearODE<Rat>& ode, const QuadExt& point) {
    LinearODE<QuadExt> lifted;
    lifted.var = ode.var;
    for (auto& p : ode.a) {
        UniPoly<QuadExt> q(p.var);
        for (auto& c : p.c) q.c.push_back(QuadExt(c));
        q.trim();
        lifted.a.push_back(q);
    }
    auto local = recenter(lifted, point, false);
    auto tf = theta_form(local);
    if (tf.indicial().degree() != ode.order())
        throw IrregularPoint("indicial degree deficit at surd point");
    auto roots = rational_roots_with_mult<QuadExt>(
        tf.indicial(), [](const QuadExt& c) { return c.to_ball(); },
        [](const Rat& r) { return QuadExt(r); });
    std::vector<Rat> out;
    int total = 0;
    for (auto& [r, m] : roots) {
        total += m;
        for (int i = 0; i < m; i++) out.push_back(r);
    }
    if (total != ode.order())
        throw std::runtime_error("indicial exponents: non-rational exponent at surd point");
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rat> indicial_exponents_infinity(const LinearODE<Rat>& ode) {
    auto inf = change_var_to_infinity(ode);
    return indicial_exponents(inf, Rat(0));
}

namespace {

bool is_apparent_rational_point(const LinearODE<Rat>& ode, const Rat& point, int margin) {
    LinearODE<Rat> local =
        sgn(point) == 0 ? recenter(ode, Rat(1), true) : recenter(ode, point, false);
    auto tf = theta_form(local);
    if (tf.indicial().degree() != ode.order()) return false; // irregular: not apparent
    auto roots = rational_roots_with_mult<Rat>(
        tf.indicial(), [](const Rat& c) { return ComplexBall(c); },
        [](const Rat& r) { return r; });
    return frobenius_is_apparent<Rat>(tf.p, roots, ode.order(),
                                      [](const Rat& r) { return r; }, margin);
}

bool is_apparent_algebraic(const LinearODE<Rat>& ode, const UniPoly<Rat>& factor, int margin);

bool is_apparent_dispatch(const LinearODE<Rat>& ode, const UniPoly<Rat>& factor, int margin) {
    if (factor.degree() == 1) {
        Rat root = -factor.c[0] / factor.c[1];
        return is_apparent_rational_point(ode, root, margin);
    }
    return is_apparent_algebraic(ode, factor, margin);
}

bool is_apparent_algebraic(const LinearODE<Rat>& ode, const UniPoly<Rat>& factor, int margin) {
    using E = ExtElem<Rat>;
    auto modulus = make_monic(factor);
    modulus.var = 'a';
    auto ctx = std::make_shared<const ExtCtx<Rat>>(modulus);
    try {
        LinearODE<E> lifted;
        lifted.var = ode.var;
        for (auto& p : ode.a) {
            UniPoly<E> q(p.var);
            for (auto& c : p.c) q.c.push_back(E::scalar(c));
            q.trim();
            lifted.a.push_back(q);
        }
        E alpha = E::gen(ctx);
        auto local = recenter(lifted, alpha, false);
        auto tf = theta_form(local);
        if (tf.indicial().degree() != ode.order()) return false;
        // integer roots: the exponent sum must be a rational integer
        auto& P = tf.indicial();
        E lead = P.lead();
        E trace = -(P.coeff(P.degree() - 1) / lead);
        if (trace.v.degree() > 0) return false;
        Rat tr = trace.v.is_zero() ? Rat(0) : trace.v.c[0];
        if (denom(tr) != 1 || sgn(tr) < 0) return false;
        long bound = numer(tr).get_si();
        if (bound > 2000) return false;
        std::vector<std::pair<Rat, int>> roots;
        int total = 0;
        for (long nu = 0; nu <= bound && total < ode.order(); nu++) {
            UniPoly<E> rem = P;
            int mult = 0;
            UniPoly<E> lin('T', {E::scalar(Rat(-nu)), E::scalar(Rat(1))});
            while (!rem.is_zero() && rem.degree() > 0) {
                auto [q, r] = divrem(rem, lin);
                if (!r.is_zero()) break;
                mult++;
                rem = q;
            }
            if (mult > 0) {
                roots.push_back({Rat(nu), mult});
                total += mult;
            }
        }
        if (total != ode.order()) return false;
        return frobenius_is_apparent<E>(tf.p, roots, ode.order(),
                                        [&](const Rat& r) { return E::scalar(r); }, margin);
    } catch (const ZeroDivisorSplit& split) {
        // modulus factors: decide on both pieces
        auto g = split.factor;
        g.var = factor.var;
        auto rest = exact_div(make_monic(retag(factor, factor.var)), UniPoly<Rat>(factor.var, g.c));
        return is_apparent_dispatch(ode, make_primitive(g), margin) &&
               is_apparent_dispatch(ode, make_primitive(rest), margin);
    }
}

} // namespace

bool is_apparent(const LinearODE<Rat>& ode, const UniPoly<Rat>& factor, int margin) {
    if (factor.degree() < 1) throw std::invalid_argument("is_apparent: constant factor");
    return is_apparent_dispatch(ode, factor, margin);
}

bool in_Wc(const Rat& w) { return abs(w) >= Rat(1, 4); }

bool in_Wc(const QuadExt& w) {
    if (sgn(w.b) == 0) return in_Wc(w.a);
    if (sgn(w.d) < 0) return false; // complex
    // real surd a + b sqrt(d): compare |w| with 1/4 exactly
    auto cmp_quarter = [&](int sign) {
        // sign * w >= 1/4  <=>  sign*a - 1/4 >= -sign*b*sqrt(d)
        Rat lhs = sign * w.a - Rat(1, 4);
        Rat rhs_coef = -Rat(sign) * w.b; // times sqrt(d)
        // lhs >= rhs_coef*sqrt(d)?
        if (sgn(rhs_coef) <= 0 && sgn(lhs) >= 0) return true;
        if (sgn(rhs_coef) >= 0 && sgn(lhs) < 0) return false;
        bool flip = sgn(lhs) < 0; // both sides same sign
        Rat l2 = lhs * lhs, r2 = rhs_coef * rhs_coef * w.d;
        return flip ? l2 <= r2 : l2 >= r2;
    };
    return cmp_quarter(+1) || cmp_quarter(-1);
}

bool in_Wc_ball(const ComplexBall& w) {
    if (!w.im.contains_zero())
        return false; // certified off the real axis
    if (!(mpfr_zero_p(w.im.m) && w.im.is_exact()))
        throw std::runtime_error("in_Wc_ball: imaginary part undecidable at this radius");
    RealBall a = abs(w.re) - RealBall(Rat(1, 4));
    if (a.definitely_positive()) return true;
    if (a.definitely_negative()) return false;
    throw std::runtime_error("in_Wc_ball: |w| - 1/4 undecidable at this radius");
}

SingularityReport classify_partition(const LinearODE<Rat>& ode, int n) {
    SingularityReport rep;
    rep.ode = ode;
    auto galois = landau_phiD_galois(n);
    std::vector<UniPoly<Rat>> dict = nickellian_orbit_factors(n);
    for (auto& f : galois.factors) dict.push_back(f.poly);
    auto p1_allowance =
        squarefree_part(ipoly('w', {0, 1}) * ipoly('w', {1, 0, -16}) * nickellian_polys(n));

    for (auto& [f, mult] : head_singularities(ode, dict)) {
        SingularFactor sf;
        sf.poly = f;
        sf.multiplicity = mult;
        sf.apparent = is_apparent(ode, f);
        if (!sf.apparent) {
            sf.wc_all = all_roots_in_Wc(f);
            if (divides(f, p1_allowance)) sf.cls = PartitionClass::P1;
            else if (sf.wc_all) sf.cls = PartitionClass::P2;
            else sf.cls = PartitionClass::P3;
        } else {
            sf.cls = PartitionClass::HeadApparent;
        }
        if (f.degree() == 1) {
            Rat root = -f.c[0] / f.c[1];
            try {
                sf.exponents = indicial_exponents(ode, root);
                sf.exponents_known = true;
            } catch (const std::exception&) {
            }
        }
        rep.factors.push_back(std::move(sf));
    }
    try {
        rep.exponents_at_infinity = indicial_exponents_infinity(ode);
    } catch (const std::exception&) {
        rep.infinity_regular = false;
    }
    return rep;
}

ComplexBall nickellian_amplitude(int n, const QuadExt& w_s, int digits) {
    PrecGuard pg(digits_to_bits(digits) + 32);
    auto psi = min_poly_cos(n);
    // admissible ordered pairs: 1 - 2 w_s (T_k + T_m)(c) vanishes at some
    // conjugate of cos(2pi/n); detected exactly through the orbit resultants
    RealBall pi = RealBall::pi();
    RealBall total(0L);
    bool any = false;
    for (int k = 0; k <= n; k++)
        for (int m = 0; m <= n; m++) {
            auto S = chebyshev_t<Rat>(k, 'c') + chebyshev_t<Rat>(m, 'c');
            // exact admissibility: resultant factor vanishes at w_s
            BiPoly a = BiPoly::from_v_poly(retag(psi, 'v'), 'w');
            BiPoly b;
            b.inner = 'w';
            b.c.assign(std::max(S.degree() + 1, 1), UniPoly<Rat>('w'));
            for (int i = 0; i <= S.degree(); i++)
                b.c[i] = Rat(Rat(-2) * S.c[i]) * ipoly('w', {0, 1});
            b.c[0] = b.c[0] + ipoly('w', {1});
            b.trim();
            if (b.is_zero()) continue;
            auto res = resultant_v(a, b);
            if (res.degree() < 1) continue;
            bool admissible;
            if (w_s.is_rational()) admissible = sgn(res.eval<Rat>(w_s.a)) == 0;
            else {
                // evaluate in Q(sqrt d)
                QuadExt v = QuadExt(Rat(0));
                for (int i = res.degree(); i >= 0; i--) v = v * w_s + QuadExt(res.c[i]);
                admissible = v.is_zero();
            }
            if (!admissible) continue;
            any = true;
            // term: sin^2(2pi k/n) / sqrt(1 - cos(2pi k/n) cos(2pi m/n))
            RealBall under = RealBall(rat(2 * k, n)) * pi;
            RealBall sk = rsin(under);
            if (sk.contains_zero()) continue; // degenerate term contributes 0
            RealBall ck = rcos(under);
            RealBall cm = rcos(RealBall(rat(2 * m, n)) * pi);
            RealBall denom2 = RealBall(1L) - ck * cm;
            total = total + sk * sk / sqrt(denom2);
        }
    if (!any)
        throw std::invalid_argument("nickellian_amplitude: w_s is not a nickellian point");
    // prefactor 2 w_s / (n sqrt(2(n-1)))
    ComplexBall ws_ball = w_s.to_ball();
    RealBall pref = RealBall(rat(2, n)) / sqrt(RealBall(Rat(2 * (n - 1))));
    return ComplexBall(pref * total, RealBall(0L)) * ws_ball;
}

OdeMatch compare_odes(const LinearODE<Rat>& a, const LinearODE<Rat>& b, int guard_terms) {
    auto na = normalize_content(a), nb = normalize_content(b);
    if (na == nb) return OdeMatch::Equal;
    if (na.order() != nb.order()) return OdeMatch::Different;
    // weaker check: each annihilates the other's full local basis at 0 to
    // the guard order. Realized through theta-form recurrences on a generic
    // fundamental system: compare the operators' actions on x^j for enough j
    // via the remainder of one modulo the other in the Weyl-algebra sense is
    // out of scope; instead test mutual annihilation of series solutions.
    // Build series solutions of na at a generic ordinary point x0 = 1/17 and
    // apply nb.
    Rat x0(1, 17);
    for (int dir = 0; dir < 2; dir++) {
        const auto& A = dir == 0 ? na : nb;
        const auto& B = dir == 0 ? nb : na;
        auto localA = recenter(A, x0, false);
        auto localB = recenter(B, x0, false);
        int q = A.order();
        int terms = (q + 1) * (std::max(A.max_degree(), B.max_degree()) + 2) + guard_terms;
        auto tfA = theta_form(localA);
        // ordinary point check
        if (tfA.indicial().degree() != q) return OdeMatch::Different;
        for (int j = 0; j < q; j++) {
            // series solution with initial segment x^j
            Series<Rat> sol('x', terms);
            sol.c[j] = 1;
            // recurrence from theta form: p_0(k) c_k = -sum p_d(k-d) c_(k-d)
            for (int k = 0; k <= terms; k++) {
                if (k < q) continue;
                Rat rhs(0);
                for (int d = 1; d < (int)tfA.p.size() && d <= k; d++)
                    rhs -= tfA.p[d].eval<Rat>(Rat(k - d)) * sol.c[k - d];
                Rat p0 = tfA.indicial().eval<Rat>(Rat(k));
                if (k == j) continue;
                if (sgn(p0) == 0) return OdeMatch::Different; // not ordinary
                if (k > j) sol.c[k] = rhs / p0;
            }
            auto res = apply_operator(localB, sol);
            if (!res.is_zero_through(res.N)) return OdeMatch::Different;
        }
    }
    return OdeMatch::Equivalent;
}

} // namespace icl
