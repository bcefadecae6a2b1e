#include "icl/landau.hpp"
#include "icl/roots.hpp"
#include "icl/polyq.hpp"
#include <set>

namespace icl {

namespace {

UniPoly<Rat> cheb_t_shift(int n, long shift) {
    // T_n(t + shift) in the variable t
    auto T = chebyshev_t<Rat>(n, 't');
    return taylor_shift(T, Rat(shift));
}

// rational roots of an integer polynomial, exactly verified
std::vector<Rat> rational_roots(const UniPoly<Rat>& p, int digits = 40) {
    std::vector<Rat> out;
    if (p.degree() < 1) return out;
    auto sf = squarefree_part(p);
    auto roots = complex_roots(sf, digits);
    for (auto& r : roots) {
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

// split a squarefree polynomial into linear factors for its rational roots
// plus the remaining cofactor
std::vector<UniPoly<Rat>> split_rational_roots(const UniPoly<Rat>& p) {
    std::vector<UniPoly<Rat>> out;
    UniPoly<Rat> rem = p;
    for (const auto& r : rational_roots(p)) {
        UniPoly<Rat> lin(p.var, {Rat(-r), Rat(1)});
        lin = make_primitive(lin);
        out.push_back(lin);
        rem = exact_div(rem, UniPoly<Rat>(p.var, lin.c));
    }
    if (rem.degree() >= 1) out.push_back(make_primitive(rem));
    return out;
}

// refine chunks by taking gcds against a candidate dictionary
std::vector<UniPoly<Rat>> refine_chunks(std::vector<UniPoly<Rat>> chunks,
                                        const std::vector<UniPoly<Rat>>& dict) {
    for (const auto& cand : dict) {
        std::vector<UniPoly<Rat>> next;
        for (auto& ch : chunks) {
            if (ch.degree() < 1) continue;
            auto g = gcd(ch, cand);
            if (g.degree() >= 1 && g.degree() < ch.degree()) {
                next.push_back(make_primitive(g));
                next.push_back(make_primitive(exact_div(ch, g)));
            } else {
                next.push_back(ch);
            }
        }
        chunks = next;
    }
    return chunks;
}

} // namespace

std::vector<UniPoly<Rat>> nickellian_orbit_factors(int n) {
    if (n < 2) throw std::invalid_argument("nickellian_orbit_factors: n < 2");
    auto psi = min_poly_cos(n); // minimal polynomial of cos(2pi/n), var 'c'
    std::vector<UniPoly<Rat>> out;
    std::set<std::string> seen;
    for (int k = 0; k <= n; k++)
        for (int m = k; m <= n; m++) {
            auto S = chebyshev_t<Rat>(k, 'c') + chebyshev_t<Rat>(m, 'c');
            // eliminate c from psi(c) = 0, 1 - 2 w S(c) = 0
            BiPoly a = BiPoly::from_v_poly(retag(psi, 'v'), 'w');
            // 1 - 2w S(c): coefficients of c^i are (i==0) - 2w S_i
            BiPoly b;
            b.inner = 'w';
            b.c.assign(std::max(S.degree() + 1, 1), UniPoly<Rat>('w'));
            for (int i = 0; i <= S.degree(); i++)
                b.c[i] = Rat(Rat(-2) * S.c[i]) * ipoly('w', {0, 1});
            b.c[0] = b.c[0] + ipoly('w', {1});
            b.trim();
            // both polynomials in the eliminated variable with w-coefficients
            if (b.is_zero()) continue;
            auto res = resultant_v(a, b);
            if (res.degree() < 1) continue; // sum identically 0: w = infinity
            auto f = squarefree_part(res);
            auto key = to_string(f);
            if (!seen.count(key)) {
                seen.insert(key);
                out.push_back(f);
            }
        }
    return out;
}

UniPoly<Rat> nickellian_polys(int n) {
    UniPoly<Rat> prod = UniPoly<Rat>::constant('w', Rat(1));
    for (auto& f : nickellian_orbit_factors(n)) {
        auto g = gcd(prod, f);
        prod = prod * (g.degree() >= 1 ? exact_div(f, UniPoly<Rat>('w', g.c)) : f);
    }
    return squarefree_part(prod);
}

std::vector<UniPoly<Rat>> split_by_unit_circle(const UniPoly<Rat>& f, int digits) {
    if (f.degree() < 1) return {};
    PrecGuard pg(digits_to_bits(digits) + 64);
    auto roots = complex_roots(f, digits);
    std::vector<std::vector<ComplexBall>> groups(3);
    for (auto& r : roots) {
        RealBall m2 = r.norm2() - RealBall(Rat(1));
        if (m2.definitely_positive()) groups[2].push_back(r);
        else if (m2.definitely_negative()) groups[0].push_back(r);
        else groups[1].push_back(r);
    }
    std::vector<UniPoly<Rat>> out;
    UniPoly<Rat> rem = f;
    Rat lead = f.lead();
    for (int g = 0; g < 3; g++) {
        if (groups[g].empty()) continue;
        if (groups[g].size() == roots.size()) {
            out.push_back(f);
            return out;
        }
        // reconstruct the integer factor with these roots: lead guesses are
        // divisors of f's leading coefficient; try the full lead and 1 first,
        // then verify by exact division
        std::vector<ComplexBall> coeffs = {ComplexBall(1L)};
        for (auto& r : groups[g]) {
            std::vector<ComplexBall> next(coeffs.size() + 1, ComplexBall(0L));
            for (size_t i = 0; i < coeffs.size(); i++) {
                next[i + 1] = next[i + 1] + coeffs[i];
                next[i] = next[i] - coeffs[i] * r;
            }
            coeffs = next;
        }
        bool built = false;
        for (Int ld : {Int(numer(lead)), Int(1), Int(2), Int(4), Int(8), Int(16)}) {
            UniPoly<Rat> cand(f.var);
            cand.c.assign(coeffs.size(), Rat(0));
            bool ok = true;
            for (size_t i = 0; i < coeffs.size() && ok; i++) {
                ComplexBall scaled = ComplexBall(Rat(ld)) * coeffs[i];
                double re = scaled.re.mid_d();
                double rounded = std::round(re);
                if (std::fabs(re - rounded) > 0.25 || !scaled.im.contains_zero()) ok = false;
                else cand.c[i] = Rat((long)rounded);
            }
            if (!ok) continue;
            cand.trim();
            if (cand.degree() != (int)groups[g].size()) continue;
            cand = make_primitive(cand);
            if (divides(cand, rem)) {
                out.push_back(cand);
                rem = exact_div(rem, UniPoly<Rat>(f.var, cand.c));
                built = true;
                break;
            }
        }
        if (!built)
            throw std::runtime_error("split_by_unit_circle: integer factor reconstruction failed");
    }
    if (rem.degree() >= 1) out.push_back(make_primitive(rem));
    return out;
}

std::vector<UniPoly<Rat>> landau_Yn_ode(int n) {
    if (n < 2) throw std::invalid_argument("landau_Yn_ode: n < 2");
    std::vector<UniPoly<Rat>> out;
    for (int k = 0; k <= n; k++) {
        auto pt = cheb_t_shift(k, 1) - cheb_t_shift(n - k, -1);
        if (pt.is_zero()) continue;
        auto pw = t_poly_to_w(pt);
        if (pw.degree() >= 1) out.push_back(squarefree_part(pw));
    }
    return out;
}

UniPoly<Rat> landau_Yn_integral(int n) {
    if (n < 2) throw std::invalid_argument("landau_Yn_integral: n < 2");
    auto one = UniPoly<Rat>::constant('t', Rat(1));
    auto prod = (one - cheb_t_shift(n, -1)) * (one - cheb_t_shift(n, 1));
    return squarefree_part(t_poly_to_w(prod));
}

namespace {

struct L3System {
    BiPoly p, q;          // polynomials in v with t-coefficients
    UniPoly<Rat> genuine; // squarefree w-polynomial of genuine pinch roots
    UniPoly<Rat> resultant_w;
};

// the elimination system of the diagonal family and its genuine root locus
L3System build_L3(int n, int digits) {
    if (n == 2) {
        // both elimination polynomials vanish identically for n = 2
        L3System sys;
        sys.genuine = UniPoly<Rat>::constant('w', Rat(1));
        sys.resultant_w = sys.genuine;
        return sys;
    }
    auto Tn1 = chebyshev_t<Rat>(n - 1, 'v');
    auto Un2 = chebyshev_u<Rat>(n - 2, 'v');
    BiPoly vexpr; // v as BiPoly
    vexpr.c = {UniPoly<Rat>('t'), UniPoly<Rat>::constant('t', Rat(1))};
    BiPoly tmv; // t - v
    tmv.c = {ipoly('t', {0, 1}), UniPoly<Rat>::constant('t', Rat(-1))};
    BiPoly tbi;
    tbi.c = {ipoly('t', {0, 1})};

    L3System sys;
    sys.p = bipoly_compose(Tn1, vexpr) + bipoly_compose(Tn1, tmv) - tbi;
    sys.q = bipoly_compose(Un2, vexpr) - bipoly_compose(Un2, tmv);
    sys.p.trim();
    sys.q.trim();
    auto res = resultant_v(sys.p, sys.q);
    if (res.is_zero())
        throw std::runtime_error("landau L3: identically vanishing resultant");
    sys.resultant_w = squarefree_part(t_poly_to_w(res));

    // strip factors coming from leading-coefficient degeneration: candidates
    // are the roots shared with the leading-coefficient locus
    UniPoly<Rat> lead_locus = sys.p.c.back() * sys.q.c.back();
    UniPoly<Rat> genuine = sys.resultant_w;
    if (lead_locus.degree() >= 1) {
        auto lead_w = squarefree_part(t_poly_to_w(lead_locus));
        auto suspect = gcd(genuine, lead_w);
        if (suspect.degree() >= 1) {
            // verify each suspect chunk root: keep only real pinches
            for (auto& chunk : split_rational_roots(make_primitive(suspect))) {
                bool all_spurious = true;
                auto roots = complex_roots(chunk, digits);
                for (auto& wr : roots) {
                    // t = 1/(2w)
                    PrecGuard pg(digits_to_bits(digits));
                    ComplexBall t = ComplexBall(1L) / (ComplexBall(Rat(2)) * wr);
                    // v-roots of p(v, t): coefficients are t-polys
                    std::vector<ComplexBall> pc, qc;
                    for (auto& cp : sys.p.c) pc.push_back(cp.eval<ComplexBall>(t));
                    for (auto& cq : sys.q.c) qc.push_back(cq.eval<ComplexBall>(t));
                    bool common = false;
                    try {
                        auto vroots = complex_roots_core(pc, digits / 2, false);
                        for (auto& v : vroots) {
                            ComplexBall qv = eval_ball(qc, v);
                            double qmag = std::hypot(qv.re.mid_d(), qv.im.mid_d());
                            if (qmag < 1e-8) common = true;
                        }
                    } catch (const std::exception&) {
                        common = true; // cannot certify spuriousness: keep
                    }
                    if (common) all_spurious = false;
                }
                if (all_spurious)
                    genuine = exact_div(genuine, UniPoly<Rat>(genuine.var, chunk.c));
            }
        }
    }
    sys.genuine = make_primitive(genuine);
    return sys;
}

} // namespace

LandauReport landau_phiD_galois(int n) {
    if (n < 2) throw std::invalid_argument("landau_phiD_galois: n < 2");
    LandauReport rep;
    rep.family = "phiD";
    rep.n = n;
    rep.variant = "galois";
    auto t = ipoly('t', {0, 1});
    auto L1 = cheb_t_shift(n - 1, -1) + UniPoly<Rat>::constant('t', Rat(1)) - t;
    auto L2 = cheb_t_shift(n - 1, 1) +
              UniPoly<Rat>::constant('t', Rat((n - 1) % 2 == 0 ? 1 : -1)) - t;
    auto dict = nickellian_orbit_factors(n);
    for (auto& f : refine_chunks(split_rational_roots(squarefree_part(t_poly_to_w(L1))), dict))
        rep.factors.push_back({f, "L1", ""});
    for (auto& f : refine_chunks(split_rational_roots(squarefree_part(t_poly_to_w(L2))), dict))
        rep.factors.push_back({f, "L2", ""});
    auto sys = build_L3(n, 40);
    if (sys.genuine.degree() >= 1)
        for (auto& f : refine_chunks(split_rational_roots(sys.genuine), dict))
            rep.factors.push_back({f, "L3", ""});
    return rep;
}

LandauReport landau_phiD_branch(int n, const UniPoly<Rat>* ode_head_squarefree) {
    if (n < 2) throw std::invalid_argument("landau_phiD_branch: n < 2");
    LandauReport rep;
    rep.family = "phiD";
    rep.n = n;
    rep.variant = "with-branch-points";
    auto t = ipoly('t', {0, 1});
    std::set<std::string> seen;
    auto push = [&](const UniPoly<Rat>& pw, const std::string& origin) {
        for (auto& f : split_rational_roots(pw)) {
            auto key = to_string(f);
            if (seen.count(key)) continue;
            seen.insert(key);
            std::string status;
            if (ode_head_squarefree)
                status = divides(f, *ode_head_squarefree) ? "" : "spurious";
            rep.factors.push_back({f, origin, status});
        }
    };
    // T_(n-1)(t - (-1)^k) + (-1)^m - t, k, m in {0,1}
    for (int k = 0; k <= 1; k++)
        for (int m = 0; m <= 1; m++) {
            auto pt = cheb_t_shift(n - 1, k == 0 ? -1 : 1) +
                      UniPoly<Rat>::constant('t', Rat(m == 0 ? 1 : -1)) - t;
            if (pt.is_zero()) continue;
            auto pw = t_poly_to_w(pt);
            if (pw.degree() >= 1) push(squarefree_part(pw), "branch-L1");
        }
    // eliminate v from T_(n-1)(v) - (t +/- 1) = 0, T_(n-1)(t - v) +/- 1 = 0
    auto Tn1 = chebyshev_t<Rat>(n - 1, 'v');
    for (int s1 = 0; s1 <= 1; s1++)
        for (int s2 = 0; s2 <= 1; s2++) {
            BiPoly vexpr;
            vexpr.c = {UniPoly<Rat>('t'), UniPoly<Rat>::constant('t', Rat(1))};
            BiPoly tmv;
            tmv.c = {ipoly('t', {0, 1}), UniPoly<Rat>::constant('t', Rat(-1))};
            BiPoly a = bipoly_compose(Tn1, vexpr);
            BiPoly shift;
            shift.c = {ipoly('t', {s1 == 0 ? 1 : -1, 0}) + ipoly('t', {0, 1})};
            a = a - shift; // T(v) - (t +/- 1)
            BiPoly b = bipoly_compose(Tn1, tmv);
            BiPoly pm1;
            pm1.c = {UniPoly<Rat>::constant('t', Rat(s2 == 0 ? 1 : -1))};
            b = b + pm1;
            a.trim();
            b.trim();
            if (a.is_zero() || b.is_zero()) continue;
            auto res = resultant_v(a, b);
            if (res.is_zero()) continue;
            auto pw = t_poly_to_w(squarefree_part(res));
            if (pw.degree() >= 1) push(squarefree_part(pw), "branch-L2");
        }
    return rep;
}

namespace {

// principal sqrt with the +i0^+ prescription on the radicand
ComplexBall sqrt_i0(const ComplexBall& z, const RealBall& eps) {
    ComplexBall shifted = z;
    shifted.im = shifted.im + eps;
    return csqrt(shifted);
}

struct ConstraintDecision {
    std::string verdict; // "retained", "rejected", "undecided"
};

// decide whether |termA + termB| is a cancellation (constraint satisfied)
ConstraintDecision decide_cancel(const ComplexBall& A, const ComplexBall& B, int digits) {
    double magA = std::hypot(A.re.mid_d(), A.im.mid_d());
    double magB = std::hypot(B.re.mid_d(), B.im.mid_d());
    ComplexBall sum = A + B;
    double mags = std::hypot(sum.re.mid_d(), sum.im.mid_d());
    double scale = magA + magB;
    double eps_scale = std::pow(10.0, -digits / 2.0);
    if (scale < 16 * std::sqrt(eps_scale))
        return {"retained"}; // both terms vanish at the exact point
    double ratio = mags / scale;
    if (ratio < std::pow(10.0, -digits / 6.0)) return {"retained"};
    if (ratio > 1e-2) return {"rejected"};
    return {"undecided"};
}

UniPoly<Rat> one_minus_sq(const UniPoly<Rat>& g) {
    // 1 - g(t)^2
    return UniPoly<Rat>::constant(g.var, Rat(1)) - g * g;
}

} // namespace

LandauReport landau_phiD_physical(int n, int digits) {
    if (n < 2) throw std::invalid_argument("landau_phiD_physical: n < 2");
    LandauReport rep;
    rep.family = "phiD";
    rep.n = n;
    rep.variant = "physical";
    auto t = ipoly('t', {0, 1});
    PrecGuard pg(digits_to_bits(digits) + 64);
    RealBall eps = RealBall(Rat(1)) ;
    {
        // 10^(-digits/2)
        Rat p10(1);
        for (int i = 0; i < digits / 2; i++) p10 /= 10;
        eps = RealBall(p10);
    }

    // set 1: exact gcd of the polynomial condition with 1 + U_(n-2)(t-1)
    {
        auto L1 = cheb_t_shift(n - 1, -1) + UniPoly<Rat>::constant('t', Rat(1)) - t;
        auto C1 = UniPoly<Rat>::constant('t', Rat(1)) +
                  compose(chebyshev_u<Rat>(n - 2, 't'), ipoly('t', {-1, 1}));
        auto g = gcd(L1, C1);
        if (g.degree() >= 1)
            for (auto& f : split_rational_roots(squarefree_part(t_poly_to_w(g))))
                rep.factors.push_back({f, "L1", "retained"});
    }

    // set 2: polynomial roots filtered by the radical constraint
    {
        auto L2 = cheb_t_shift(n - 1, 1) +
                  UniPoly<Rat>::constant('t', Rat((n - 1) % 2 == 0 ? 1 : -1)) - t;
        auto L2w = squarefree_part(t_poly_to_w(L2));
        // radicands: 1 - (t - (-1)^(n-1))^2 and 1 - (t+1)^2; factor U_(n-2)(t+1)
        long sg = (n - 1) % 2 == 0 ? 1 : -1;
        auto rad1 = one_minus_sq(ipoly('t', {-sg, 1}));
        auto rad2 = one_minus_sq(ipoly('t', {1, 1}));
        auto Ufac = compose(chebyshev_u<Rat>(n - 2, 't'), ipoly('t', {1, 1}));
        auto chunks = refine_chunks(split_rational_roots(L2w), nickellian_orbit_factors(n));
        for (auto& ch : chunks) {
            std::string verdict;
            for (auto& wr : complex_roots(ch, digits)) {
                ComplexBall tb = ComplexBall(1L) / (ComplexBall(Rat(2)) * wr);
                ComplexBall A = sqrt_i0(rad1.eval<ComplexBall>(tb), eps);
                ComplexBall B = sqrt_i0(rad2.eval<ComplexBall>(tb), eps) *
                                Ufac.eval<ComplexBall>(tb);
                auto d = decide_cancel(A, B, digits);
                if (verdict.empty()) verdict = d.verdict;
                else if (verdict != d.verdict) verdict = "undecided";
            }
            rep.factors.push_back({ch, "L2", verdict});
        }
    }

    // set 3: pinch roots filtered by the radical constraint at the pinch v
    {
        auto sys = build_L3(n, digits);
        auto Tn1 = chebyshev_t<Rat>(n - 1, 'v');
        auto Un2 = chebyshev_u<Rat>(n - 2, 'v');
        auto chunks = sys.genuine.degree() >= 1
                          ? refine_chunks(split_rational_roots(sys.genuine),
                                          nickellian_orbit_factors(n))
                          : std::vector<UniPoly<Rat>>{};
        for (auto& ch : chunks) {
            std::string verdict;
            for (auto& wr : complex_roots(ch, digits)) {
                ComplexBall tb = ComplexBall(1L) / (ComplexBall(Rat(2)) * wr);
                // locate the pinch v: common root of p and q at tb
                std::vector<ComplexBall> pc, qc;
                for (auto& cp : sys.p.c) pc.push_back(cp.eval<ComplexBall>(tb));
                for (auto& cq : sys.q.c) qc.push_back(cq.eval<ComplexBall>(tb));
                std::vector<ComplexBall> vroots;
                try {
                    vroots = complex_roots_core(pc, digits, false);
                } catch (const std::exception&) {
                    verdict = "undecided";
                    continue;
                }
                ComplexBall vbest(0L);
                double best = 1e300;
                for (auto& v : vroots) {
                    ComplexBall qv = eval_ball(qc, v);
                    double qmag = std::hypot(qv.re.mid_d(), qv.im.mid_d());
                    if (qmag < best) { best = qmag; vbest = v; }
                }
                // constraint: sqrt(1 - (t - T(v))^2) + sqrt(1 - (t-v)^2) U(t-v)
                ComplexBall Tv = Tn1.eval<ComplexBall>(vbest);
                ComplexBall tv = tb - vbest;
                ComplexBall r1 = ComplexBall(1L) - (tb - Tv) * (tb - Tv);
                ComplexBall r2 = ComplexBall(1L) - tv * tv;
                ComplexBall A = sqrt_i0(r1, eps);
                ComplexBall B = sqrt_i0(r2, eps) * Un2.eval<ComplexBall>(tv);
                auto d = decide_cancel(A, B, digits);
                if (verdict.empty()) verdict = d.verdict;
                else if (verdict != d.verdict) verdict = "undecided";
            }
            rep.factors.push_back({ch, "L3", verdict});
        }
    }
    return rep;
}

LandauReport landau_continuation_s(int n, SRegime regime, int digits) {
    // physical filtering redone in the s variable: for each galois factor,
    // map to s, then evaluate the regime-anchored constraint at each s-root
    // by analytic continuation along a path from the anchor
    LandauReport rep;
    rep.family = "phiD";
    rep.n = n;
    rep.variant = regime == SRegime::SmallS ? "physical-small-s" : "physical-large-s";
    rep.variable = 's';
    PrecGuard pg(digits_to_bits(digits) + 64);

    auto galois = landau_phiD_galois(n);
    long sg = (n - 1) % 2 == 0 ? 1 : -1;
    auto rad1 = one_minus_sq(ipoly('t', {-sg, 1}));
    auto rad2 = one_minus_sq(ipoly('t', {1, 1}));
    auto Ufac = compose(chebyshev_u<Rat>(n - 2, 't'), ipoly('t', {1, 1}));

    // t as a function of s: t = (1 + s^2) / s
    auto t_of_s = [&](const ComplexBall& s) {
        return (ComplexBall(1L) + s * s) / s;
    };
    // continuation of sqrt(rad(t(s))) from the anchor to the target
    auto track_sqrt = [&](const UniPoly<Rat>& rad, const ComplexBall& target,
                          const ComplexBall& anchor) {
        int steps = 160;
        ComplexBall prev = csqrt(rad.eval<ComplexBall>(t_of_s(anchor)));
        for (int i = 1; i <= steps; i++) {
            Rat lam(i, steps);
            ComplexBall s = anchor + ComplexBall(RealBall(lam)) * (target - anchor);
            // nudge off the real axis to dodge cuts
            if (i < steps) s.im = s.im + RealBall(Rat(1, 1000));
            ComplexBall val = rad.eval<ComplexBall>(t_of_s(s));
            ComplexBall r = csqrt(val);
            // choose the branch closest to the previous value
            ComplexBall d1 = r - prev, d2 = (-r) - prev;
            double m1 = std::hypot(d1.re.mid_d(), d1.im.mid_d());
            double m2 = std::hypot(d2.re.mid_d(), d2.im.mid_d());
            prev = (m2 < m1) ? -r : r;
        }
        return prev;
    };

    ComplexBall anchor = regime == SRegime::SmallS ? ComplexBall(Rat(1, 10))
                                                   : ComplexBall(Rat(10));
    for (auto& gf : galois.factors) {
        if (gf.origin != "L2") continue; // the regime-dependent split lives in L2
        auto Fs = w_factor_to_s(gf.poly);
        for (auto& part : split_by_unit_circle(Fs, digits)) {
            std::string verdict;
            for (auto& sr : complex_roots(part, digits)) {
                ComplexBall A = track_sqrt(rad1, sr, anchor);
                ComplexBall B = track_sqrt(rad2, sr, anchor) * Ufac.eval<ComplexBall>(t_of_s(sr));
                auto d = decide_cancel(A, B, digits);
                if (verdict.empty()) verdict = d.verdict;
                else if (verdict != d.verdict) verdict = "undecided";
            }
            rep.factors.push_back({part, "L2", verdict});
        }
    }
    return rep;
}

std::vector<CloudPoint> cloud_points(int n_max, int digits) {
    if (n_max < 3) throw std::invalid_argument("cloud_points: n_max < 3");
    std::vector<CloudPoint> out;
    PrecGuard pg(digits_to_bits(digits) + 64);
    for (int n = 3; n <= n_max; n++) {
        auto galois = landau_phiD_galois(n);
        std::set<std::string> seen;
        for (auto& gf : galois.factors) {
            bool from_L2 = gf.origin == "L2";
            bool from_L3 = gf.origin == "L3";
            if (!((from_L2 && n % 2 == 1) || from_L3)) continue;
            if (all_roots_in_Wc(gf.poly)) continue; // P1/P2-type, not cloud
            auto key = to_string(gf.poly);
            if (seen.count(key)) continue;
            seen.insert(key);
            for (auto& wr : complex_roots(gf.poly, digits)) {
                // s solves 2w s^2 - s + 2w = 0
                ComplexBall two_w = ComplexBall(Rat(2)) * wr;
                ComplexBall disc = ComplexBall(1L) - ComplexBall(Rat(4)) * two_w * two_w;
                ComplexBall sq = csqrt(disc);
                for (int branch = 0; branch < 2; branch++) {
                    ComplexBall num = branch == 0 ? ComplexBall(1L) + sq : ComplexBall(1L) - sq;
                    ComplexBall s = num / (ComplexBall(Rat(2)) * two_w);
                    out.push_back({s, n, from_L2 && n % 2 == 1 ? "L2" : "L3"});
                }
            }
        }
    }
    return out;
}

} // namespace icl
