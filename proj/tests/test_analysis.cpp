#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "icl/analysis.hpp"
#include "icl/fixtures.hpp"
#include "icl/engine.hpp"
#include "icl/guess.hpp"

using namespace icl;

static RatCtx Q;

static UniPoly<Rat> prodlist(const std::vector<UniPoly<Rat>>& fs) {
    UniPoly<Rat> r = UniPoly<Rat>::constant('w', Rat(1));
    for (auto& f : fs) r = r * f;
    return squarefree_part(r);
}

TEST_CASE("head_singularities of the Y(3) operator") {
    auto ode = fixtures::Y3_ode();
    std::vector<UniPoly<Rat>> dict = {ipoly('w', {1, 3, 4})};
    auto hs = head_singularities(ode, dict);
    // expect factors: w, 1-w, 1+3w, 1-4w, 1+4w, 1-5w, 1+3w+4w^2, P2(deg 9)
    UniPoly<Rat> prod = UniPoly<Rat>::constant('w', Rat(1));
    int deg9 = 0, quad = 0;
    for (auto& [f, mult] : hs) {
        prod = prod * f;
        if (f.degree() == 9) deg9++;
        if (f == ipoly('w', {1, 3, 4})) quad++;
    }
    CHECK(deg9 == 1);
    CHECK(quad == 1);
    CHECK(squarefree_part(ode.head()) == squarefree_part(prod));
    // w = +-1/4 appear with multiplicity 2 in the head
    for (auto& [f, mult] : hs)
        if (f == ipoly('w', {-1, 4}) || f == ipoly('w', {1, 4})) CHECK(mult == 2);
}

TEST_CASE("head_singularities of d/dw is empty") {
    LinearODE<Rat> ddw;
    ddw.var = 'w';
    ddw.a = {UniPoly<Rat>('w'), ipoly('w', {1})};
    CHECK(head_singularities(ddw).empty());
}

TEST_CASE("indicial exponents of Y operators match the closed forms") {
    // at 1/4: (-(n-2)/2, -(n+1)/2); at 0: (2n, n-(-1)^n);
    // at -1/4: (-(n-2)/2, -(n+(-1)^n)/2); at infinity: (-(n-1)/2, -(n+1)/2)
    auto check_for = [&](const LinearODE<Rat>& ode, int n) {
        auto at_quarter = indicial_exponents(ode, Rat(1, 4));
        std::vector<Rat> eq = {Rat(-(n + 1), 2), Rat(-(n - 2), 2)};
        std::sort(eq.begin(), eq.end());
        CHECK(at_quarter == eq);

        auto at_zero = indicial_exponents(ode, Rat(0));
        std::vector<Rat> ez = {Rat(2 * n), Rat(n - (n % 2 == 0 ? 1 : -1))};
        std::sort(ez.begin(), ez.end());
        CHECK(at_zero == ez);

        auto at_mquarter = indicial_exponents(ode, Rat(-1, 4));
        std::vector<Rat> em = {Rat(-(n - 2), 2), Rat(-(n + (n % 2 == 0 ? 1 : -1)), 2)};
        std::sort(em.begin(), em.end());
        CHECK(at_mquarter == em);

        auto at_inf = indicial_exponents_infinity(ode);
        std::vector<Rat> ei = {Rat(-(n - 1), 2), Rat(-(n + 1), 2)};
        std::sort(ei.begin(), ei.end());
        CHECK(at_inf == ei);
    };
    check_for(fixtures::Y3_ode(), 3);
    check_for(fixtures::Y4_ode(), 4);
}

TEST_CASE("apparent singularities of the Y(3) operator") {
    auto ode = fixtures::Y3_ode();
    CHECK(is_apparent(ode, ipoly('w', {0, 1})));       // w = 0
    UniPoly<Rat> P2 = spoly('w', {"1", "-2", "-24", "-5", "19", "98", "-574", "-2835",
                                  "2330", "392"});
    CHECK(is_apparent(ode, P2)); // the degree-9 apparent polynomial
    CHECK(!is_apparent(ode, ipoly('w', {1, -4})));
    CHECK(!is_apparent(ode, ipoly('w', {1, -1})));
}

TEST_CASE("PhiD(3) operator: log point at 1/4 is not apparent, P4 is") {
    auto ode = fixtures::phiD3_ode();
    CHECK(!is_apparent(ode, ipoly('w', {1, -4})));
    UniPoly<Rat> P4 = spoly('w', {"-18", "-126", "-536", "-581", "11332", "56216", "141103",
                                  "316146", "324516", "-102512", "512", "104448"});
    CHECK(is_apparent(ode, P4));
}

TEST_CASE("in_Wc") {
    CHECK(in_Wc(Rat(1)));
    CHECK(!in_Wc(Rat(1, 5)));
    CHECK(in_Wc(Rat(-1, 4)));
    CHECK(!in_Wc(QuadExt(Rat(-3, 8), Rat(1, 8), Rat(-7)))); // complex root of 1+3w+4w^2
    CHECK(in_Wc(QuadExt(Rat(3, 2), Rat(1, 2), Rat(5))));    // (3+sqrt5)/2 = 2.61
    CHECK(in_Wc(QuadExt(Rat(3, 2), Rat(-1, 2), Rat(5))));   // (3-sqrt5)/2 = 0.38
    CHECK(!in_Wc(QuadExt(Rat(0), Rat(1, 10), Rat(5))));     // sqrt5/10 = 0.223
}

TEST_CASE("nickellian polynomials") {
    // n=4: roots {+-1/4, +-1/2}, the w = infinity cases folded away
    auto n4 = nickellian_polys(4);
    auto expect4 = squarefree_part(ipoly('w', {1, 0, -4}) * ipoly('w', {1, 0, -16}));
    CHECK(n4 == expect4);
    // n=2: roots {+-1/4}
    auto n2 = nickellian_polys(2);
    CHECK(n2 == squarefree_part(ipoly('w', {1, 0, -16})));
    // membership: every root of P1^(6) = (1-w^2)(1-16w^2)(1-4w^2)(1-9w^2) w
    auto p16 = prodlist(fixtures::partition(6).p1);
    auto allow = squarefree_part(ipoly('w', {0, 1}) * ipoly('w', {1, 0, -16}) *
                                 nickellian_polys(6));
    CHECK(divides(p16, allow));
}

TEST_CASE("classify_partition reproduces the printed tables (n = 3, 4)") {
    for (int n : {3, 4}) {
        auto ode = n == 3 ? fixtures::phiD3_ode() : fixtures::phiD4_ode();
        auto rep = classify_partition(ode, n);
        auto fix = fixtures::partition(n);
        UniPoly<Rat> got1 = UniPoly<Rat>::constant('w', Rat(1));
        UniPoly<Rat> got2 = got1, got3 = got1;
        for (auto& f : rep.factors) {
            if (f.cls == PartitionClass::P1) got1 = got1 * f.poly;
            if (f.cls == PartitionClass::P2) got2 = got2 * f.poly;
            if (f.cls == PartitionClass::P3) got3 = got3 * f.poly;
        }
        CHECK(squarefree_part(got1) == prodlist(fix.p1));
        CHECK((fix.p2.empty() ? got2.degree() == 0
                              : squarefree_part(got2) == prodlist(fix.p2)));
        CHECK((fix.p3.empty() ? got3.degree() == 0
                              : squarefree_part(got3) == prodlist(fix.p3)));
    }
}

TEST_CASE("op_mul basics and associativity") {
    auto D = DiffOp<Rat>::d('s');
    auto DD = op_mul(D, D);
    CHECK(DD.order() == 2);
    CHECK(DD.c[2] == RatFun<Rat>::constant('s', Rat(1)));
    CHECK(DD.c[1].is_zero());
    // (d/ds) * (mult by s) = s d/ds + 1
    DiffOp<Rat> mult_s;
    mult_s.var = 's';
    mult_s.c = {RatFun<Rat>::from_poly(ipoly('s', {0, 1}))};
    auto Ds_s = op_mul(D, mult_s);
    CHECK(Ds_s.order() == 1);
    CHECK(Ds_s.c[0] == RatFun<Rat>::constant('s', Rat(1)));
    CHECK(Ds_s.c[1] == RatFun<Rat>::from_poly(ipoly('s', {0, 1})));
    // associativity on small random operators
    DiffOp<Rat> A, B, C;
    A.var = B.var = C.var = 's';
    A.c = {RatFun<Rat>::from_poly(ipoly('s', {1, 2})), RatFun<Rat>::from_poly(ipoly('s', {0, 1}))};
    B.c = {RatFun<Rat>::from_poly(ipoly('s', {3})), RatFun<Rat>::from_poly(ipoly('s', {1, 1}))};
    C.c = {RatFun<Rat>::from_poly(ipoly('s', {0, 0, 1})), RatFun<Rat>::from_poly(ipoly('s', {2}))};
    auto left = op_mul(op_mul(A, B), C);
    auto right = op_mul(A, op_mul(B, C));
    REQUIRE(left.order() == right.order());
    for (int i = 0; i <= left.order(); i++) CHECK(left.c[i] == right.c[i]);
}

TEST_CASE("change_var_w_to_s maps the elliptic operator to its s-form") {
    // w (1-16w^2) D^2 + (1-48w^2) D - 16 w   ->   L2(s) cleared to polynomials
    LinearODE<Rat> ode;
    ode.var = 'w';
    ode.a = {ipoly('w', {0, -16}), ipoly('w', {1, 0, -48}), ipoly('w', {0, 1, 0, -16})};
    auto got = change_var_w_to_s(ode);
    // L2(s) = Ds^2 + (s^4+4s^2-1)/((s^4-1)s) Ds - 4/(1+s^2)^2, cleared:
    // (s^4-1) s (1+s^2) D^2 + (s^4+4s^2-1)(1+s^2) D - 4 s (s^2-1)
    LinearODE<Rat> expect;
    expect.var = 's';
    auto s = ipoly('s', {0, 1});
    auto one_p_s2 = ipoly('s', {1, 0, 1});
    expect.a = {Rat(-4) * (s * ipoly('s', {-1, 0, 1})),
                ipoly('s', {-1, 0, 4, 0, 1}) * one_p_s2,
                ipoly('s', {-1, 0, 0, 0, 1}) * s * one_p_s2};
    expect = normalize_content(expect);
    CHECK(got == expect);
}

TEST_CASE("transformed PhiD(3) operator annihilates the transformed series") {
    auto ode = fixtures::phiD3_ode();
    auto s_ode = change_var_w_to_s(ode);
    auto ts = series_phiD(Q, 3, 90);
    auto ss = transform_w_to_s(Q, ts, 90);
    auto res = apply_operator(s_ode, ss);
    CHECK(res.is_zero_through(res.N));
}

TEST_CASE("s -> 1/s covariance of the transformed operator") {
    auto s_ode = change_var_w_to_s(fixtures::phiD3_ode());
    // substitute s -> 1/s and clear powers: compare up to scale
    RatFun<Rat> inv_s(UniPoly<Rat>::constant('s', Rat(1)), ipoly('s', {0, 1}));
    auto dual = substitute_var(s_ode, inv_s, 's');
    dual.var = 's';
    for (auto& p : dual.a) p.var = 's';
    auto a = normalize_content(s_ode), b = normalize_content(dual);
    CHECK(a == b);
}

TEST_CASE("L2 . L1 annihilates PhiD(3)(s) - 1/2") {
    auto L = op_mul(fixtures::opL2(), fixtures::opL1());
    auto ode = L.to_ode();
    ode.var = 's';
    for (auto& p : ode.a) p.var = 's';
    int N = 120;
    auto ts = series_phiD(Q, 3, N, /*keep_factorial=*/false);
    auto ss = transform_w_to_s(Q, ts, N);
    ss.c[0] -= Rat(1, 2);
    auto res = apply_operator(ode, ss);
    CHECK(res.is_zero_through(res.N));
}

TEST_CASE("nickellian amplitude values for n = 3") {
    PrecGuard pg(digits_to_bits(50));
    // at w_s = 1: A = sqrt(6)/3; at w_s = -1/2: A = -1/sqrt3
    auto a1 = nickellian_amplitude(3, QuadExt(Rat(1)), 40);
    RealBall t1 = sqrt(RealBall(Rat(6))) / RealBall(Rat(3));
    CHECK((a1.re - t1).contains_zero());
    CHECK(a1.im.contains_zero());
    auto a2 = nickellian_amplitude(3, QuadExt(Rat(-1, 2)), 40);
    RealBall t2 = -(RealBall(Rat(1)) / sqrt(RealBall(Rat(3))));
    CHECK((a2.re - t2).contains_zero());
    // ratio test via the 2 w_s prefactor: amplitudes at w_s and the partner
    // scale by w_s when the admissible sums coincide
    // (k,m) structure differs across points; check the prefactor directly
    auto a3 = nickellian_amplitude(2, QuadExt(Rat(1, 4)), 40);
    CHECK(a3.re.contains_zero()); // degenerate terms only: formula value 0
}

TEST_CASE("compare_odes verdicts") {
    auto a = fixtures::Y3_ode();
    CHECK(compare_odes(a, a) == OdeMatch::Equal);
    auto b = a;
    for (auto& p : b.a) p = Rat(7) * p;
    CHECK(compare_odes(a, b) == OdeMatch::Equal); // scale folded by normalization
    CHECK(compare_odes(a, fixtures::Y4_ode()) == OdeMatch::Different);
}
