#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "icl/engine.hpp"
#include "icl/fourier.hpp"
#include <cmath>

using namespace icl;

static RatCtx Q;

// 2F1([a,b],[c]; z) truncated, z-variable
static Series<Rat> f21(const Rat& a, const Rat& b, const Rat& c, int nterms) {
    return hyp_series(Q, {a, b}, {c}, nterms);
}

// trapezoid quadrature of the y^2-product integral on the (n-1)-torus
static double quad_Y(int n, double w, int grid) {
    auto y2 = [&](double phi) {
        double c = std::cos(phi);
        double d = (1 - 2 * w * c) * (1 - 2 * w * c) - 4 * w * w;
        return 4 * w * w / d;
    };
    if (n != 3) throw std::logic_error("quad_Y: only n=3 wired");
    double sum = 0;
    for (int i = 0; i < grid; i++)
        for (int j = 0; j < grid; j++) {
            double p1 = 2 * M_PI * i / grid, p2 = 2 * M_PI * j / grid;
            sum += y2(p1) * y2(p2) * y2(p1 + p2);
        }
    return sum / grid / grid;
}

TEST_CASE("hyp_d basics") {
    auto d2 = hyp_d(Q, 2, 12);
    CHECK(d2.c[0] == Rat(3)); // (1+k) at w=0
    auto d0 = hyp_d(Q, 0, 12);
    CHECK(d0.c[0] == Rat(1));
    CHECK(d0.c[2] == Rat(10));
    for (int k : {0, 1, 2, 3})
        for (int i = 1; i <= 11; i += 2)
            CHECK(hyp_d(Q, k, 12).c[i] == Rat(0));
}

TEST_CASE("hyp_d k=0 matches the Fourier constant-mode oracle") {
    int N = 16;
    IntegrandSpec spec{"y2single", 1};
    auto orac = series_bruteforce(spec, N); // 4 w^2 d(0)
    auto d0 = hyp_d(Q, 0, N - 2);
    for (int i = 0; i <= N - 2; i++)
        CHECK(orac.c[i + 2] == Rat(4) * d0.c[i]);
}

TEST_CASE("series_Y leading terms for n=3") {
    auto y3 = series_Y(Q, 3, 24);
    CHECK(y3.c[6] == Rat(64));
    CHECK(y3.c[7] == Rat(0));
    CHECK(y3.c[8] == Rat(1920));
    CHECK(y3.c[9] == Rat(1024));
}

TEST_CASE("series_Y lowest term is 4^n w^(2n)") {
    for (int n = 2; n <= 6; n++) {
        auto y = series_Y(Q, n, 2 * n + 4);
        for (int i = 0; i < 2 * n; i++) CHECK(y.c[i] == Rat(0));
        Rat fourn(1);
        for (int i = 0; i < n; i++) fourn *= 4;
        CHECK(y.c[2 * n] == fourn);
    }
}

TEST_CASE("series_Y(3) against numerical quadrature") {
    auto y3 = series_Y(Q, 3, 40);
    double w = 0.02, val = 0, pw = 1;
    for (int i = 0; i <= 40; i++) {
        val += y3.c[i].get_d() * pw;
        pw *= w;
    }
    double quad = quad_Y(3, w, 160);
    CHECK(std::fabs(val - quad) < 1e-12);
}

TEST_CASE("hyp_b conventions") {
    auto b00 = hyp_b(Q, 0, 0, 8);
    CHECK(b00.c[0] == Rat(1));
    for (int i = 1; i <= 8; i++) CHECK(b00.c[i] == Rat(0)); // terminating at j=0
    auto b10 = hyp_b(Q, 1, 0, 8);
    CHECK(b10.c[0] == Rat(0));
    auto b01 = hyp_b(Q, 0, 1, 8);
    CHECK(b01.c[0] == Rat(1));
}

TEST_CASE("series_phiD constant term and low-order spacing") {
    auto p3 = series_phiD(Q, 3, 20);
    CHECK(p3.c[0] == Rat(1, 6));
    // below the first cross term, contributions sit at multiples of n
    auto pairs_below = [&](int n, int N) {
        // orders n(k+p) with nonzero product series shifted by even steps
        std::vector<bool> possible(N + 1, false);
        for (int s = 0; n * s <= N; s++)
            for (int j = 0; n * s + 2 * j <= N; j++) possible[n * s + 2 * j] = true;
        return possible;
    };
    auto poss = pairs_below(3, 20);
    for (int i = 1; i <= 20; i++)
        if (!poss[i]) CHECK(p3.c[i] == Rat(0));
}

TEST_CASE("series_phiD(2) equals 1/2 + (1/2)(1+s^2)K(s^2) re-expanded in w") {
    // with the n! dropped, and (1+s^2)K(s^2) = K(4w) = 2F1([1/2,1/2],[1];16w^2)
    int N = 30;
    auto p2 = series_phiD(Q, 2, N, /*keep_factorial=*/false);
    auto Kz = f21(Rat(1, 2), Rat(1, 2), Rat(1), N / 2);
    auto K4w = subst_16w2(Kz, N, Rat(16));
    for (int i = 0; i <= N; i++) {
        Rat rhs = Rat(1, 2) * K4w.c[i];
        if (i == 0) rhs += Rat(1, 2);
        CHECK(p2.c[i] == rhs);
    }
}

TEST_CASE("oracle equivalence for Y(3) and PhiD(3) through order 30") {
    auto yo = series_bruteforce({"Y", 3}, 30);
    auto yc = series_Y(Q, 3, 30);
    for (int i = 0; i <= 30; i++) CHECK(yo.c[i] == yc.c[i]);

    auto po = series_bruteforce({"phiD", 3}, 30);
    auto pc = series_phiD(Q, 3, 30);
    for (int i = 0; i <= 30; i++) CHECK(po.c[i] == pc.c[i]);
}

TEST_CASE("transform_w_to_s basics") {
    // series "w" -> s/2 - s^3/2 + s^5/2 - ...
    Series<Rat> w('w', 11);
    w.c[1] = 1;
    auto s = transform_w_to_s(Q, w, 11);
    for (int i = 0; i <= 11; i++) {
        if (i % 2 == 1) CHECK(s.c[i] == Rat((i / 2) % 2 == 0 ? 1 : -1, 2));
        else CHECK(s.c[i] == Rat(0));
    }
    Series<Rat> one('w', 8);
    one.c[0] = 1;
    auto s1 = transform_w_to_s(Q, one, 8);
    CHECK(s1.c[0] == Rat(1));
    for (int i = 1; i <= 8; i++) CHECK(s1.c[i] == Rat(0));
}

TEST_CASE("K(4w) maps to (1+s^2) K(s^2) under w -> s/(2(1+s^2))") {
    int N = 40;
    auto Kz = f21(Rat(1, 2), Rat(1, 2), Rat(1), N / 2);
    auto K4w = subst_16w2(Kz, N, Rat(16));
    Series<Rat> K4w_series('w', N);
    K4w_series.c = K4w.c;
    auto lhs = transform_w_to_s(Q, K4w_series, N);
    // rhs: (1+s^2) * 2F1([1/2,1/2],[1]; s^4)
    auto Ks2z = f21(Rat(1, 2), Rat(1, 2), Rat(1), N / 4);
    Series<Rat> rhs('s', N);
    for (int j = 0; 4 * j <= N; j++) {
        rhs.c[4 * j] += Ks2z.c[j];
        if (4 * j + 2 <= N) rhs.c[4 * j + 2] += Ks2z.c[j];
    }
    for (int i = 0; i <= N; i++) CHECK(lhs.c[i] == rhs.c[i]);
}

TEST_CASE("round trip w -> s -> w via the small-s branch") {
    int N = 24;
    auto y3 = series_Y(Q, 3, N);
    auto in_s = transform_w_to_s(Q, y3, N);
    auto s_w = s_of_w_series(Q, N);
    Series<Rat> back = compose(in_s, s_w);
    back.var = 'w';
    for (int i = 0; i <= N; i++) CHECK(back.c[i] == y3.c[i]);
}

TEST_CASE("mod-p generation is consistent with reduction") {
    uint64_t p = primes_below_bit(62, 1).at(0);
    FpGenCtx ctx(p);
    auto yq = series_Y(Q, 3, 40);
    auto yp = series_Y(ctx, 3, 40);
    auto red = reduce_mod(yq, p);
    for (int i = 0; i <= 40; i++) CHECK(yp.c[i] == red.c[i]);

    auto pq = series_phiD(Q, 4, 32);
    auto pp = series_phiD(ctx, 4, 32);
    auto redp = reduce_mod(pq, p);
    for (int i = 0; i <= 32; i++) CHECK(pp.c[i] == redp.c[i]);
}

TEST_CASE("elliptic identities hold as series to order 40") {
    int N = 40;
    // crucial2: 2F1([1/2,1/2],[1], 4s^2/(1+s^2)^2) = (1+s^2) 2F1([1/2,1/2],[1], s^4)
    // LHS argument z = 4s^2/(1+s^2)^2: build z as series, compose
    Series<Rat> s2('s', N);
    if (N >= 2) s2.c[2] = 1;
    Series<Rat> denom('s', N);
    denom.c[0] = 1;
    denom.c[2] = 2;
    if (N >= 4) denom.c[4] = 1;
    auto z = mul_trunc(Rat(4) * s2, inverse(denom), N);
    auto lhs2 = compose(f21(Rat(1, 2), Rat(1, 2), Rat(1), N), z);
    auto K4 = f21(Rat(1, 2), Rat(1, 2), Rat(1), N / 4);
    Series<Rat> rhs2('s', N);
    for (int j = 0; 4 * j <= N; j++) {
        rhs2.c[4 * j] += K4.c[j];
        if (4 * j + 2 <= N) rhs2.c[4 * j + 2] += K4.c[j];
    }
    for (int i = 0; i <= N; i++) CHECK(lhs2.c[i] == rhs2.c[i]);

    // crucial1: 2F1([5/2,3/2],[3], 4s^2/(1+s^2)^2) = (1+u^2)^5 2F1([5/2,3/2],[2], u^4), u=s
    auto lhs1 = compose(f21(Rat(5, 2), Rat(3, 2), Rat(3), N), z);
    auto F4 = f21(Rat(5, 2), Rat(3, 2), Rat(2), N / 4);
    Series<Rat> inner('s', N);
    for (int j = 0; 4 * j <= N; j++) inner.c[4 * j] = F4.c[j];
    // (1+s^2)^5
    UniPoly<Rat> onep = ipoly('s', {1, 0, 1});
    UniPoly<Rat> p5 = onep;
    for (int i = 1; i < 5; i++) p5 = p5 * onep;
    auto rhs1 = mul_trunc(Series<Rat>::from_poly(p5, N), inner, N);
    for (int i = 0; i <= N; i++) CHECK(lhs1.c[i] == rhs1.c[i]);
}
