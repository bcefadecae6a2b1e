#pragma once
// Series generators for the two integral families: the hypergeometric
// building blocks d(k) and b(k,p), the closed-form expansions of Y^(n) and
// PhiD^(n), the w <-> s variable changes, and 2F1 helpers for the
// elliptic-identity checks. Generic over the coefficient domain via a
// context (rationals, or Z/p for a chosen prime).

#include "icl/series.hpp"
#include <map>

namespace icl {

struct RatCtx {
    using K = Rat;
    K from_int(long n) const { return Rat(n); }
    K from_rat(const Rat& r) const { return r; }
};

struct FpGenCtx {
    using K = Fp;
    uint64_t p;
    explicit FpGenCtx(uint64_t prime) : p(prime) {}
    K from_int(long n) const { return Fp::from_int(n, p); }
    // throws std::domain_error when p divides a denominator (unlucky prime)
    K from_rat(const Rat& r) const { return Fp::from_rat(r, p); }
};

// generalized hypergeometric qFp series in z, term-ratio recurrence
template <class Ctx>
Series<typename Ctx::K> hyp_series(const Ctx& ctx, const std::vector<Rat>& upper,
                                   const std::vector<Rat>& lower, int nterms) {
    using K = typename Ctx::K;
    Series<K> r('z', nterms);
    K term = ctx.from_int(1);
    r.c[0] = term;
    for (int j = 0; j + 1 <= nterms; j++) {
        Rat num(1), den(j + 1);
        for (const auto& a : upper) num *= a + j;
        for (const auto& b : lower) den *= b + j;
        if (sgn(num) == 0) break; // terminating series
        term = ctx.from_rat(num / den) * term;
        r.c[j + 1] = term;
    }
    return r;
}

// substitute z = 16 w^2 into a z-series
template <class K>
Series<K> subst_16w2(const Series<K>& z_series, int N, const K& sixteen) {
    Series<K> r('w', N);
    K pw = sixteen; // 16^j accumulates
    if (0 <= N) r.c[0] = z_series.coeff(0);
    for (int j = 1; 2 * j <= N; j++) {
        r.c[2 * j] = pw * z_series.coeff(j);
        pw = pw * sixteen;
    }
    return r;
}

// d(k): (1+k) * 4F3([3/4+k/2, 1+k/2, 5/4+k/2, 3/2+k/2], [3/2, 1+k, 3/2+k]; 16w^2)
template <class Ctx>
Series<typename Ctx::K> hyp_d(const Ctx& ctx, int k, int N) {
    if (k < 0) throw std::invalid_argument("hyp_d: k < 0");
    std::vector<Rat> up = {Rat(3, 4) + Rat(k, 2), Rat(1) + Rat(k, 2), Rat(5, 4) + Rat(k, 2),
                           Rat(3, 2) + Rat(k, 2)};
    std::vector<Rat> lo = {Rat(3, 2), Rat(1 + k), Rat(3, 2) + k};
    auto z = hyp_series(ctx, up, lo, N / 2);
    auto w = subst_16w2(z, N, ctx.from_int(16));
    w.provenance = "d(" + std::to_string(k) + ")";
    return ctx.from_int(1 + k) * w;
}

// b(k,p): binom(m-1,k) * 4F3([(1+m)/2,(1+m)/2,(2+m)/2,m/2], [1+k,1+p,1+m]; 16w^2), m=k+p
// binom(-1,0) = 1 (empty product), binom(-1,k>=1) = 0
template <class Ctx>
Series<typename Ctx::K> hyp_b(const Ctx& ctx, int k, int p, int N) {
    using K = typename Ctx::K;
    if (k < 0 || p < 0) throw std::invalid_argument("hyp_b: negative index");
    int m = k + p;
    Rat binom;
    if (m == 0) binom = (k == 0) ? Rat(1) : Rat(0);
    else {
        // binom(m-1, k)
        if (k > m - 1) binom = Rat(0);
        else {
            Int num = 1;
            for (int i = 0; i < k; i++) num *= (m - 1 - i);
            Int den = 1;
            for (int i = 1; i <= k; i++) den *= i;
            binom = Rat(num) / Rat(den);
        }
    }
    if (sgn(binom) == 0) {
        Series<K> z('w', N);
        z.provenance = "b(" + std::to_string(k) + "," + std::to_string(p) + ")";
        return z;
    }
    std::vector<Rat> up = {Rat(1 + m, 2), Rat(1 + m, 2), Rat(2 + m, 2), Rat(m, 2)};
    std::vector<Rat> lo = {Rat(1 + k), Rat(1 + p), Rat(1 + m)};
    auto z = hyp_series(ctx, up, lo, N / 2);
    auto w = subst_16w2(z, N, ctx.from_int(16));
    w.provenance = "b(" + std::to_string(k) + "," + std::to_string(p) + ")";
    return ctx.from_rat(binom) * w;
}

// Y^(n)(w) = (4w^2)^n * sum_k C_k w^(n k) d(k)^n, C_0 = 1, C_k = 2
template <class Ctx>
Series<typename Ctx::K> series_Y(const Ctx& ctx, int n, int N) {
    using K = typename Ctx::K;
    if (n < 2) throw std::invalid_argument("series_Y: n < 2");
    if (N < 2 * n) throw std::invalid_argument("series_Y: N < 2n");
    Series<K> acc('w', N - 2 * n);
    for (int k = 0; n * k <= acc.N; k++) {
        int rem = acc.N - n * k;
        auto d = hyp_d(ctx, k, rem);
        Series<K> dn = d;
        for (int i = 1; i < n; i++) dn = mul_trunc(dn, d, rem);
        K cfac = ctx.from_int(k == 0 ? 1 : 2);
        for (int j = 0; j <= rem; j++)
            acc.c[n * k + j] += cfac * dn.c[j];
    }
    Series<K> out('w', N);
    K four_n = ctx.from_int(1);
    for (int i = 0; i < n; i++) four_n = ctx.from_int(4) * four_n;
    for (int j = 0; j <= acc.N; j++)
        out.c[2 * n + j] = four_n * acc.c[j];
    out.provenance = "Y(" + std::to_string(n) + ")";
    return out;
}

// PhiD^(n)(w) = -1/n! + (2/n!) sum_{p,k} w^(n(k+p)) C_k b(k,p) b(k(n-1),p(n-1))
// keep_factorial=false drops the 1/n! prefactor
template <class Ctx>
Series<typename Ctx::K> series_phiD(const Ctx& ctx, int n, int N, bool keep_factorial = true) {
    using K = typename Ctx::K;
    if (n < 2) throw std::invalid_argument("series_phiD: n < 2");
    Series<K> acc('w', N);
    for (int s = 0; n * s <= N; s++) { // s = k + p
        int rem = N - n * s;
        for (int k = 0; k <= s; k++) {
            int p = s - k;
            auto b1 = hyp_b(ctx, k, p, rem);
            if (b1.is_zero_through(rem)) continue;
            auto b2 = hyp_b(ctx, k * (n - 1), p * (n - 1), rem);
            if (b2.is_zero_through(rem)) continue;
            auto prod = mul_trunc(b1, b2, rem);
            K cfac = ctx.from_int(k == 0 ? 1 : 2);
            for (int j = 0; j <= rem; j++)
                acc.c[n * s + j] += cfac * prod.c[j];
        }
    }
    Rat fact(1);
    for (int i = 2; i <= n; i++) fact *= i;
    K two_nf = keep_factorial ? ctx.from_rat(Rat(2) / fact) : ctx.from_int(2);
    K one_nf = keep_factorial ? ctx.from_rat(Rat(1) / fact) : ctx.from_int(1);
    Series<K> out('w', N);
    for (int j = 0; j <= N; j++) out.c[j] = two_nf * acc.c[j];
    out.c[0] -= one_nf;
    out.provenance = "PhiD(" + std::to_string(n) + ")" + (keep_factorial ? "" : " [n! dropped]");
    return out;
}

// w-series -> s-series under w = s / (2 (1 + s^2)); exact, output order N
template <class Ctx>
Series<typename Ctx::K> transform_w_to_s(const Ctx& ctx, const Series<typename Ctx::K>& ts, int N) {
    using K = typename Ctx::K;
    if (ts.var != 'w') throw std::invalid_argument("transform_w_to_s: input not in w");
    if (ts.N < N) throw std::domain_error("transform_w_to_s: input truncation insufficient");
    // sum c_k A^k B^(M-k) / B^M with A = s/2, B = 1+s^2, M = N
    int M = N;
    K half = ctx.from_rat(Rat(1, 2));
    Series<K> H('s', N);    // Horner accumulator (numerator)
    Series<K> Bpow('s', N); // B^(M-j) while j descends
    Bpow.c[0] = ctx.from_int(1);
    auto mul_B = [&](Series<K>& f) { // f *= (1 + s^2), truncated
        for (int i = N; i >= 0; i--) {
            if (i >= 2) f.c[i] = f.c[i] + f.c[i - 2];
        }
    };
    auto mul_A = [&](Series<K>& f) { // f *= s/2
        for (int i = N; i >= 1; i--) f.c[i] = half * f.c[i - 1];
        f.c[0] = K{};
    };
    for (int j = M; j >= 0; j--) {
        if (j < M) {
            mul_A(H);
            mul_B(Bpow);
        }
        if (j <= ts.N && !domain_traits<K>::is_zero(ts.c[j])) {
            for (int i = 0; i <= N; i++) H.c[i] += ts.c[j] * Bpow.c[i];
        }
    }
    // divide by B^M; coefficient of s^(2j) in (1+s^2)^M is binom(M, j)
    Series<K> BM('s', N);
    for (int j = 0; 2 * j <= N; j++) {
        // coefficient of s^(2j) in (1+s^2)^M = binom(M, j)
        Int bin = 1;
        for (int i = 0; i < j; i++) { bin *= (M - i); bin /= (i + 1); }
        BM.c[2 * j] = ctx.from_rat(Rat(bin));
    }
    Series<K> out = mul_trunc(H, inverse(BM), N);
    out.var = 's';
    out.provenance = ts.provenance + " [s]";
    return out;
}

// inverse branch s(w) with s -> 0: fixed point of s = 2w (1 + s^2)
template <class Ctx>
Series<typename Ctx::K> s_of_w_series(const Ctx& ctx, int N) {
    using K = typename Ctx::K;
    Series<K> s('w', N);
    K two = ctx.from_int(2);
    for (int it = 0; it <= N + 1; it++) {
        Series<K> s2 = mul_trunc(s, s, N);
        Series<K> next('w', N);
        next.c[0] = K{};
        for (int i = 1; i <= N; i++) {
            // 2w*(1+s^2): shift by one power of w
            K v = s2.c[i - 1];
            if (i == 1) v += ctx.from_int(1);
            next.c[i] = two * v;
        }
        if (next.c == s.c) break;
        s = next;
    }
    s.provenance = "s(w) small branch";
    return s;
}

} // namespace icl
