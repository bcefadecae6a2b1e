#pragma once
// Brute-force series oracle: expand integrands exactly as w-power series
// whose coefficients are finite cosine polynomials in the integration
// angles, then extract the constant Fourier mode. Products use the
// linearization cos a cos b = (cos(a+b) + cos(a-b))/2, so the whole route
// stays exact and independent of the hypergeometric generators.

#include "icl/series.hpp"
#include <map>

namespace icl {

// sum of coeff * cos(k . phi) over integer frequency vectors k;
// keys are canonicalized so the first nonzero entry is positive
struct FourierPoly {
    std::map<std::vector<int>, Rat> t;

    static std::vector<int> canon(std::vector<int> k) {
        for (int x : k) {
            if (x > 0) return k;
            if (x < 0) {
                for (auto& y : k) y = -y;
                return k;
            }
        }
        return k; // all zeros
    }

    void add(std::vector<int> k, const Rat& c) {
        if (sgn(c) == 0) return;
        auto key = canon(std::move(k));
        auto [it, fresh] = t.emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (sgn(it->second) == 0) t.erase(it);
        }
    }
    bool is_zero() const { return t.empty(); }
    Rat constant_mode(int dim) const {
        auto it = t.find(std::vector<int>(dim, 0));
        return it == t.end() ? Rat(0) : it->second;
    }

    friend FourierPoly operator+(const FourierPoly& a, const FourierPoly& b) {
        FourierPoly r = a;
        for (const auto& [k, c] : b.t) r.add(k, c);
        return r;
    }
    friend FourierPoly operator-(const FourierPoly& a, const FourierPoly& b) {
        FourierPoly r = a;
        for (const auto& [k, c] : b.t) r.add(k, -c);
        return r;
    }
    FourierPoly operator-() const {
        FourierPoly r;
        for (const auto& [k, c] : t) r.t.emplace(k, -c);
        return r;
    }
    friend FourierPoly operator*(const FourierPoly& a, const FourierPoly& b) {
        FourierPoly r;
        for (const auto& [ka, ca] : a.t)
            for (const auto& [kb, cb] : b.t) {
                Rat half = ca * cb / 2;
                std::vector<int> sum(ka.size()), diff(ka.size());
                for (size_t i = 0; i < ka.size(); i++) {
                    sum[i] = ka[i] + kb[i];
                    diff[i] = ka[i] - kb[i];
                }
                bool a_const = std::all_of(ka.begin(), ka.end(), [](int x) { return x == 0; });
                bool b_const = std::all_of(kb.begin(), kb.end(), [](int x) { return x == 0; });
                if (a_const || b_const) {
                    r.add(sum, ca * cb);
                } else {
                    r.add(sum, half);
                    r.add(diff, half);
                }
            }
        return r;
    }
    FourierPoly& operator+=(const FourierPoly& o) { return *this = *this + o; }
    FourierPoly& operator-=(const FourierPoly& o) { return *this = *this - o; }
    FourierPoly& operator*=(const FourierPoly& o) { return *this = *this * o; }
    friend bool operator==(const FourierPoly& a, const FourierPoly& b) { return a.t == b.t; }

    static FourierPoly constant(int dim, const Rat& c) {
        FourierPoly r;
        r.add(std::vector<int>(dim, 0), c);
        return r;
    }
    static FourierPoly cosine(std::vector<int> freq, const Rat& c = Rat(1)) {
        FourierPoly r;
        r.add(std::move(freq), c);
        return r;
    }
};

template <> struct domain_traits<FourierPoly> {
    static constexpr bool exact = true;
    static bool is_zero(const FourierPoly& x) { return x.is_zero(); }
    static std::string str(const FourierPoly&) { return "<fourier>"; }
};

inline FourierPoly operator*(const Rat& s, const FourierPoly& x) {
    FourierPoly r;
    if (sgn(s) == 0) return r;
    for (const auto& [k, c] : x.t) r.t.emplace(k, s * c);
    return r;
}

inline FourierPoly k_inv(const FourierPoly& x) {
    if (x.t.size() != 1) throw std::domain_error("FourierPoly inverse: not a constant");
    auto it = x.t.begin();
    for (int v : it->first)
        if (v != 0) throw std::domain_error("FourierPoly inverse: not a constant");
    FourierPoly r;
    r.t.emplace(it->first, Rat(1) / it->second);
    return r;
}

using TrigSeries = Series<FourierPoly>;

namespace oracle {

// A(phi) = (1 - 2 w cos(freq.phi))^2 - 4 w^2, constant term 1
inline TrigSeries big_A(int dim, const std::vector<int>& freq, int N) {
    TrigSeries A('w', N);
    A.c[0] = FourierPoly::constant(dim, Rat(1));
    if (N >= 1) A.c[1] = FourierPoly::cosine(freq, Rat(-4));
    if (N >= 2) {
        FourierPoly c2 = FourierPoly::cosine(freq) * FourierPoly::cosine(freq); // cos^2
        A.c[2] = Rat(4) * c2 - FourierPoly::constant(dim, Rat(4));
    }
    return A;
}

inline FourierPoly embed_const(int dim, const Rat& c) { return FourierPoly::constant(dim, c); }

// y(freq.phi) = 2w * A^(-1/2)
inline TrigSeries y_series(int dim, const std::vector<int>& freq, int N) {
    auto A = big_A(dim, freq, N);
    auto Ainv_sqrt = pow_rat<FourierPoly>(A, Rat(-1, 2),
        [&](const Rat& r) { return embed_const(dim, r); });
    TrigSeries y('w', N);
    for (int i = 1; i <= N; i++) y.c[i] = Rat(2) * Ainv_sqrt.c[i - 1];
    return y;
}

// y^2: rational route (no square root), cross-checks the surd route
inline TrigSeries y2_series(int dim, const std::vector<int>& freq, int N) {
    auto A = big_A(dim, freq, N);
    auto Ainv = inverse(A);
    TrigSeries y2('w', N);
    for (int i = 2; i <= N; i++) y2.c[i] = Rat(4) * Ainv.c[i - 2];
    return y2;
}

// x(freq.phi) = 2w / (1 - 2w cos + sqrt(A)) = w * (1 + E)^(-1)
inline TrigSeries x_series(int dim, const std::vector<int>& freq, int N) {
    auto A = big_A(dim, freq, N);
    auto S = pow_rat<FourierPoly>(A, Rat(1, 2),
        [&](const Rat& r) { return embed_const(dim, r); });
    TrigSeries E('w', N);
    // E = (1 - 2w cos + S - 2)/2
    for (int i = 0; i <= N; i++) E.c[i] = Rat(1, 2) * S.c[i];
    E.c[0] -= FourierPoly::constant(dim, Rat(1, 2));
    if (N >= 1) E.c[1] -= FourierPoly::cosine(freq);
    TrigSeries onePlusE('w', N);
    onePlusE.c[0] = FourierPoly::constant(dim, Rat(1));
    for (int i = 0; i <= N; i++) onePlusE.c[i] += E.c[i];
    auto inv = inverse(onePlusE);
    TrigSeries x('w', N);
    for (int i = 1; i <= N; i++) x.c[i] = inv.c[i - 1];
    return x;
}

inline Series<Rat> constant_mode(const TrigSeries& f, int dim) {
    Series<Rat> r('w', f.N);
    for (int i = 0; i <= f.N; i++) r.c[i] = f.c[i].constant_mode(dim);
    return r;
}

// 1/(1-u) for a series u with positive valuation
inline TrigSeries geometric(const TrigSeries& u, int dim, int N) {
    int val = u.valuation();
    if (val == 0) throw std::domain_error("geometric: u must vanish at w=0");
    TrigSeries acc('w', N), pw('w', N);
    acc.c[0] = FourierPoly::constant(dim, Rat(1));
    pw.c[0] = FourierPoly::constant(dim, Rat(1));
    for (int j = 1; j * val <= N; j++) {
        pw = mul_trunc(pw, u, N);
        for (int i = 0; i <= N; i++) acc.c[i] += pw.c[i];
    }
    return acc;
}

} // namespace oracle

struct IntegrandSpec {
    // families: "Y" (prod y_i^2, full constraint), "ytilde3" (y1 y2 y3),
    // "phiD" (diagonal ratio), "ID" (diagonal ratio with y prefactors),
    // "y2single" (single y^2, n=1 sanity case)
    std::string family;
    int n = 3;
};

Series<Rat> series_bruteforce(const IntegrandSpec& spec, int N);

} // namespace icl
