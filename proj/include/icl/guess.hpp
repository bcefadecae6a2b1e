#pragma once
// Minimal-ODE guessing from exact truncated series: set up the linear
// system over the coefficients of a candidate operator, compute a nullspace
// vector (fraction-free over Q, dense over Z/p), verify against guard
// terms, and search order-minimal then degree-minimal. The mod-p route
// guesses per prime, CRT-assembles, rationally reconstructs, and verifies.

#include "icl/ode.hpp"
#include "icl/crt.hpp"
#include "icl/series.hpp"
#include "icl/engine.hpp"
#include <optional>
#include <functional>

namespace icl {

struct GuessWindow {
    int max_order = 8;
    int max_degree = -1; // -1: as large as the series allows
    int guard = 25;
};

namespace detail_guess {

// rows of the guessing system: row m is sum_{k,j} a_{k,j} [x^(m)] (x^j ts^(k))
template <class K>
struct GuessSystem {
    std::vector<Series<K>> ders; // ts, ts', ts'', ...
    int N;

    GuessSystem(const Series<K>& ts, int max_order) : N(ts.N) {
        ders.push_back(ts);
        for (int k = 1; k <= max_order; k++) ders.push_back(derivative(ders.back()));
    }
    // entry for unknown (k, j) in row m
    K entry(int m, int k, int j) const {
        if (m - j < 0 || m - j > ders[k].N) return K{};
        return ders[k].c[m - j];
    }
    int rows_available(int order) const { return N - order + 1; }
};

// nullspace vector of the full rectangular system over F_p; empty if none
inline std::vector<Fp> nullspace_fp(const GuessSystem<Fp>& sys, int q, int d, int rows,
                                    uint64_t p) {
    int cols = (q + 1) * (d + 1);
    std::vector<std::vector<Fp>> M(rows, std::vector<Fp>(cols));
    for (int m = 0; m < rows; m++)
        for (int k = 0; k <= q; k++)
            for (int j = 0; j <= d; j++)
                M[m][k * (d + 1) + j] = sys.entry(m, k, j);
    std::vector<int> pivot_of_col(cols, -1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; col++) {
        int piv = -1;
        for (int r = rank; r < rows; r++)
            if (M[r][col].v != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        Fp inv = M[rank][col].inv();
        for (int c2 = col; c2 < cols; c2++) M[rank][c2] *= inv;
        for (int r = 0; r < rows; r++) {
            if (r == rank || M[r][col].v == 0) continue;
            Fp f = M[r][col];
            for (int c2 = col; c2 < cols; c2++) M[r][c2] -= f * M[rank][c2];
        }
        pivot_of_col[col] = rank;
        rank++;
    }
    int free_col = -1;
    for (int col = 0; col < cols; col++)
        if (pivot_of_col[col] < 0) { free_col = col; break; }
    if (free_col < 0) return {};
    std::vector<Fp> v(cols, Fp(0, p));
    v[free_col] = Fp(1, p);
    for (int col = 0; col < cols; col++) {
        int r = pivot_of_col[col];
        if (r >= 0) v[col] = -M[r][free_col];
    }
    return v;
}

// fraction-free (Bareiss) elimination over Z after clearing denominators
inline std::vector<Rat> nullspace_q(const GuessSystem<Rat>& sys, int q, int d, int rows) {
    int cols = (q + 1) * (d + 1);
    std::vector<std::vector<Int>> M(rows, std::vector<Int>(cols));
    for (int m = 0; m < rows; m++) {
        std::vector<Rat> row(cols);
        for (int k = 0; k <= q; k++)
            for (int j = 0; j <= d; j++)
                row[k * (d + 1) + j] = sys.entry(m, k, j);
        Int l = denominator_lcm(row);
        for (int c2 = 0; c2 < cols; c2++)
            M[m][c2] = numer(row[c2]) * (l / denom(row[c2]));
    }
    std::vector<int> pivot_of_col(cols, -1);
    std::vector<int> pivot_col_of_row;
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; col++) {
        int piv = -1;
        for (int r = rank; r < rows; r++)
            if (sgn(M[r][col]) != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        for (int r = rank + 1; r < rows; r++) {
            for (int c2 = col + 1; c2 < cols; c2++)
                M[r][c2] = (M[rank][col] * M[r][c2] - M[r][col] * M[rank][c2]) / prev;
            M[r][col] = 0;
        }
        prev = M[rank][col];
        pivot_of_col[col] = rank;
        pivot_col_of_row.push_back(col);
        rank++;
    }
    int free_col = -1;
    for (int col = 0; col < cols; col++)
        if (pivot_of_col[col] < 0) { free_col = col; break; }
    if (free_col < 0) return {};
    std::vector<Rat> v(cols, Rat(0));
    v[free_col] = Rat(1);
    for (int r = rank - 1; r >= 0; r--) {
        int pc = pivot_col_of_row[r];
        Rat s(0);
        for (int c2 = pc + 1; c2 < cols; c2++)
            if (sgn(v[c2]) != 0) s += Rat(M[r][c2]) * v[c2];
        v[pc] = -s / Rat(M[r][pc]);
    }
    return v;
}

template <class K>
LinearODE<K> ode_from_vector(const std::vector<K>& v, int q, int d, char var) {
    LinearODE<K> ode;
    ode.var = var;
    for (int k = 0; k <= q; k++) {
        UniPoly<K> pk(var);
        pk.c.assign(v.begin() + k * (d + 1), v.begin() + (k + 1) * (d + 1));
        pk.trim();
        ode.a.push_back(pk);
    }
    ode.trim();
    return ode;
}

} // namespace detail_guess

// verified fit test at fixed (order, degree); returns the operator when the
// nullspace vector annihilates the series through every available order
template <class K>
std::optional<LinearODE<K>> guess_fit(const detail_guess::GuessSystem<K>& sys,
                                      const Series<K>& ts, int q, int d, int guard) {
    int cols = (q + 1) * (d + 1);
    int avail = sys.rows_available(q);
    if (cols + guard > avail) return std::nullopt;
    int rows = std::min(cols + guard, avail);
    std::vector<K> v;
    if constexpr (std::is_same_v<K, Fp>) {
        uint64_t p = ts.c[0].p ? ts.c[0].p : ts.c[ts.valuation() <= ts.N ? ts.valuation() : 0].p;
        v = detail_guess::nullspace_fp(sys, q, d, rows, p);
    } else {
        v = detail_guess::nullspace_q(sys, q, d, rows);
    }
    if (v.empty()) return std::nullopt;
    auto ode = detail_guess::ode_from_vector(v, q, d, ts.var);
    if (ode.is_zero() || ode.a.back().is_zero()) return std::nullopt;
    // full verification through all stored orders
    auto residual = apply_operator(ode, ts);
    if (!residual.is_zero_through(residual.N)) return std::nullopt;
    return ode;
}

// order-minimal, then degree-minimal operator annihilating ts
template <class K>
std::optional<LinearODE<K>> guess_ode(const Series<K>& ts, const GuessWindow& window) {
    detail_guess::GuessSystem<K> sys(ts, window.max_order);
    for (int q = 1; q <= window.max_order; q++) {
        int avail = sys.rows_available(q);
        int dmax = (avail - window.guard) / (q + 1) - 1;
        if (window.max_degree >= 0) dmax = std::min(dmax, window.max_degree);
        if (dmax < 0) continue;
        auto top = guess_fit(sys, ts, q, dmax, window.guard);
        if (!top) continue;
        // binary search the minimal degree
        int lo = 0, hi = dmax;
        auto best = *top;
        while (lo < hi) {
            int mid = (lo + hi) / 2;
            auto fit = guess_fit(sys, ts, q, mid, window.guard);
            if (fit) {
                best = *fit;
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        if constexpr (std::is_same_v<K, Rat>)
            return normalize_content(best);
        else
            return best;
    }
    return std::nullopt;
}

// required series length hint for an (order, degree) window
inline int required_series_length(int q, int d, int guard) {
    return (q + 1) * (d + 1) + guard + q;
}

struct ModpGuessReport {
    LinearODE<Rat> ode;
    std::vector<uint64_t> primes_used, primes_skipped;
    int order = 0, degree = 0;
};

// per-prime guessing with CRT assembly and rational reconstruction.
// series_gen(p) produces the series mod p (throws std::domain_error for an
// unlucky prime); verify_gen supplies fresh series for verification primes.
ModpGuessReport guess_ode_modp(const std::function<Series<Fp>(uint64_t)>& series_gen,
                               std::vector<uint64_t> primes, const GuessWindow& window,
                               int extra_verify_primes = 2);

} // namespace icl
