#include "icl/bipoly.hpp"
#include <cmath>

namespace icl {

namespace {

// Lagrange interpolation over F_p through (xs[i], ys[i]), O(n^2)
UniPoly<Fp> interpolate_fp(const std::vector<Fp>& xs, const std::vector<Fp>& ys, char var) {
    size_t n = xs.size();
    uint64_t p = xs.at(0).p;
    UniPoly<Fp> acc(var); // running product (x - x0)...(x - xk)
    acc.c = {Fp(1, p)};
    UniPoly<Fp> res(var);
    // Newton form
    std::vector<Fp> divided = ys;
    for (size_t k = 0; k < n; k++) {
        // divided differences column k
        if (k > 0) {
            for (size_t i = n - 1; i >= k; i--) {
                divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - k]);
                if (i == k) break;
            }
        }
        res = res + divided[k] * acc;
        UniPoly<Fp> lin(var, {-xs[k], Fp(1, p)});
        acc = acc * lin;
    }
    return res;
}

} // namespace

UniPoly<Rat> resultant_v(const BiPoly& P, const BiPoly& Q) {
    BiPoly p = P, q = Q;
    p.trim();
    q.trim();
    if (p.is_zero() || q.is_zero())
        throw std::domain_error("resultant_v: zero polynomial input");
    char var = p.inner;
    int dp = p.degree_v(), dq = q.degree_v();
    if (dp == 0 && dq == 0) return UniPoly<Rat>::constant(var, Rat(1));
    if (dp == 0) {
        UniPoly<Rat> r = UniPoly<Rat>::constant(var, Rat(1));
        for (int i = 0; i < dq; i++) r = r * p.c[0];
        return r;
    }
    if (dq == 0) {
        UniPoly<Rat> r = UniPoly<Rat>::constant(var, Rat(1));
        for (int i = 0; i < dp; i++) r = r * q.c[0];
        return r;
    }
    int D = dp * std::max(q.degree_t(), 0) + dq * std::max(p.degree_t(), 0);

    // crude coefficient-size bound for the Sylvester determinant: n! times
    // the product of row-wise max coefficient heights, plus slack
    double bound_bits = 64;
    int nrows = dp + dq;
    bound_bits += std::lgamma(nrows + 1.0) / std::log(2.0);
    auto height_bits = [](const BiPoly& b) {
        double h = 1;
        for (const auto& poly : b.c)
            for (const auto& coef : poly.c) {
                double bits = mpz_sizeinbase(coef.get_num().get_mpz_t(), 2) +
                              mpz_sizeinbase(coef.get_den().get_mpz_t(), 2);
                h = std::max(h, bits);
            }
        return h;
    };
    bound_bits += dq * (height_bits(p) + std::log2(p.degree_t() + 2.0) + std::log2(D + 2.0));
    bound_bits += dp * (height_bits(q) + std::log2(q.degree_t() + 2.0) + std::log2(D + 2.0));

    std::vector<PolyResidue> residues;
    uint64_t pstart = 0;
    double acc_bits = 0;
    UniPoly<Rat> prev_lift(var);
    int stable = 0;
    while (true) {
        auto ps = primes_below_bit(62, 1, pstart);
        uint64_t prime = ps.at(0);
        pstart = prime;
        // leading v-coefficients must not vanish mod prime
        UniPoly<Fp> lp, lq;
        try {
            lp = reduce_mod(p.c[dp], prime);
            lq = reduce_mod(q.c[dq], prime);
        } catch (const std::domain_error&) {
            continue; // prime divides a denominator
        }
        if (lp.is_zero() || lq.is_zero()) continue;

        std::vector<Fp> xs, ys;
        uint64_t t = 0;
        while ((int)xs.size() < D + 1) {
            Fp tv(t, prime);
            t++;
            if (t > (uint64_t)(4 * D + 16))
                throw std::runtime_error("resultant_v: ran out of evaluation points");
            if (lp.eval<Fp>(tv).v == 0 || lq.eval<Fp>(tv).v == 0) continue;
            auto pv = p.specialize(tv);
            auto qv = q.specialize(tv);
            Fp r = resultant(pv, qv, Fp(1, prime));
            xs.push_back(tv);
            ys.push_back(r);
        }
        auto img = interpolate_fp(xs, ys, var);
        img.c.resize(D + 1, Fp(0, prime)); // fixed length so degrees agree across primes
        img.var = var;
        residues.push_back({img, prime});
        acc_bits += 62;

        auto cand = crt_reconstruct(residues);
        if (cand) {
            if (!prev_lift.c.empty() && *cand == prev_lift) stable++;
            else stable = 0;
            prev_lift = *cand;
            if (acc_bits >= bound_bits || stable >= 2)
                return *cand;
        }
    }
}

} // namespace icl
