#include "icl/guess.hpp"
#include <map>

namespace icl {

ModpGuessReport guess_ode_modp(const std::function<Series<Fp>(uint64_t)>& series_gen,
                               std::vector<uint64_t> primes, const GuessWindow& window,
                               int extra_verify_primes) {
    if (primes.size() < 2)
        throw std::invalid_argument("guess_ode_modp: need at least two primes");
    struct PerPrime {
        uint64_t p;
        LinearODE<Fp> ode;
        std::pair<int, int> shape;
    };
    std::vector<PerPrime> results;
    std::vector<uint64_t> skipped;
    std::optional<std::pair<int, int>> known_shape;
    uint64_t next_prime_from = 0;

    auto try_prime = [&](uint64_t p) -> bool {
        Series<Fp> ts;
        try {
            ts = series_gen(p);
        } catch (const std::domain_error&) {
            skipped.push_back(p); // prime divides a series denominator
            return false;
        }
        std::optional<LinearODE<Fp>> got;
        if (known_shape) {
            detail_guess::GuessSystem<Fp> sys(ts, known_shape->first);
            got = guess_fit(sys, ts, known_shape->first, known_shape->second, window.guard);
            if (!got) { // shape mismatch: treat this prime as unlucky
                skipped.push_back(p);
                return false;
            }
        } else {
            got = guess_ode(ts, window);
            if (!got) {
                skipped.push_back(p);
                return false;
            }
        }
        auto shape = std::make_pair(got->order(), got->max_degree());
        if (known_shape && shape != *known_shape) {
            skipped.push_back(p);
            return false;
        }
        results.push_back({p, *got, shape});
        return true;
    };

    for (uint64_t p : primes) {
        if (try_prime(p) && !known_shape) {
            // adopt the most common shape once two primes agree
            std::map<std::pair<int, int>, int> counts;
            for (auto& r : results) counts[r.shape]++;
            for (auto& [s, c] : counts)
                if (c >= 2) known_shape = s;
            if (!known_shape && results.size() >= 2) {
                // disagreement between first primes: keep the smaller order,
                // drop the others as unlucky
                auto best = results[0].shape;
                for (auto& r : results) best = std::min(best, r.shape);
                known_shape = best;
                std::vector<PerPrime> kept;
                for (auto& r : results) {
                    if (r.shape == best) kept.push_back(r);
                    else skipped.push_back(r.p);
                }
                results = kept;
            }
        }
    }
    if (results.empty())
        throw std::runtime_error("guess_ode_modp: all primes unlucky");
    if (!known_shape) known_shape = results[0].shape;

    auto in_inputs = [&](uint64_t p) {
        return std::find(primes.begin(), primes.end(), p) != primes.end();
    };
    auto fetch_more = [&]() {
        for (;;) {
            auto ps = primes_below_bit(62, 1, next_prime_from);
            next_prime_from = ps.at(0);
            if (!in_inputs(ps[0])) return ps[0];
        }
    };

    for (int round = 0; round < 40; round++) {
        // normalize each image so the head's leading coefficient is 1,
        // making coefficients comparable across primes
        int q = known_shape->first, d = known_shape->second;
        std::vector<PolyResidue> per_coeff;
        std::optional<LinearODE<Rat>> lifted;
        bool ok = true;
        LinearODE<Rat> cand;
        cand.var = results[0].ode.var;
        cand.a.assign(q + 1, UniPoly<Rat>(cand.var));
        for (int k = 0; k <= q && ok; k++) {
            std::vector<PolyResidue> rs;
            for (auto& r : results) {
                Fp scale = r.ode.a.back().lead().inv();
                UniPoly<Fp> img = scale * r.ode.a[k];
                img.c.resize(d + 1, Fp(0, r.p));
                rs.push_back({img, r.p});
            }
            auto rec = crt_reconstruct(rs);
            if (!rec) { ok = false; break; }
            rec->var = cand.var;
            cand.a[k] = *rec;
        }
        if (ok) {
            cand.trim();
            cand = normalize_content(cand);
            // verify against fresh primes
            int verified = 0;
            while (verified < extra_verify_primes) {
                uint64_t vp = fetch_more();
                Series<Fp> ts;
                LinearODE<Fp> img;
                try {
                    ts = series_gen(vp);
                    img.var = cand.var;
                    for (auto& pk : cand.a) img.a.push_back(reduce_mod(pk, vp));
                    img.trim();
                } catch (const std::domain_error&) {
                    continue;
                }
                auto res = apply_operator(img, ts);
                if (!res.is_zero_through(res.N))
                    throw std::runtime_error("guess_ode_modp: reconstructed operator fails verification");
                verified++;
            }
            ModpGuessReport rep;
            rep.ode = cand;
            rep.order = q;
            rep.degree = d;
            for (auto& r : results) rep.primes_used.push_back(r.p);
            rep.primes_skipped = skipped;
            return rep;
        }
        // reconstruction failed: add another prime
        for (int tries = 0; tries < 10; tries++) {
            if (try_prime(fetch_more())) break;
        }
    }
    throw std::runtime_error("guess_ode_modp: rational reconstruction did not converge");
}

} // namespace icl
