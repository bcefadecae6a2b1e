#pragma once
// Z/p for word-sized primes p. Elements are reduced representatives in
// [0, p). Accumulation uses 128-bit intermediates so 62-bit primes never
// overflow.

#include "icl/rat.hpp"
#include <cstdint>
#include <stdexcept>

namespace icl {

struct FpCtx {
    uint64_t p;
    explicit FpCtx(uint64_t prime) : p(prime) {}
};

class Fp {
public:
    uint64_t v = 0;
    uint64_t p = 0; // 0 marks an unbound zero (additive identity of any field)

    Fp() = default;
    Fp(uint64_t val, uint64_t prime) : v(prime ? val % prime : 0), p(prime) {}

    static Fp from_int(long n, uint64_t p) {
        long m = n % (long)p;
        if (m < 0) m += (long)p;
        return Fp((uint64_t)m, p);
    }
    static Fp from_mpz(const Int& n, uint64_t p) {
        Int m = n % Int((unsigned long)p);
        if (m < 0) m += Int((unsigned long)p);
        return Fp(m.get_ui(), p);
    }
    // fails (throws) when the denominator is divisible by p: the caller
    // treats such a prime as unlucky and skips it.
    static Fp from_rat(const Rat& r, uint64_t p) {
        Fp den = from_mpz(r.get_den(), p);
        if (den.v == 0) throw std::domain_error("prime divides denominator");
        return from_mpz(r.get_num(), p) * den.inv();
    }

    uint64_t prime(const Fp& o) const { return p ? p : o.p; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        uint64_t p = a.prime(b);
        uint64_t s = a.v + b.v;
        if (s >= p) s -= p;
        return Fp(s, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        uint64_t p = a.prime(b);
        return Fp(a.v >= b.v ? a.v - b.v : a.v + p - b.v, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        uint64_t p = a.prime(b);
        if (p == 0) return Fp(); // both operands are unbound zeros
        return Fp((uint64_t)(((unsigned __int128)a.v * b.v) % p), p);
    }
    Fp operator-() const { return Fp(v ? p - v : 0, p); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inv() const {
        if (v == 0) throw std::domain_error("inverse of 0 mod p");
        // extended Euclid
        int64_t t = 0, nt = 1;
        uint64_t r = p, nr = v;
        while (nr != 0) {
            uint64_t q = r / nr;
            int64_t tmp = t - (int64_t)q * nt; t = nt; nt = tmp;
            uint64_t tr = r - q * nr; r = nr; nr = tr;
        }
        if (r != 1) throw std::domain_error("non-invertible element mod p");
        return Fp(t < 0 ? (uint64_t)(t + (int64_t)p) : (uint64_t)t, p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v != b.v; }

    Fp pow(uint64_t e) const {
        Fp r(1, p), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }
};

template <> struct domain_traits<Fp> {
    static constexpr bool exact = true;
    static bool is_zero(const Fp& a) { return a.v == 0; }
    static std::string str(const Fp& a) { return std::to_string(a.v); }
};

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit with the standard witness set
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; s++; }
    auto powmod = [&](uint64_t a, uint64_t e) {
        unsigned __int128 r = 1, b = a % n;
        while (e) {
            if (e & 1) r = r * b % n;
            b = b * b % n;
            e >>= 1;
        }
        return (uint64_t)r;
    };
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; i++) {
            x = (uint64_t)((unsigned __int128)x * x % n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// Primes descending from just below 2^bits.
inline std::vector<uint64_t> primes_below_bit(int bits, int count, uint64_t skip_from = 0) {
    std::vector<uint64_t> ps;
    uint64_t n = (bits >= 64 ? ~0ull : (1ull << bits)) - 1;
    if (skip_from) n = skip_from - 1;
    for (; (int)ps.size() < count && n > 2; n--)
        if (is_prime_u64(n)) ps.push_back(n);
    return ps;
}

} // namespace icl
