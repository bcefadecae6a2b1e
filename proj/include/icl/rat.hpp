#pragma once
// Exact scalar domains: arbitrary-precision rationals (GMP) and word-sized
// prime fields. Both satisfy the same concept so polynomial/series code can
// be generic over the coefficient domain.

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace icl {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) { Rat r(n, d); r.canonicalize(); return r; }

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) {
    return r.get_str();
}

inline Int numer(const Rat& r) { return r.get_num(); }
inline Int denom(const Rat& r) { return r.get_den(); }

// lcm of denominators, used to clear rows/series to integers
inline Int denominator_lcm(const std::vector<Rat>& v) {
    Int l = 1;
    for (const auto& r : v)
        l = lcm(l, r.get_den());
    return l;
}

inline Int content_gcd(const std::vector<Rat>& v) {
    // gcd of numerators of v after clearing denominators; 0 for all-zero input
    Int l = denominator_lcm(v);
    Int g = 0;
    for (const auto& r : v)
        g = gcd(g, Int(r.get_num() * (l / r.get_den())));
    return g;
}

template <class K> struct domain_traits;

template <> struct domain_traits<Rat> {
    static constexpr bool exact = true;
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& a) { return sgn(a) == 0; }
    static Rat from_int(long n) { return Rat(n); }
    static std::string str(const Rat& a) { return a.get_str(); }
};

} // namespace icl
