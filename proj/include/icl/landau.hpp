#pragma once
// Landau-condition singularity sets for both integral families. The
// Chebyshev conditions are built in t = 1/(2w) and converted to w by
// coefficient reversal; elimination uses the bivariate resultant. The
// "physical" variants re-check each candidate root against the radical
// constraints numerically, with principal branches and an i0+ offset.

#include "icl/poly.hpp"
#include "icl/bipoly.hpp"
#include "icl/cheb.hpp"
#include "icl/ball.hpp"
#include <string>

namespace icl {

// poly in t = 1/(2w) -> primitive w-polynomial; the t = 0 (w = infinity)
// root is discarded by dropping the overall w-power
inline UniPoly<Rat> t_poly_to_w(const UniPoly<Rat>& pt) {
    if (pt.is_zero()) return UniPoly<Rat>('w');
    int d = pt.degree();
    UniPoly<Rat> out('w');
    out.c.assign(d + 1, Rat(0));
    Rat pw(1);
    // sum p_i t^i = sum p_i (2w)^(-i); multiply by (2w)^d
    for (int i = d; i >= 0; i--) {
        out.c[d - i] = pt.c[i] * pw;
        pw *= 2;
    }
    out.trim();
    int val = 0;
    while (val <= out.degree() && sgn(out.coeff(val)) == 0) val++;
    if (val > 0) {
        out.c.erase(out.c.begin(), out.c.begin() + val);
    }
    return make_primitive(out);
}

struct LandauFactor {
    UniPoly<Rat> poly;       // squarefree, primitive, in w (or s for the s-variant)
    std::string origin;      // "L1", "L2", "L3", "branch-L1", "branch-L2", "Yn-k<idx>"
    std::string status;      // "", "spurious", "retained", "rejected", "undecided"
};

struct LandauReport {
    std::string family;      // "Y" or "phiD"
    int n = 0;
    std::string variant;     // "galois", "with-branch-points", "physical", ...
    char variable = 'w';
    std::vector<LandauFactor> factors;

    UniPoly<Rat> product() const {
        UniPoly<Rat> r = UniPoly<Rat>::constant(variable, Rat(1));
        for (const auto& f : factors)
            if (f.status != "spurious" && f.status != "rejected")
                r = r * f.poly;
        return squarefree_part(r);
    }
    UniPoly<Rat> full_product() const {
        UniPoly<Rat> r = UniPoly<Rat>::constant(variable, Rat(1));
        for (const auto& f : factors) r = r * f.poly;
        return squarefree_part(r);
    }
};

// Y-family: the k-range Chebyshev conditions (ODE singularities) and the
// k=0,n conditions (integral singularities)
std::vector<UniPoly<Rat>> landau_Yn_ode(int n);
UniPoly<Rat> landau_Yn_integral(int n);

// w-polynomials whose roots satisfy 1/(2w) = T_k(cos 2pi/n) + T_m(cos 2pi/n),
// one squarefree polynomial per (k,m) Galois orbit, and their squarefree
// product. Built by resultants against the minimal polynomial of cos(2pi/n).
std::vector<UniPoly<Rat>> nickellian_orbit_factors(int n);
UniPoly<Rat> nickellian_polys(int n);

// split a squarefree integer polynomial in s into integer factors grouped by
// root modulus against the unit circle (inside / on / outside), verified by
// exact division; used for the Kramers-Wannier regime splits
std::vector<UniPoly<Rat>> split_by_unit_circle(const UniPoly<Rat>& f, int digits = 60);

// PhiD family
LandauReport landau_phiD_galois(int n);
LandauReport landau_phiD_branch(int n, const UniPoly<Rat>* ode_head_squarefree = nullptr);
LandauReport landau_phiD_physical(int n, int digits = 60);

enum class SRegime { SmallS, LargeS };
LandauReport landau_continuation_s(int n, SRegime regime, int digits = 60);

struct CloudPoint {
    ComplexBall s;
    int n;
    std::string source; // "L2" or "L3"
};
std::vector<CloudPoint> cloud_points(int n_max, int digits = 30);

// map a w-polynomial factor to its s-polynomial image: numerator of
// p(s/(2(1+s^2))) cleared by (1+s^2)^deg
inline UniPoly<Rat> w_factor_to_s(const UniPoly<Rat>& pw) {
    int d = pw.degree();
    UniPoly<Rat> num('s'), A = ipoly('s', {0, 1}), B = ipoly('s', {2, 0, 2});
    UniPoly<Rat> Bpow = UniPoly<Rat>::constant('s', Rat(1));
    // sum c_i A^i B^(d-i) via Horner
    for (int i = d; i >= 0; i--) {
        if (i < d) {
            num = num * A;
            Bpow = Bpow * B;
        }
        if (sgn(pw.c[i]) != 0) num = num + pw.c[i] * Bpow;
    }
    return make_primitive(num);
}

} // namespace icl
