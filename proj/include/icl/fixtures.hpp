#pragma once
// Reference dataset: the exact ODEs, polynomial factor lists, partition
// tables, and amplitude values that the pipeline must reproduce. Everything
// here is machine-readable input for the verification suites.

#include "icl/ode.hpp"
#include "icl/field_ext.hpp"
#include <map>

namespace icl {
namespace fixtures {

// order-2 operator annihilating Y^(3)(w)
LinearODE<Rat> Y3_ode();
// order-2 operator annihilating Y^(4)(w)
LinearODE<Rat> Y4_ode();
// order-6 operator annihilating Ytilde^(3)(w) = int y1 y2 y3
LinearODE<Rat> Ytilde3_ode();
// order-4 operators annihilating PhiD^(3), PhiD^(4)
LinearODE<Rat> phiD3_ode();
LinearODE<Rat> phiD4_ode();

// closed-form solution data for Y^(3): F1 = num1 * w^4 / den1,
// F2 = num2 * w^4 / (den2 * sqrt(1-16w^2)); Y^(3) = 12 (F1 - F2)
struct Y3ClosedForm {
    UniPoly<Rat> num1, den1; // den includes the (1-5w)(1+3w+4w^2) factors
    UniPoly<Rat> num2, den2;
};
Y3ClosedForm y3_closed_form();

// Y^(5) solution data
UniPoly<Rat> Y5_R1();
UniPoly<Rat> Y5_R2();
UniPoly<Rat> Y5_Q1();
UniPoly<Rat> Y5_Q2();

// Y^(3)(s) particular solution numerator/denominator
UniPoly<Rat> Y3s_num();
UniPoly<Rat> Y3s_den();

// singularity partition of the PhiD^(n) head polynomials, n = 3..8
struct Partition {
    std::vector<UniPoly<Rat>> p1, p2, p3;
};
Partition partition(int n);

// physical Landau lists (section results), n = 3..8
std::vector<UniPoly<Rat>> physical_list(int n);
// extra branch-point factors, n = 3, 4, 5
std::vector<UniPoly<Rat>> branch_extra_list(int n);

// operators L1 (order 1) and L2 (order 2) in s whose product annihilates
// PhiD^(3)(s) - 1/2 (with the 1/n! dropped)
DiffOp<Rat> opL1();
DiffOp<Rat> opL2();

// solution-basis polynomials of L2
UniPoly<Rat> D0();
UniPoly<Rat> DK();
UniPoly<Rat> DE();

// printed singular amplitudes of PhiD^(3) in w, and in s at s2;
// kind: "log" (ln x), "xlog" (x ln x), "xm12" (x^(-1/2))
struct AmplitudeFixture {
    std::string point_name; // "1/4", "-1/4", "1", "-1/2", "inf", "w1", "s2", "s1"
    std::string kind;
    // value = (a + b i) * pi^e * 7^(f/4) with rational a, b and e in {0,-1}
    Rat re_coef, im_coef;
    int pi_exp;   // 0 or -1
    int seven_quarter_exp; // 0 or -1 (power of 7^(1/4))
};
std::vector<AmplitudeFixture> phiD3_amplitudes();

// exact values of Y^(3): 37/1100 at w=1/5; (4099 +/- 3881 sqrt(-7)...)/90112
Rat y3_at_one_fifth();
QuadExt y3_at_w0_upper(); // value at the upper root of 1+3w+4w^2

// s-plane factors of P3^(5) and P3^(6)
UniPoly<Rat> phiD5_s_selfdual();   // 4-2s+9s^2-2s^3+9s^4-2s^5+4s^6
UniPoly<Rat> phiD5_s_singular();   // 4+6s+7s^2+5s^3+2s^4 (outside |s|=1, singular)
UniPoly<Rat> phiD5_s_regular();    // 2+5s+7s^2+6s^3+4s^4 (inside, not singular)
UniPoly<Rat> phiD6_s_factor();     // 16+24s^2+45s^4+24s^6+16s^8

} // namespace fixtures
} // namespace icl
