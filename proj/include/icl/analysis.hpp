#pragma once
// Fuchsian analysis of a linear ODE: head-polynomial factorization against
// a candidate dictionary, indicial exponents, apparent-singularity
// detection, the P1/P2/P3 partition, and the closed-form amplitude of the
// nickellian singularities.

#include "icl/ode.hpp"
#include "icl/frobenius.hpp"
#include "icl/landau.hpp"

namespace icl {

enum class PartitionClass { P1, P2, P3, HeadApparent };

inline const char* partition_name(PartitionClass c) {
    switch (c) {
    case PartitionClass::P1: return "P1";
    case PartitionClass::P2: return "P2";
    case PartitionClass::P3: return "P3";
    default: return "apparent";
    }
}

struct SingularFactor {
    UniPoly<Rat> poly;   // squarefree primitive factor of the head
    int multiplicity;    // multiplicity in the head polynomial
    bool apparent = false;
    bool wc_all = false;             // every root real with |w| >= 1/4
    PartitionClass cls = PartitionClass::P3;
    std::vector<Rat> exponents;      // indicial exponents at a root (rational pts)
    bool exponents_known = false;
};

struct SingularityReport {
    LinearODE<Rat> ode;
    std::vector<SingularFactor> factors;
    std::vector<Rat> exponents_at_infinity;
    bool infinity_regular = true;
};

// squarefree factor list of the head polynomial: rational roots split off,
// remaining parts matched against the candidate dictionary, leftovers
// reported unfactored; infinity is appended by callers that need it
std::vector<std::pair<UniPoly<Rat>, int>> head_singularities(
    const LinearODE<Rat>& ode, const std::vector<UniPoly<Rat>>& candidates = {});

struct IrregularPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// indicial exponents at a rational point, a quadratic-surd point, or
// infinity; throws IrregularPoint when the indicial polynomial degenerates
std::vector<Rat> indicial_exponents(const LinearODE<Rat>& ode, const Rat& point);
std::vector<Rat> indicial_exponents_surd(const LinearODE<Rat>& ode, const QuadExt& point);
std::vector<Rat> indicial_exponents_infinity(const LinearODE<Rat>& ode);

// true iff every exponent at every root of `factor` is a distinct
// nonnegative integer and the Frobenius construction carries no logarithm
bool is_apparent(const LinearODE<Rat>& ode, const UniPoly<Rat>& factor, int margin = 30);

// membership of a point in W_c = (-inf, -1/4] U [1/4, inf)
bool in_Wc(const Rat& w);
bool in_Wc(const QuadExt& w);
bool in_Wc_ball(const ComplexBall& w); // throws when undecidable at this radius

// the partition of the non-apparent head factors for the diagonal family
SingularityReport classify_partition(const LinearODE<Rat>& ode, int n);

// closed-form amplitude at a nickellian singularity w_s
ComplexBall nickellian_amplitude(int n, const QuadExt& w_s, int digits = 40);

// operator equality up to one rational scale after content normalization;
// "equivalent" (weaker) means each operator annihilates the other's full
// local solution basis at 0 through the guard order
enum class OdeMatch { Equal, Equivalent, Different };
OdeMatch compare_odes(const LinearODE<Rat>& a, const LinearODE<Rat>& b, int guard_terms = 40);

} // namespace icl
