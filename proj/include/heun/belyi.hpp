#pragma once

#include <optional>
#include <vector>

#include "heun/ode.hpp"

namespace heun {

// j = lead * j1 / j2 with j1, j2 monic and coprime, deg j1 = N > deg j2 = M.
// The "j - 1" fiber is carried by w() = lead*j1 - j2.
struct BelyiMap {
    Poly j1, j2;
    ExactScalar lead;
    int N = 0, M = 0;
    Poly lambda;  // radical of j1 * j2 * (lead*j1 - j2), monic, degree N + 1

    Poly w() const { return j1 * lead - j2; }
    RationalFunction as_ratfunc() const { return RationalFunction(j1 * lead, j2); }
};

// Fiber of the three special values.
enum class Fiber { zero, one, infinity };

// Multisets of local multiplicities over 0, 1 and infinity; over_inf includes
// the point at infinity with index N - M (recorded separately in inf_index).
// Each multiset sums to N.
struct RamificationData {
    std::vector<long> over0, over1, over_inf;
    long inf_index = 0;  // the entry of over_inf belonging to the point at infinity
    long degree() const;
    bool riemann_hurwitz_holds() const;  // 2N-2 = sum (e-1) over the three fibers
};

RamificationData make_ramification(std::vector<long> over0, std::vector<long> over1,
                                   std::vector<long> over_inf_finite, long inf_index);

// none = no constraint (infinity in the A|a_i sense).
using IndexConstraint = std::optional<long>;

struct SingularPoint {
    Fiber fiber;
    long index;
    Poly factor;                               // monic square-free, carries the roots
    std::optional<std::vector<ExactScalar>> roots;  // when the factor splits
    bool at_infinity = false;
};

struct FamilyClassification {
    int free_params = 0;                       // 3 - number of active constraints
    IndexConstraint A, B, C;                   // witnessing constraints
    long r = 0, s = 0, t = 0;                  // counts of fully-constrained points
    long r1 = 0, s1 = 0, t1 = 0;               // counts of surviving points; r1+s1+t1 = 4
};

// Validates coprimality, the degree condition, and that the radical of
// j1*j2*(lead*j1 - j2) has degree exactly N + 1 (the branched-cover count that
// characterises ramification confined to {0, 1, infinity}).
BelyiMap verify_belyi(const Poly& j1, const Poly& j2, const ExactScalar& lead);

// Normalizes an arbitrary fraction J1/J2 to the monic convention first.
BelyiMap make_belyi(const Poly& J1, const Poly& J2);

RamificationData ramification_data(const BelyiMap& m);

// A | a_i => a_i = A on each fiber (no constraint when the slot is empty).
bool check_index_constraints(const RamificationData& r, IndexConstraint A, IndexConstraint B,
                             IndexConstraint C);

// Points whose index differs from the fiber constraint, plus infinity (always
// kept).  Pre: check_index_constraints holds.
std::vector<SingularPoint> singular_points(const BelyiMap& m, IndexConstraint A,
                                           IndexConstraint B, IndexConstraint C,
                                           const FieldSpec& fs = FieldSpec());

// Searches no constraint, then one, then two, then three, for the least
// constrained (A, B, C) with exactly four surviving singular points.
// Throws "not Heun-compatible" when none exists.
FamilyClassification classify_family(const RamificationData& r);

// Number of transitive triples (g1, g2, g3) in S_n with g1 g2 g3 = id and the
// prescribed cycle types, counted up to simultaneous conjugation.  n <= 8.
long count_triples(const std::vector<long>& ct0, const std::vector<long>& ct1,
                   const std::vector<long>& ct_inf);

}  // namespace heun
