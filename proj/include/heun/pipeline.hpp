#pragma once

#include "heun/belyi.hpp"
#include "heun/heun_eq.hpp"

namespace heun {

struct HypergeometricParams {
    ExactScalar alpha, beta, gamma;
};

// One fiber class of the predicted scheme: the points are the roots of
// `factor` (split out when possible); every point carries exponents (0, other)
// except the row at infinity, which carries the full pair.
struct SchemeRow {
    Fiber fiber;
    long index = 0;
    Poly factor;
    std::optional<std::vector<ExactScalar>> roots;
    bool at_infinity = false;
    ExactScalar exp1, exp2;
};

struct RiemannScheme {
    std::vector<SchemeRow> rows;
};

// Operator satisfied by j2^(-alpha) * F(alpha, beta, gamma; j) built from the
// closed log-derivative formulas:
//   q1 = L'/L + (g-1) j1'/j1 + (a+b-g) w'/w + (a-b) j2'/j2,  w = lead*j1 - j2,
//   q2 = ab (j1'/j1)(w'/w)
//      + a [ (j2'/j2) L'/L + (g-b-1)(j1'/j1)(j2'/j2) + (a-g)(j2'/j2)(w'/w)
//            + j2''/j2 - (j2'/j2)^2 ].
LinearODE2 belyi_pullback_operator(const BelyiMap& m, const HypergeometricParams& p);

// Independent route: pull the Gauss operator back along j, then gauge by
// dlog = -alpha * j2'/j2.
LinearODE2 belyi_pullback_oracle(const BelyiMap& m, const HypergeometricParams& p);

// Predicted exponents, assembled from ramification data alone:
//   over 0:   (0, (1-gamma) a_i)
//   over 1:   (0, (gamma-alpha-beta) b_j)
//   over inf: (0, (beta-alpha) c_k) at finite poles,
//             (alpha N, beta (N-M) + M alpha) at infinity.
RiemannScheme belyi_pullback_scheme(const BelyiMap& m, const HypergeometricParams& p,
                                    const FieldSpec& fs = FieldSpec());

// Full normalization to the Heun form.  Pre: the index constraints hold and
// exactly four singular points survive.  theta4 is labelled so that theta41
// descends from the alpha*N exponent whenever the source point at infinity
// stays at infinity.
HeunEquation belyi_pullback_to_heun(const BelyiMap& m, const HypergeometricParams& p,
                                    IndexConstraint A, IndexConstraint B, IndexConstraint C,
                                    const FieldSpec& fs = FieldSpec());

// The full normalization orbit of the pulled-back operator (for verifying
// published parameter tables that chose a different arrangement).
std::vector<HeunCandidate> belyi_pullback_heun_orbit(const BelyiMap& m,
                                                     const HypergeometricParams& p,
                                                     const FieldSpec& fs = FieldSpec());

}  // namespace heun
