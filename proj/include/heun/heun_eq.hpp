#pragma once

#include "heun/ode.hpp"

namespace heun {

// Normal form
//   y'' + ((1-t1h)/(z-t) + (1-t2h)/z + (1-t3h)/(z-1)) y'
//       + (th41 th42 z - q)/(z (z-1) (z-t)) y = 0
// with th41 = -(t1h+t2h+t3h-2+th4)/2 and th42 = -(t1h+t2h+t3h-2-th4)/2.
struct HeunEquation {
    ExactScalar theta1, theta2, theta3, theta4, t, q;

    HeunEquation(const ExactScalar& th1, const ExactScalar& th2, const ExactScalar& th3,
                 const ExactScalar& th4, const ExactScalar& t_, const ExactScalar& q_);

    ExactScalar theta41() const;
    ExactScalar theta42() const;

    bool operator==(const HeunEquation& o) const;
    bool operator!=(const HeunEquation& o) const { return !(*this == o); }

    // Same operator, opposite labelling of the two exponents at infinity.
    HeunEquation theta4_flipped() const;
};

LinearODE2 heun_to_ode(const HeunEquation& h);

// One member of the normalization orbit: which singular point was sent to
// each of t, 0, 1, infinity, plus the gauge data used to zero the exponents.
struct HeunCandidate {
    HeunEquation heun;
    Point source_t, source_0, source_1, source_inf;
    int shifted_positions = 0;            // finite positions needing a nonzero gauge
    ExactScalar inf_shift;                // exponents at infinity moved by -inf_shift
};

// All Moebius arrangements of the four singular points onto (t, 0, 1, inf).
// Pre: exactly four true singular points, none apparent, Fuchsian.
std::vector<HeunCandidate> heun_orbit(const LinearODE2& ode,
                                      const FieldSpec& fs = FieldSpec());

// Canonical representative: fewest gauge-shifted positions, then smallest
// (t, theta1, theta2, theta3) in the canonical field order; theta4 sorted so
// that theta41 <= theta42.
HeunEquation ode_to_heun(const LinearODE2& ode, const FieldSpec& fs = FieldSpec());
HeunCandidate ode_to_heun_candidate(const LinearODE2& ode,
                                    const FieldSpec& fs = FieldSpec());

// y'' = p(z) y stored via the coefficient of y: p2slot = -p =
//   a1/(z-t)^2 + a2/z^2 + a3/(z-1)^2 + a4/(z(z-1)) + L/(z(z-t)(z-1)).
struct SLHeun {
    ExactScalar a1, a2, a3, a4, L, t;
    LinearODE2 as_ode() const;
};

// Closed formulas: a_i = (1 - theta_i^2)/4, a4 = (sum theta_i^2 - theta4^2)/4 - 1/2,
// L = t*th41*th42 - q - ((1-theta1)/2)((1-theta2)(t-1) + (1-theta3) t).
SLHeun heun_to_sl(const HeunEquation& h);

// Partial-fraction extraction from an operator already in SL shape with
// singularities {t, 0, 1, inf}; the independent route for the dual check.
SLHeun sl_coefficients(const LinearODE2& sl, const ExactScalar& t);

// Accessory parameter from a known exponent-zero local solution at z = 0:
// the z^0 coefficient of L(series) fixes q, the z^1 coefficient must then
// vanish ("inconsistent series" otherwise).  Needs coefficients c0..c2, c0 != 0.
ExactScalar accessory_from_solution(const ExactScalar& theta1, const ExactScalar& theta2,
                                    const ExactScalar& theta3, const ExactScalar& theta4,
                                    const ExactScalar& t,
                                    const std::vector<ExactScalar>& series);

// Lame form p(z) y'' + p'(z)/2 y' - (n(n+1) z + B) y = 0, p = 4z^3 - g2 z - g3.
struct LameEquation {
    ExactScalar n, B, g2, g3;
};

// Requires theta1 = theta2 = theta3 = 1/2 and a distinct-root cubic; n =
// theta4 - 1/2, B = 4q, and the cubic has roots {t,0,1} - (t+1)/3 (sum 0).
LameEquation heun_to_lame(const HeunEquation& h);

// Inverse of the labelling: candidates (t, q, theta4) recovered from the cubic.
std::vector<HeunEquation> lame_to_heun(const LameEquation& l, const FieldSpec& fs);

// The operator of the Lame form with an explicit accessory value.
LinearODE2 lame_operator(const ExactScalar& n, const ExactScalar& B_op, const ExactScalar& g2,
                         const ExactScalar& g3);

// Exact Frobenius expansion of the Heun solution at 0, 1 or t.
// branch: 0 = exponent zero, 1 = the other exponent.
std::pair<ExactScalar, std::vector<ExactScalar>> heun_local_series_exact(
    const HeunEquation& h, const Point& pt, int branch, int order);

}  // namespace heun
