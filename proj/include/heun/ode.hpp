#pragma once

#include <vector>

#include "heun/ratfunc.hpp"

namespace heun {

// Operator y'' + p1 y' + p2 y = 0 with rational-function coefficients.
struct LinearODE2 {
    RationalFunction p1, p2;
    bool operator==(const LinearODE2& o) const { return p1 == o.p1 && p2 == o.p2; }
    bool operator!=(const LinearODE2& o) const { return !(*this == o); }
    FieldSpec field() const { return FieldSpec::join(p1.field(), p2.field()); }
};

// Point of the Riemann sphere with coordinates in the active field.
struct Point {
    bool infinite = false;
    ExactScalar z;
    static Point infinity() { return Point{true, ExactScalar(0)}; }
    static Point finite(const ExactScalar& v) { return Point{false, v}; }
    bool operator==(const Point& o) const {
        return infinite == o.infinite && (infinite || z == o.z);
    }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

std::string point_to_string(const Point& p);

// z = (a w + b)/(c w + d), ad - bc != 0.
struct Mobius {
    ExactScalar a, b, c, d;
    Mobius(const ExactScalar& a_, const ExactScalar& b_, const ExactScalar& c_,
           const ExactScalar& d_);
    static Mobius identity();
    // The unique map sending (0, 1, infinity) to (p0, p1, pinf).
    static Mobius from_standard_triple(const Point& p0, const Point& p1, const Point& pinf);
    Mobius inverse() const;
    Point apply(const Point& p) const;
    RationalFunction as_ratfunc() const;
};

// Gauge multiplier f carried by its logarithmic derivative f'/f; the residues
// at the simple poles are the exponent shifts.
struct GaugeFactor {
    RationalFunction dlog;
};

struct ExponentPair {
    Point point;
    ExactScalar rho1, rho2;  // canonical order: rho1 <= rho2 lexicographically
};

enum class PointClass { regular, apparent, true_singular };

// Gauss operator with Riemann scheme {0: (0, 1-gamma); 1: (0, gamma-alpha-beta);
// infinity: (alpha, beta)}.
LinearODE2 hypergeometric_ode(const ExactScalar& alpha, const ExactScalar& beta,
                              const ExactScalar& gamma);

// Substitution y(z) -> Y(j(z)); j nonconstant.
LinearODE2 pullback(const LinearODE2& ode, const RationalFunction& j);

// Multiplier transform y -> f*y expressed through u = f'/f.
LinearODE2 gauge(const LinearODE2& ode, const GaugeFactor& f);

// Change of variable z = (a w + b)/(c w + d).
LinearODE2 mobius_transform(const LinearODE2& ode, const Mobius& map);

// y'' = p y with p = -p2 + p1^2/4 + p1'/2, returned as {p1 = 0, p2 = -p}.
LinearODE2 to_sl_form(const LinearODE2& ode);

// Operator in w = 1/z describing the behaviour at infinity.
LinearODE2 infinity_chart(const LinearODE2& ode);

// Monic square-free factors whose roots carry the poles of p1 or p2.
std::vector<Poly> singular_factors(const LinearODE2& ode);

// Indicial roots at a regular or regular-singular point; (0, 1) at an
// ordinary finite point, (-1, 0) at an ordinary infinity.
ExponentPair local_exponents(const LinearODE2& ode, const Point& pt);

// Frobenius solution y = sum c_k (z-z0)^(rho+k), c_0 = 1, at a finite point.
// Throws "resonance" when the indicial polynomial vanishes at rho + k, k >= 1.
std::vector<ExactScalar> frobenius_series(const LinearODE2& ode, const ExactScalar& z0,
                                          const ExactScalar& rho, int order);

// Classification per the local theory: exponents (0,1) (resp. (-1,0) at
// infinity) with a log-free basis mean no singularity at all; a nonnegative
// integer pair with a log-free basis is an apparent singularity.
PointClass is_apparent_or_regular(const LinearODE2& ode, const Point& pt);

// Exponent sum at every finite singularity equals 1 - Res(p1).
bool fuchs_residue_check(const LinearODE2& ode, const FieldSpec& fs = FieldSpec());

// All points where the reduced operator is genuinely singular (class
// true_singular or apparent), including infinity when singular there.  Points
// are located inside the declared field; a singular factor that does not
// split there throws "singularity outside field".
std::vector<Point> true_singular_support(const LinearODE2& ode,
                                         const FieldSpec& fs = FieldSpec(),
                                         std::vector<Point>* apparent = nullptr);

}  // namespace heun
