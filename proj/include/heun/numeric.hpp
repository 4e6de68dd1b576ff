#pragma once

#include <complex>
#include <vector>

#include "heun/heun_eq.hpp"

namespace heun {

using Complex = std::complex<double>;

// Quadratic-field elements embed through the root of the minimal polynomial
// with positive imaginary part (or the larger real root).
Complex embed_generator(const FieldSpec& fs);
Complex embed(const ExactScalar& s);
Complex evaluate_poly(const Poly& p, const Complex& z);
Complex evaluate_ratfunc(const RationalFunction& f, const Complex& z);  // throws near-pole

// Truncated local expansion (z - anchor)^rho * sum coeffs[k] (z - anchor)^k.
struct Series {
    Complex anchor;
    double rho = 0.0;
    std::vector<Complex> coeffs;

    Complex value(const Complex& z) const;
    Complex derivative(const Complex& z, int order) const;  // order 0, 1 or 2
};

// Partial sums of the defining series; |z| < 1, gamma not a nonpositive
// integer.  Stops when the term drops below tol * |sum|; throws
// "no convergence" past the term cap and "gamma pole" on bad gamma.
Complex gauss_2f1(const Rational& alpha, const Rational& beta, const Rational& gamma,
                  const Complex& z, double tol = 1e-12);

// Local Heun solution at 0, 1 or t as an embedded Series (exact recurrence
// coefficients, then rounded once).
Series heun_local_series(const HeunEquation& h, const Point& pt, int branch, int order);

struct NumericSolution {
    // value and first two derivatives at a point
    virtual Complex value(const Complex& z) const = 0;
    virtual Complex d1(const Complex& z) const = 0;
    virtual Complex d2(const Complex& z) const = 0;
    virtual ~NumericSolution() = default;
};

struct SeriesSolution final : NumericSolution {
    Series s;
    explicit SeriesSolution(Series s_) : s(std::move(s_)) {}
    Complex value(const Complex& z) const override { return s.value(z); }
    Complex d1(const Complex& z) const override { return s.derivative(z, 1); }
    Complex d2(const Complex& z) const override { return s.derivative(z, 2); }
};

// max over the points of |f'' + p1 f' + p2 f| / max(|f''|, |p1 f'|, |p2 f|, 1).
// Points must keep distance >= 0.05 from every singularity of the operator.
double residual(const LinearODE2& ode, const NumericSolution& f,
                const std::vector<Complex>& points);

}  // namespace heun
