#pragma once

#include "heun/poly.hpp"

namespace heun {

// Reduced ratio of polynomials: gcd(num, den) = 1, den monic and nonzero.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(const Poly& p) : num_(p), den_(1) {}
    RationalFunction(const ExactScalar& s) : num_(Poly(s)), den_(1) {}
    RationalFunction(long n) : num_(Poly(n)), den_(1) {}
    RationalFunction(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    FieldSpec field() const { return FieldSpec::join(num_.field(), den_.field()); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction derivative() const;
    RationalFunction compose(const RationalFunction& inner) const;
    ExactScalar evaluate(const ExactScalar& x) const;  // throws "pole at point"
    RationalFunction pow(long e) const;

    // Order of vanishing at a finite point (negative at a pole).
    int valuation(const ExactScalar& point) const;
    // Order of vanishing at infinity: deg den - deg num (num != 0).
    int valuation_at_infinity() const;

    // Laurent coefficients at a finite point: returns v = valuation and the
    // coefficients of (z-point)^v, ..., (z-point)^(v+count-1).
    std::pair<int, std::vector<ExactScalar>> series_at(const ExactScalar& point,
                                                       int count) const;

    static RationalFunction variable() { return RationalFunction(Poly::variable()); }

  private:
    Poly num_, den_;
};

inline RationalFunction dlog(const RationalFunction& f) {
    if (f.is_zero()) throw error("logarithmic derivative of zero");
    return f.derivative() / f;
}

RationalFunction dlog(const Poly& p);

}  // namespace heun
