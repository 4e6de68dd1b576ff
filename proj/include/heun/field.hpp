#pragma once

#include <optional>
#include <string>

#include "heun/rational.hpp"

namespace heun {

// Coefficient field: either Q, or one declared quadratic extension
// Q(t1) with t1^2 = p*t1 + q.  x^2 - p*x - q must be irreducible over Q,
// i.e. p^2 + 4q is not a rational square.
class FieldSpec {
  public:
    FieldSpec() = default;  // rationals
    static FieldSpec rationals() { return FieldSpec(); }
    static FieldSpec quadratic(const Rational& p, const Rational& q);

    bool is_quadratic() const { return quad_; }
    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }

    bool operator==(const FieldSpec& o) const {
        if (quad_ != o.quad_) return false;
        return !quad_ || (p_ == o.p_ && q_ == o.q_);
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    // "t1^2 = p*t1 + q"
    std::string minpoly_string() const;

    // The field containing both operands; mixing two distinct quadratic
    // extensions is an error.
    static FieldSpec join(const FieldSpec& x, const FieldSpec& y);

  private:
    bool quad_ = false;
    Rational p_{0}, q_{0};
};

// Element a + b*t1 of the active field.  When b == 0 the element is stored
// with the trivial field so plain rationals mix freely with any extension.
class ExactScalar {
  public:
    ExactScalar() : a_(0), b_(0) {}
    ExactScalar(long n) : a_(n), b_(0) {}
    ExactScalar(const Rational& r) : a_(r), b_(0) {}
    ExactScalar(const Rational& a, const Rational& b, const FieldSpec& fs);
    static ExactScalar generator(const FieldSpec& fs);

    const Rational& rat() const { return a_; }
    const Rational& gen() const { return b_; }
    const FieldSpec& field() const { return fs_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_one() const { return b_ == 0 && a_ == 1; }

    ExactScalar operator-() const;
    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar operator/(const ExactScalar& o) const;
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }

    bool operator==(const ExactScalar& o) const;
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    ExactScalar inverse() const;
    ExactScalar conj() const;   // a + b*t1bar with t1bar = p - t1
    Rational norm() const;      // x * conj(x), rational

    ExactScalar pow(long e) const;

    // Canonical order of the field: lexicographic on (a, b).  For plain
    // rationals this is the usual order.
    static bool canonical_less(const ExactScalar& x, const ExactScalar& y);

  private:
    Rational a_, b_;
    FieldSpec fs_;
};

// Square root inside the active field, if one exists there.
std::optional<ExactScalar> field_sqrt(const ExactScalar& d, const FieldSpec& fs);

std::string scalar_to_string(const ExactScalar& s);

}  // namespace heun
