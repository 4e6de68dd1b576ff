#pragma once

#include <utility>
#include <vector>

#include "heun/field.hpp"

namespace heun {

// Univariate polynomial in z over the active field.  Coefficients are stored
// lowest degree first with a nonzero leading coefficient; the zero polynomial
// has an empty coefficient list and degree -1.
class Poly {
  public:
    Poly() = default;
    Poly(const ExactScalar& c);
    Poly(long n) : Poly(ExactScalar(n)) {}
    explicit Poly(std::vector<ExactScalar> coeffs);

    static Poly variable();  // z
    static Poly monomial(const ExactScalar& c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const ExactScalar& lc() const;
    ExactScalar coeff(int k) const;
    const std::vector<ExactScalar>& coeffs() const { return c_; }

    FieldSpec field() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const ExactScalar& s) const;
    Poly operator/(const ExactScalar& s) const { return *this * s.inverse(); }
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(long e) const;
    Poly derivative() const;
    ExactScalar evaluate(const ExactScalar& x) const;
    Poly compose(const Poly& inner) const;
    Poly monic() const;

    // Taylor shift: p(z + s).
    Poly shifted(const ExactScalar& s) const;

    // Euclidean division; throws on division by zero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    Poly divexact(const Poly& b) const;  // throws if the remainder is nonzero

  private:
    void normalize();
    std::vector<ExactScalar> c_;
};

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

// Yun decomposition: a = lc * prod factor^multiplicity with monic, square-free,
// pairwise coprime factors and distinct multiplicities >= 1.  Error on zero input.
std::vector<std::pair<int, Poly>> squarefree_decomposition(const Poly& a);

// Product of the square-free factors, monic.  Error on zero input.
Poly radical(const Poly& a);

// Roots of a monic square-free factor inside the field, when it splits there
// (always for degree 1; for degree 2 when the discriminant is a field square).
std::optional<std::vector<ExactScalar>> split_roots(const Poly& factor, const FieldSpec& fs);

}  // namespace heun
