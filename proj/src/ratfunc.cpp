#include "heun/ratfunc.hpp"

namespace heun {

RationalFunction::RationalFunction(Poly num, Poly den) {
    if (den.is_zero()) throw error("division by zero");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(1);
        return;
    }
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = num.divexact(g);
        den = den.divexact(g);
    }
    ExactScalar inv = den.lc().inverse();
    num_ = num * inv;
    den_ = den * inv;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw error("division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::compose(const RationalFunction& inner) const {
    // num(inner)/den(inner) evaluated without leaving rational functions:
    // for p(x) = sum p_i x^i, p(n/d) = sum p_i n^i d^(deg-i) / d^deg.
    auto lift = [&inner](const Poly& p) {
        int d = p.degree();
        if (d < 0) return std::pair<Poly, Poly>(Poly(), Poly(1));
        Poly acc;  // Horner in n/d with common denominator d^deg
        for (int i = d; i >= 0; --i) {
            acc = acc * inner.num();
            if (!p.coeff(i).is_zero()) acc = acc + Poly(p.coeff(i)) * inner.den().pow(d - i);
        }
        return std::pair<Poly, Poly>(acc, inner.den().pow(d));
    };
    auto [nn, nd] = lift(num_);
    auto [dn, dd] = lift(den_);
    // (nn/nd) / (dn/dd)
    return RationalFunction(nn * dd, nd * dn);
}

ExactScalar RationalFunction::evaluate(const ExactScalar& x) const {
    ExactScalar d = den_.evaluate(x);
    if (d.is_zero()) throw error("pole at point " + scalar_to_string(x));
    return num_.evaluate(x) / d;
}

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw error("division by zero");
        return RationalFunction(den_, num_).pow(-e);
    }
    RationalFunction acc(1), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

namespace {
int root_multiplicity(Poly p, const ExactScalar& point) {
    int m = 0;
    std::vector<ExactScalar> lin = {-point, ExactScalar(1)};  // z - point
    Poly factor{lin};
    while (!p.is_zero() && p.evaluate(point).is_zero()) {
        p = p.divexact(factor);
        ++m;
    }
    return m;
}
}  // namespace

int RationalFunction::valuation(const ExactScalar& point) const {
    if (is_zero()) throw error("valuation of zero");
    return root_multiplicity(num_, point) - root_multiplicity(den_, point);
}

int RationalFunction::valuation_at_infinity() const {
    if (is_zero()) throw error("valuation of zero");
    return den_.degree() - num_.degree();
}

std::pair<int, std::vector<ExactScalar>> RationalFunction::series_at(const ExactScalar& point,
                                                                     int count) const {
    if (is_zero()) return {0, std::vector<ExactScalar>(static_cast<size_t>(count), ExactScalar(0))};
    Poly n = num_.shifted(point);  // expand around w = z - point
    Poly d = den_.shifted(point);
    int vn = 0, vd = 0;
    while (n.coeff(vn).is_zero()) ++vn;
    while (d.coeff(vd).is_zero()) ++vd;
    // series of (n/w^vn) / (d/w^vd) by coefficient recurrence
    std::vector<ExactScalar> s(static_cast<size_t>(count), ExactScalar(0));
    ExactScalar d0 = d.coeff(vd);
    for (int k = 0; k < count; ++k) {
        ExactScalar acc = n.coeff(vn + k);
        for (int j = 1; j <= k; ++j) acc -= d.coeff(vd + j) * s[static_cast<size_t>(k - j)];
        s[static_cast<size_t>(k)] = acc / d0;
    }
    return {vn - vd, std::move(s)};
}

RationalFunction dlog(const Poly& p) {
    if (p.is_zero()) throw error("logarithmic derivative of zero");
    return RationalFunction(p.derivative(), p);
}

}  // namespace heun
