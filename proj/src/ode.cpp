#include "heun/ode.hpp"

#include <algorithm>

#include "heun/expr.hpp"

namespace heun {

std::string point_to_string(const Point& p) {
    return p.infinite ? "infinity" : scalar_to_string(p.z);
}

Mobius::Mobius(const ExactScalar& a_, const ExactScalar& b_, const ExactScalar& c_,
               const ExactScalar& d_)
    : a(a_), b(b_), c(c_), d(d_) {
    if ((a * d - b * c).is_zero()) throw error("singular matrix");
}

Mobius Mobius::identity() {
    return Mobius(ExactScalar(1), ExactScalar(0), ExactScalar(0), ExactScalar(1));
}

Mobius Mobius::inverse() const { return Mobius(d, -b, -c, a); }

Point Mobius::apply(const Point& p) const {
    if (p.infinite) {
        if (c.is_zero()) return Point::infinity();
        return Point::finite(a / c);
    }
    ExactScalar den = c * p.z + d;
    if (den.is_zero()) return Point::infinity();
    return Point::finite((a * p.z + b) / den);
}

RationalFunction Mobius::as_ratfunc() const {
    Poly z = Poly::variable();
    return RationalFunction(z * a + Poly(b), z * c + Poly(d));
}

Mobius Mobius::from_standard_triple(const Point& p0, const Point& p1, const Point& pinf) {
    // mu(0) = p0, mu(1) = p1, mu(inf) = pinf.
    if (!p0.infinite && !p1.infinite && !pinf.infinite) {
        // mu(w) = (pinf (p1-p0) w + p0 (pinf-p1)) / ((p1-p0) w + (pinf-p1))
        ExactScalar u = p1.z - p0.z, v = pinf.z - p1.z;
        return Mobius(pinf.z * u, p0.z * v, u, v);
    }
    if (pinf.infinite) {
        // affine: mu(w) = p0 + (p1-p0) w
        return Mobius(p1.z - p0.z, p0.z, ExactScalar(0), ExactScalar(1));
    }
    if (p0.infinite) {
        // mu(w) = (pinf w + (p1 - pinf))/w ... need mu(0)=inf, mu(1)=p1, mu(inf)=pinf
        return Mobius(pinf.z, p1.z - pinf.z, ExactScalar(1), ExactScalar(0));
    }
    // p1 infinite: mu(w) = (pinf w - p0)/(w - 1)
    return Mobius(pinf.z, -p0.z, ExactScalar(1), ExactScalar(-1));
}

LinearODE2 hypergeometric_ode(const ExactScalar& alpha, const ExactScalar& beta,
                              const ExactScalar& gamma) {
    Poly z = Poly::variable();
    Poly zz1 = z * (Poly(1) - z);  // z(1-z)
    RationalFunction p1(Poly(gamma) - z * (alpha + beta + ExactScalar(1)), zz1);
    RationalFunction p2(Poly(alpha * beta), z * (z - Poly(1)));
    return {p1, p2};
}

LinearODE2 pullback(const LinearODE2& ode, const RationalFunction& j) {
    if (j.is_constant()) throw error("pullback by a constant map");
    RationalFunction jp = j.derivative();
    RationalFunction p1 = ode.p1.compose(j) * jp - jp.derivative() / jp;
    RationalFunction p2 = ode.p2.compose(j) * jp * jp;
    return {p1, p2};
}

LinearODE2 gauge(const LinearODE2& ode, const GaugeFactor& f) {
    const RationalFunction& u = f.dlog;
    // f''/f = u' + u^2
    RationalFunction p1 = ode.p1 - u - u;
    RationalFunction p2 = ode.p2 + u * u - ode.p1 * u - u.derivative();
    return {p1, p2};
}

LinearODE2 mobius_transform(const LinearODE2& ode, const Mobius& map) {
    return pullback(ode, map.as_ratfunc());
}

LinearODE2 to_sl_form(const LinearODE2& ode) {
    ExactScalar quarter(Rational(1, 4)), half(Rational(1, 2));
    RationalFunction p = -ode.p2 + ode.p1 * ode.p1 * RationalFunction(quarter) +
                         ode.p1.derivative() * RationalFunction(half);
    return {RationalFunction(), -p};
}

LinearODE2 infinity_chart(const LinearODE2& ode) {
    // z = 1/w:  P1(w) = 2/w - p1(1/w)/w^2,  P2(w) = p2(1/w)/w^4.
    Poly w = Poly::variable();
    RationalFunction winv(Poly(1), w);
    RationalFunction w2 = RationalFunction(w * w);
    RationalFunction P1 = RationalFunction(Poly(2), w) - ode.p1.compose(winv) / w2;
    RationalFunction P2 = ode.p2.compose(winv) / (w2 * w2);
    return {P1, P2};
}

std::vector<Poly> singular_factors(const LinearODE2& ode) {
    // Square-free factors of den(p1)*den(p2) are pairwise coprime and cover
    // every pole once.
    Poly dens = ode.p1.den() * ode.p2.den();
    std::vector<Poly> out;
    if (dens.degree() <= 0) return out;
    for (const auto& [mult, factor] : squarefree_decomposition(dens)) {
        (void)mult;
        out.push_back(factor);
    }
    return out;
}

namespace {
int factor_multiplicity(Poly d, const Poly& f) {
    int m = 0;
    while (d.degree() >= f.degree()) {
        auto [q, r] = Poly::divmod(d, f);
        if (!r.is_zero()) break;
        d = q;
        ++m;
    }
    return m;
}
}  // namespace

namespace {

// a(w) = (z-z0) p1 and b(w) = (z-z0)^2 p2 expanded at z0; both must be
// holomorphic there (pole orders at most 1 and 2).
struct LocalData {
    std::vector<ExactScalar> a, b;
};

LocalData local_data_finite(const LinearODE2& ode, const ExactScalar& z0, int order) {
    LocalData out;
    auto expand = [&](const RationalFunction& f, int shift) {
        std::vector<ExactScalar> coeffs(static_cast<size_t>(order), ExactScalar(0));
        if (!f.is_zero()) {
            auto [v, s] = f.series_at(z0, order);
            if (v + shift < 0) throw error("irregular singularity at " + scalar_to_string(z0));
            // coefficients of w^k in w^shift * f, k = 0..order-1
            for (int k = 0; k < order; ++k) {
                int idx = k - shift - v;
                if (idx >= 0 && idx < order) coeffs[static_cast<size_t>(k)] = s[static_cast<size_t>(idx)];
            }
        }
        return coeffs;
    };
    out.a = expand(ode.p1, 1);
    out.b = expand(ode.p2, 2);
    return out;
}

std::pair<ExactScalar, ExactScalar> indicial_roots(const LinearODE2& ode, const Point& pt) {
    LinearODE2 local = pt.infinite ? infinity_chart(ode) : ode;
    ExactScalar z0 = pt.infinite ? ExactScalar(0) : pt.z;
    LocalData ld = local_data_finite(local, z0, 1);
    // s(s-1) + a0 s + b0 = 0
    ExactScalar a0 = ld.a[0], b0 = ld.b[0];
    ExactScalar B = a0 - ExactScalar(1);
    ExactScalar disc = B * B - ExactScalar(4) * b0;
    FieldSpec fs = FieldSpec::join(FieldSpec::join(disc.field(), local.field()), z0.field());
    auto sq = field_sqrt(disc, fs);
    if (!sq) throw error("exponent outside field at " + point_to_string(pt));
    ExactScalar half(Rational(1, 2));
    ExactScalar r1 = (-B - *sq) * half, r2 = (-B + *sq) * half;
    if (ExactScalar::canonical_less(r2, r1)) std::swap(r1, r2);
    return {r1, r2};
}

}  // namespace

ExponentPair local_exponents(const LinearODE2& ode, const Point& pt) {
    auto [r1, r2] = indicial_roots(ode, pt);
    return ExponentPair{pt, r1, r2};
}

std::vector<ExactScalar> frobenius_series(const LinearODE2& ode, const ExactScalar& z0,
                                          const ExactScalar& rho, int order) {
    LocalData ld = local_data_finite(ode, z0, order);
    auto indicial = [&](const ExactScalar& s) {
        return s * (s - ExactScalar(1)) + ld.a[0] * s + ld.b[0];
    };
    std::vector<ExactScalar> c(static_cast<size_t>(order), ExactScalar(0));
    c[0] = ExactScalar(1);
    for (int m = 1; m < order; ++m) {
        ExactScalar rhs(0);
        for (int i = 1; i <= m; ++i) {
            ExactScalar w = ld.a[static_cast<size_t>(i)] * (rho + ExactScalar(m - i)) +
                            ld.b[static_cast<size_t>(i)];
            rhs -= c[static_cast<size_t>(m - i)] * w;
        }
        ExactScalar den = indicial(rho + ExactScalar(m));
        if (den.is_zero()) throw error("resonance at step " + std::to_string(m));
        c[static_cast<size_t>(m)] = rhs / den;
    }
    return c;
}

namespace {

// Log-free test at an integer exponent gap: run the recursion from the smaller
// exponent up to the gap; the solution is log-free iff the right-hand side at
// the resonant step vanishes.
bool logfree_at_gap(const LinearODE2& ode, const ExactScalar& z0, const ExactScalar& rho1,
                    long gap) {
    int order = static_cast<int>(gap) + 1;
    LocalData ld = local_data_finite(ode, z0, order);
    auto indicial = [&](const ExactScalar& s) {
        return s * (s - ExactScalar(1)) + ld.a[0] * s + ld.b[0];
    };
    std::vector<ExactScalar> c(static_cast<size_t>(order), ExactScalar(0));
    c[0] = ExactScalar(1);
    for (int m = 1; m <= static_cast<int>(gap); ++m) {
        ExactScalar rhs(0);
        for (int i = 1; i <= m; ++i) {
            ExactScalar w = ld.a[static_cast<size_t>(i)] * (rho1 + ExactScalar(m - i)) +
                            ld.b[static_cast<size_t>(i)];
            rhs -= c[static_cast<size_t>(m - i)] * w;
        }
        if (m == static_cast<int>(gap)) return rhs.is_zero();
        c[static_cast<size_t>(m)] = rhs / indicial(rho1 + ExactScalar(m));
    }
    return true;  // gap 0 handled by caller
}

}  // namespace

PointClass is_apparent_or_regular(const LinearODE2& ode, const Point& pt) {
    auto [r1, r2] = indicial_roots(ode, pt);
    ExactScalar lo = pt.infinite ? ExactScalar(-1) : ExactScalar(0);
    ExactScalar hi = pt.infinite ? ExactScalar(0) : ExactScalar(1);
    bool ordinary_pair = (r1 == lo && r2 == hi);

    if (!r1.is_rational() || !r2.is_rational()) return PointClass::true_singular;
    if (!rational_is_integer(r1.rat()) || !rational_is_integer(r2.rat()))
        return PointClass::true_singular;
    if (r1 == r2) return PointClass::true_singular;  // equal exponents force a logarithm

    auto gap = rational_to_long((r2 - r1).rat());
    if (!gap) return PointClass::true_singular;
    LinearODE2 local = pt.infinite ? infinity_chart(ode) : ode;
    ExactScalar z0 = pt.infinite ? ExactScalar(0) : pt.z;
    bool logfree = logfree_at_gap(local, z0, r1, *gap);
    if (!logfree) return PointClass::true_singular;
    if (ordinary_pair) return PointClass::regular;
    // Apparent singularities have a single-valued local basis with integer
    // exponents; at finite points these are nonnegative.
    if (!pt.infinite && r1.rat() < 0) return PointClass::true_singular;
    return PointClass::apparent;
}

bool fuchs_residue_check(const LinearODE2& ode, const FieldSpec& fs) {
    for (const auto& factor : singular_factors(ode)) {
        // Regular-singular requires pole order <= 1 in p1 and <= 2 in p2.
        if (factor_multiplicity(ode.p1.den(), factor) > 1) return false;
        if (factor_multiplicity(ode.p2.den(), factor) > 2) return false;
        auto roots = split_roots(
            factor, FieldSpec::join(fs, FieldSpec::join(factor.field(), ode.field())));
        if (!roots) continue;  // exponent sum equals 1 - a0 by the indicial equation
        for (const auto& r : *roots) {
            ExponentPair e = local_exponents(ode, Point::finite(r));
            ExactScalar res(0);
            if (!ode.p1.is_zero()) {
                auto [v, s] = ode.p1.series_at(r, 1);
                if (v < -1) return false;
                if (v == -1) res = s[0];
            }
            if (e.rho1 + e.rho2 != ExactScalar(1) - res) return false;
        }
    }
    return true;
}

std::vector<Point> true_singular_support(const LinearODE2& ode, const FieldSpec& fs,
                                         std::vector<Point>* apparent) {
    std::vector<Point> out;
    FieldSpec ctx = FieldSpec::join(fs, ode.field());
    for (const auto& factor : singular_factors(ode)) {
        auto roots = split_roots(factor, FieldSpec::join(factor.field(), ctx));
        if (!roots) throw error("singularity outside field: " + poly_to_string(factor));
        for (const auto& r : *roots) {
            Point pt = Point::finite(r);
            switch (is_apparent_or_regular(ode, pt)) {
                case PointClass::true_singular:
                    out.push_back(pt);
                    break;
                case PointClass::apparent:
                    if (apparent) apparent->push_back(pt);
                    break;
                case PointClass::regular:
                    break;  // reduced coefficients should not reach here
            }
        }
    }
    switch (is_apparent_or_regular(ode, Point::infinity())) {
        case PointClass::true_singular:
            out.push_back(Point::infinity());
            break;
        case PointClass::apparent:
            if (apparent) apparent->push_back(Point::infinity());
            break;
        case PointClass::regular:
            break;
    }
    return out;
}

}  // namespace heun
