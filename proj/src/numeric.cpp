#include "heun/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace heun {

Complex embed_generator(const FieldSpec& fs) {
    if (!fs.is_quadratic()) throw error("no generator: field is the rationals");
    double p = rational_to_double(fs.p());
    double q = rational_to_double(fs.q());
    double disc = p * p + 4 * q;
    if (disc >= 0) return Complex((p + std::sqrt(disc)) / 2, 0.0);
    return Complex(p / 2, std::sqrt(-disc) / 2);
}

Complex embed(const ExactScalar& s) {
    Complex out(rational_to_double(s.rat()), 0.0);
    if (!s.is_rational()) out += rational_to_double(s.gen()) * embed_generator(s.field());
    return out;
}

Complex evaluate_poly(const Poly& p, const Complex& z) {
    Complex acc(0.0, 0.0);
    for (int k = p.degree(); k >= 0; --k) acc = acc * z + embed(p.coeff(k));
    return acc;
}

Complex evaluate_ratfunc(const RationalFunction& f, const Complex& z) {
    Complex d = evaluate_poly(f.den(), z);
    if (std::abs(d) < 1e-14) throw error("pole at point");
    return evaluate_poly(f.num(), z) / d;
}

Complex Series::value(const Complex& z) const { return derivative(z, 0); }

Complex Series::derivative(const Complex& z, int order) const {
    // termwise derivative of (z-a)^(rho+k)
    Complex w = z - anchor;
    Complex acc(0.0, 0.0);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        double e = rho + static_cast<double>(k);
        double fac = 1.0;
        for (int j = 0; j < order; ++j) fac *= e - j;
        if (fac == 0.0) continue;
        acc += coeffs[k] * fac * std::pow(w, Complex(e - order, 0.0));
    }
    return acc;
}

Complex gauss_2f1(const Rational& alpha, const Rational& beta, const Rational& gamma,
                  const Complex& z, double tol) {
    if (rational_is_integer(gamma) && gamma <= 0) throw error("gamma pole");
    if (std::abs(z) >= 1.0) throw error("series requires |z| < 1");
    double a = rational_to_double(alpha), b = rational_to_double(beta),
           c = rational_to_double(gamma);
    Complex term(1.0, 0.0), sum(1.0, 0.0);
    const long cap = 100000;
    for (long k = 0; k < cap; ++k) {
        double kk = static_cast<double>(k);
        term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
        sum += term;
        if (std::abs(term) < tol * std::max(1.0, std::abs(sum))) return sum;
    }
    throw error("no convergence");
}

Series heun_local_series(const HeunEquation& h, const Point& pt, int branch, int order) {
    auto [rho, coeffs] = heun_local_series_exact(h, pt, branch, order);
    Series s;
    s.anchor = embed(pt.z);
    if (!rho.is_rational()) throw error("nonrational exponent in numeric series");
    s.rho = rational_to_double(rho.rat());
    s.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs) s.coeffs.push_back(embed(c));
    return s;
}

namespace {
std::vector<Complex> singular_locations(const LinearODE2& ode) {
    std::vector<Complex> out;
    Poly dens = ode.p1.den() * ode.p2.den();
    if (dens.degree() <= 0) return out;
    // All fixture denominators split over the active field; for robustness the
    // distance check also accepts per-factor magnitude bounds.
    for (const auto& [mult, factor] : squarefree_decomposition(dens)) {
        (void)mult;
        auto roots = split_roots(factor, factor.field());
        if (roots)
            for (const auto& r : *roots) out.push_back(embed(r));
    }
    return out;
}
}  // namespace

double residual(const LinearODE2& ode, const NumericSolution& f,
                const std::vector<Complex>& points) {
    std::vector<Complex> sing = singular_locations(ode);
    double worst = 0.0;
    for (const Complex& z : points) {
        for (const Complex& s : sing)
            if (std::abs(z - s) < 0.05) throw error("point too close to singularity");
        Complex v2 = f.d2(z);
        Complex v1 = evaluate_ratfunc(ode.p1, z) * f.d1(z);
        Complex v0 = evaluate_ratfunc(ode.p2, z) * f.value(z);
        double scale = std::max({std::abs(v2), std::abs(v1), std::abs(v0), 1.0});
        worst = std::max(worst, std::abs(v2 + v1 + v0) / scale);
    }
    return worst;
}

}  // namespace heun
