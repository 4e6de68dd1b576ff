#include "heun/poly.hpp"

#include <algorithm>

namespace heun {

Poly::Poly(const ExactScalar& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<ExactScalar> coeffs) : c_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::variable() { return monomial(ExactScalar(1), 1); }

Poly Poly::monomial(const ExactScalar& c, int k) {
    if (c.is_zero()) return Poly();
    std::vector<ExactScalar> v(static_cast<size_t>(k) + 1, ExactScalar(0));
    v.back() = c;
    return Poly(std::move(v));
}

const ExactScalar& Poly::lc() const {
    if (is_zero()) throw error("leading coefficient of the zero polynomial");
    return c_.back();
}

ExactScalar Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return ExactScalar(0);
    return c_[static_cast<size_t>(k)];
}

FieldSpec Poly::field() const {
    FieldSpec fs;
    for (const auto& c : c_) fs = FieldSpec::join(fs, c.field());
    return fs;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<ExactScalar> v(std::max(c_.size(), o.c_.size()), ExactScalar(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<ExactScalar> v(c_.size() + o.c_.size() - 1, ExactScalar(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(v));
}

Poly Poly::operator*(const ExactScalar& s) const {
    if (s.is_zero()) return Poly();
    Poly r = *this;
    for (auto& c : r.c_) c = c * s;
    return r;
}

Poly Poly::pow(long e) const {
    if (e < 0) throw error("negative polynomial power");
    Poly acc(1), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<ExactScalar> v(c_.size() - 1, ExactScalar(0));
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * ExactScalar(static_cast<long>(i));
    return Poly(std::move(v));
}

ExactScalar Poly::evaluate(const ExactScalar& x) const {
    ExactScalar acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly(c_[i]);
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lc().inverse();
}

Poly Poly::shifted(const ExactScalar& s) const {
    std::vector<ExactScalar> lin = {s, ExactScalar(1)};
    return compose(Poly(lin));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw error("division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<ExactScalar> rem = a.c_;
    std::vector<ExactScalar> quot(static_cast<size_t>(a.degree() - b.degree()) + 1,
                                  ExactScalar(0));
    ExactScalar inv = b.lc().inverse();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        ExactScalar q = rem[static_cast<size_t>(k + b.degree())] * inv;
        quot[static_cast<size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(k + j)] -= q * b.c_[static_cast<size_t>(j)];
    }
    rem.resize(static_cast<size_t>(std::max(b.degree(), 0)));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::divexact(const Poly& b) const {
    auto [q, r] = divmod(*this, b);
    if (!r.is_zero()) throw error("inexact polynomial division");
    return q;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        b = b.monic();
        Poly r = Poly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<std::pair<int, Poly>> squarefree_decomposition(const Poly& a) {
    if (a.is_zero()) throw error("zero input");
    std::vector<std::pair<int, Poly>> out;
    Poly f = a.monic();
    if (f.degree() == 0) return out;
    // Yun's algorithm (characteristic 0).
    Poly g = poly_gcd(f, f.derivative());
    Poly w = f.divexact(g);
    Poly y = f.derivative().divexact(g);
    Poly s = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        Poly gi = poly_gcd(w, s);
        if (gi.degree() > 0) out.emplace_back(i, gi);
        w = w.divexact(gi);
        y = s.divexact(gi);
        s = y - w.derivative();
        ++i;
    }
    return out;
}

Poly radical(const Poly& a) {
    Poly r(1);
    for (const auto& [mult, factor] : squarefree_decomposition(a)) {
        (void)mult;
        r = r * factor;
    }
    return r;
}

namespace {

// Divisors of |n| by trial division; empty when n is too hard to factor
// (never the case for the catalogue data).
std::vector<mpz_class> divisors_of(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<std::pair<mpz_class, int>> fact;
    if (n == 0) return {};
    for (mpz_class p = 2; p * p <= n && p < 1000000; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) fact.emplace_back(p, e);
    }
    if (n > 1) {
        if (!mpz_probab_prime_p(n.get_mpz_t(), 25) && n > mpz_class(1000000000000L))
            return {};  // unfactored large cofactor
        fact.emplace_back(n, 1);
    }
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fact) {
        size_t base = divs.size();
        mpz_class pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
        if (divs.size() > 200000) return {};
    }
    return divs;
}

bool all_rational(const Poly& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_rational()) return false;
    return true;
}

// Rational roots of a rational-coefficient polynomial.
std::vector<Rational> rational_roots(const Poly& f) {
    std::vector<Rational> out;
    Poly work = f;
    // strip roots at zero first
    while (!work.is_zero() && work.coeff(0).is_zero() && work.degree() > 0) {
        out.push_back(Rational(0));
        std::vector<ExactScalar> shifted(work.coeffs().begin() + 1, work.coeffs().end());
        work = Poly(std::move(shifted));
    }
    if (work.degree() < 1) return out;
    // clear denominators
    mpz_class lcm = 1;
    for (const auto& c : work.coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rat().get_den().get_mpz_t());
    std::vector<mpz_class> ic;
    for (const auto& c : work.coeffs()) {
        Rational v = c.rat() * Rational(lcm);
        ic.push_back(v.get_num());
    }
    std::vector<mpz_class> ps = divisors_of(ic.front());
    std::vector<mpz_class> qs = divisors_of(ic.back());
    for (const auto& p : ps)
        for (const auto& q : qs)
            for (int sign : {+1, -1}) {
                Rational cand(sign * p, q);
                cand.canonicalize();
                if (work.evaluate(ExactScalar(cand)).is_zero()) {
                    bool dup = false;
                    for (const auto& r : out)
                        if (r == cand) dup = true;
                    if (!dup) out.push_back(cand);
                }
            }
    return out;
}

std::optional<std::vector<ExactScalar>> quadratic_roots(const Poly& factor,
                                                        const FieldSpec& fs) {
    ExactScalar b = factor.coeff(1) / factor.coeff(2);
    ExactScalar c = factor.coeff(0) / factor.coeff(2);
    ExactScalar disc = b * b - ExactScalar(4) * c;
    auto s = field_sqrt(disc, fs);
    if (!s) return std::nullopt;
    ExactScalar half = ExactScalar(Rational(1, 2));
    return std::vector<ExactScalar>{(-b + *s) * half, (-b - *s) * half};
}

}  // namespace

std::optional<std::vector<ExactScalar>> split_roots(const Poly& factor, const FieldSpec& fs) {
    std::vector<ExactScalar> roots;
    Poly work = factor.monic();
    Poly z = Poly::variable();
    while (work.degree() > 2) {
        // find one linear factor; for extension coefficients a + b*t1 a
        // rational root must kill both components
        Poly probe = work;
        if (!all_rational(probe)) {
            std::vector<ExactScalar> c0, c1;
            for (const auto& c : work.coeffs()) {
                c0.emplace_back(c.rat());
                c1.emplace_back(c.gen());
            }
            probe = poly_gcd(Poly(std::move(c0)), Poly(std::move(c1)));
            if (probe.degree() < 1) return std::nullopt;
        }
        std::vector<Rational> found = rational_roots(probe);
        bool deflated = false;
        for (const auto& r : found) {
            ExactScalar root{r};
            while (work.degree() > 0 && work.evaluate(root).is_zero()) {
                roots.push_back(root);
                work = work.divexact(z - Poly(root));
                deflated = true;
            }
        }
        if (!deflated) return std::nullopt;
    }
    if (work.degree() == 1) {
        roots.push_back(-work.coeff(0) / work.coeff(1));
    } else if (work.degree() == 2) {
        auto qr = quadratic_roots(work, fs);
        if (!qr) return std::nullopt;
        roots.push_back((*qr)[0]);
        roots.push_back((*qr)[1]);
    }
    std::sort(roots.begin(), roots.end(), ExactScalar::canonical_less);
    return roots;
}

}  // namespace heun
