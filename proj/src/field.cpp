#include "heun/field.hpp"

namespace heun {

FieldSpec FieldSpec::quadratic(const Rational& p, const Rational& q) {
    Rational disc = p * p + 4 * q;
    if (rational_sqrt(disc).has_value())
        throw error("reducible minimal polynomial: t1^2 - (" + rational_to_string(p) +
                    ")*t1 - (" + rational_to_string(q) + ") splits over the rationals");
    FieldSpec fs;
    fs.quad_ = true;
    fs.p_ = p;
    fs.q_ = q;
    return fs;
}

std::string FieldSpec::minpoly_string() const {
    if (!quad_) return "";
    std::string s = "t1^2 = ";
    if (p_ == 0)
        s += q_ >= 0 ? rational_to_string(q_) : "-" + rational_to_string(-q_);
    else {
        s += rational_to_string(p_) + "*t1";
        if (q_ > 0)
            s += " + " + rational_to_string(q_);
        else if (q_ < 0)
            s += " - " + rational_to_string(-q_);
    }
    return s;
}

FieldSpec FieldSpec::join(const FieldSpec& x, const FieldSpec& y) {
    if (!x.is_quadratic()) return y;
    if (!y.is_quadratic()) return x;
    if (x != y)
        throw error("mixed quadratic extensions: " + x.minpoly_string() + " vs " +
                    y.minpoly_string());
    return x;
}

ExactScalar::ExactScalar(const Rational& a, const Rational& b, const FieldSpec& fs)
    : a_(a), b_(b), fs_(fs) {
    if (b_ != 0 && !fs_.is_quadratic())
        throw error("generator coefficient requires a quadratic field");
    if (b_ == 0) fs_ = FieldSpec::rationals();
}

ExactScalar ExactScalar::generator(const FieldSpec& fs) {
    if (!fs.is_quadratic()) throw error("no generator: field is the rationals");
    return ExactScalar(Rational(0), Rational(1), fs);
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    FieldSpec fs = FieldSpec::join(fs_, o.fs_);
    Rational a = a_ + o.a_, b = b_ + o.b_;
    if (b == 0) return ExactScalar(a);
    return ExactScalar(a, b, fs);
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    FieldSpec fs = FieldSpec::join(fs_, o.fs_);
    // (a1 + b1 t)(a2 + b2 t) with t^2 = p t + q
    Rational a = a_ * o.a_, b = a_ * o.b_ + b_ * o.a_;
    if (b_ != 0 && o.b_ != 0) {
        a += b_ * o.b_ * fs.q();
        b += b_ * o.b_ * fs.p();
    }
    if (b == 0) return ExactScalar(a);
    return ExactScalar(a, b, fs);
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw error("division by zero");
    if (b_ == 0) return ExactScalar(Rational(1) / a_);
    // 1/x = conj(x)/norm(x)
    Rational n = norm();
    ExactScalar c = conj();
    return ExactScalar(c.a_ / n, c.b_ / n, fs_);
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const { return *this * o.inverse(); }

bool ExactScalar::operator==(const ExactScalar& o) const {
    if (a_ != o.a_ || b_ != o.b_) return false;
    if (b_ != 0) FieldSpec::join(fs_, o.fs_);  // mixing distinct extensions is an error
    return true;
}

ExactScalar ExactScalar::conj() const {
    if (b_ == 0) return *this;
    // t1bar = p - t1
    return ExactScalar(a_ + b_ * fs_.p(), -b_, fs_);
}

Rational ExactScalar::norm() const {
    // (a + b t)(a + b p - b t) = a^2 + a b p - b^2 q
    return a_ * a_ + a_ * b_ * fs_.p() - b_ * b_ * fs_.q();
}

ExactScalar ExactScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    ExactScalar acc(1), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool ExactScalar::canonical_less(const ExactScalar& x, const ExactScalar& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
}

std::optional<ExactScalar> field_sqrt(const ExactScalar& d, const FieldSpec& fs) {
    if (d.is_zero()) return ExactScalar(0);
    if (d.is_rational()) {
        if (auto r = rational_sqrt(d.rat())) return ExactScalar(*r);
        if (!fs.is_quadratic()) return std::nullopt;
        // (x + y t)^2 = D rational, y != 0: x = -y p / 2, y^2 (p^2 + 4q)/4 = D
        Rational disc = fs.p() * fs.p() + 4 * fs.q();
        Rational y2 = 4 * d.rat() / disc;
        if (auto y = rational_sqrt(y2)) {
            if (*y == 0) return std::nullopt;
            Rational x = -(*y) * fs.p() / 2;
            return ExactScalar(x, *y, fs);
        }
        return std::nullopt;
    }
    // d = d0 + d1 t, d1 != 0.  Solve (x + y t)^2 = d:
    //   2 x y + y^2 p = d1,  x^2 + y^2 q = d0.
    // With u = y^2:  u^2 (p^2 + 4q) - u (2 d1 p + 4 d0) + d1^2 = 0.
    const Rational& p = fs.p();
    const Rational& q = fs.q();
    Rational A = p * p + 4 * q;
    Rational B = -(2 * d.gen() * p + 4 * d.rat());
    Rational C = d.gen() * d.gen();
    Rational disc = B * B - 4 * A * C;
    auto sq = rational_sqrt(disc);
    if (!sq) return std::nullopt;
    for (int sign : {+1, -1}) {
        Rational u = (-B + sign * (*sq)) / (2 * A);
        if (u <= 0) continue;
        auto y = rational_sqrt(u);
        if (!y || *y == 0) continue;
        Rational x = (d.gen() - u * p) / (2 * (*y));
        ExactScalar cand(x, *y, fs);
        if (cand * cand == d) return cand;
    }
    return std::nullopt;
}

std::string scalar_to_string(const ExactScalar& s) {
    if (s.is_rational()) return rational_to_string(s.rat());
    std::string out;
    bool have_a = s.rat() != 0;
    if (have_a) out += rational_to_string(s.rat());
    const Rational& b = s.gen();
    if (b == 1)
        out += have_a ? " + t1" : "t1";
    else if (b == -1)
        out += have_a ? " - t1" : "-t1";
    else if (b > 0)
        out += (have_a ? " + " : "") + rational_to_string(b) + "*t1";
    else
        out += (have_a ? " - " + rational_to_string(-b) : rational_to_string(b)) + "*t1";
    return out;
}

}  // namespace heun
