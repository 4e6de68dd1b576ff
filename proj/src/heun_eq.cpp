#include "heun/heun_eq.hpp"

#include <algorithm>

#include "heun/expr.hpp"

namespace heun {

HeunEquation::HeunEquation(const ExactScalar& th1, const ExactScalar& th2,
                           const ExactScalar& th3, const ExactScalar& th4,
                           const ExactScalar& t_, const ExactScalar& q_)
    : theta1(th1), theta2(th2), theta3(th3), theta4(th4), t(t_), q(q_) {
    if (t == ExactScalar(0) || t == ExactScalar(1))
        throw error("t must avoid 0 and 1");
}

ExactScalar HeunEquation::theta41() const {
    ExactScalar half(Rational(1, 2));
    return -half * (theta1 + theta2 + theta3 - ExactScalar(2) + theta4);
}

ExactScalar HeunEquation::theta42() const {
    ExactScalar half(Rational(1, 2));
    return -half * (theta1 + theta2 + theta3 - ExactScalar(2) - theta4);
}

bool HeunEquation::operator==(const HeunEquation& o) const {
    return theta1 == o.theta1 && theta2 == o.theta2 && theta3 == o.theta3 &&
           theta4 == o.theta4 && t == o.t && q == o.q;
}

HeunEquation HeunEquation::theta4_flipped() const {
    return HeunEquation(theta1, theta2, theta3, -theta4, t, q);
}

LinearODE2 heun_to_ode(const HeunEquation& h) {
    Poly z = Poly::variable();
    Poly zm1 = z - Poly(1);
    Poly zmt = z - Poly(h.t);
    RationalFunction p1 = RationalFunction(Poly(ExactScalar(1) - h.theta1), zmt) +
                          RationalFunction(Poly(ExactScalar(1) - h.theta2), z) +
                          RationalFunction(Poly(ExactScalar(1) - h.theta3), zm1);
    Poly num = z * (h.theta41() * h.theta42()) - Poly(h.q);
    RationalFunction p2(num, z * zm1 * zmt);
    return {p1, p2};
}

namespace {

struct PointExponents {
    Point pt;
    ExactScalar rho1, rho2;
};

// Exponent to gauge away at a finite position: the zero exponent when present,
// otherwise the canonically smaller one.
const ExactScalar& exponent_to_kill(const PointExponents& pe) {
    if (pe.rho1.is_zero() || pe.rho2.is_zero())
        return pe.rho1.is_zero() ? pe.rho1 : pe.rho2;
    return pe.rho1;
}

}  // namespace

std::vector<HeunCandidate> heun_orbit(const LinearODE2& ode, const FieldSpec& fs) {
    std::vector<Point> apparent;
    std::vector<Point> sing = true_singular_support(ode, fs, &apparent);
    if (!apparent.empty()) throw error("apparent singularity present");
    if (sing.size() != 4) throw error("wrong singularity count: " + std::to_string(sing.size()));

    std::vector<PointExponents> exps;
    for (const Point& p : sing) {
        ExponentPair e = local_exponents(ode, p);
        exps.push_back({p, e.rho1, e.rho2});
    }

    std::vector<HeunCandidate> orbit;
    for (size_t i0 = 0; i0 < 4; ++i0)
        for (size_t i1 = 0; i1 < 4; ++i1)
            for (size_t iinf = 0; iinf < 4; ++iinf) {
                if (i0 == i1 || i0 == iinf || i1 == iinf) continue;
                size_t it = 6 - i0 - i1 - iinf;
                Mobius mu = Mobius::from_standard_triple(exps[i0].pt, exps[i1].pt,
                                                         exps[iinf].pt);
                Point t_img = mu.inverse().apply(exps[it].pt);
                if (t_img.infinite) throw error("degenerate arrangement");
                LinearODE2 moved = mobius_transform(ode, mu);

                // gauge exponents to (0, theta) at the three finite positions
                struct Slot {
                    ExactScalar at;          // position: t, 0 or 1
                    const PointExponents* src;
                };
                Slot slots[3] = {{t_img.z, &exps[it]},
                                 {ExactScalar(0), &exps[i0]},
                                 {ExactScalar(1), &exps[i1]}};
                RationalFunction dl;
                ExactScalar total_shift(0);
                ExactScalar theta[3];
                int shifted = 0;
                Poly z = Poly::variable();
                for (int s = 0; s < 3; ++s) {
                    const PointExponents& pe = *slots[s].src;
                    ExactScalar kill = exponent_to_kill(pe);
                    theta[s] = (kill == pe.rho1) ? pe.rho2 - pe.rho1 : pe.rho1 - pe.rho2;
                    if (!kill.is_zero()) {
                        ++shifted;
                        dl += RationalFunction(Poly(-kill), z - Poly(slots[s].at));
                        total_shift += -kill;
                    }
                }
                LinearODE2 fixed = dl.is_zero() ? moved : gauge(moved, GaugeFactor{dl});

                const PointExponents& pinf = exps[iinf];
                ExactScalar th41 = pinf.rho1 - total_shift;
                ExactScalar th42 = pinf.rho2 - total_shift;
                ExactScalar th4 = th42 - th41;

                // read q off the y-coefficient; its numerator over
                // z(z-1)(z-t) is th41*th42*z - q
                Poly dpoly = z * (z - Poly(1)) * (z - Poly(t_img.z));
                RationalFunction n = fixed.p2 * RationalFunction(dpoly);
                if (n.den().degree() != 0 || n.num().degree() > 1)
                    throw error("normalized operator is not of Heun shape");
                Poly npoly = n.num();
                if (npoly.coeff(1) != th41 * th42)
                    throw error("inconsistent exponents at infinity");
                ExactScalar q = -npoly.coeff(0);

                HeunCandidate cand{
                    HeunEquation(theta[0], theta[1], theta[2], th4, t_img.z, q),
                    exps[it].pt, exps[i0].pt, exps[i1].pt, pinf.pt, shifted, total_shift};
                orbit.push_back(std::move(cand));
            }
    return orbit;
}

namespace {
bool candidate_less(const HeunCandidate& x, const HeunCandidate& y) {
    if (x.shifted_positions != y.shifted_positions)
        return x.shifted_positions < y.shifted_positions;
    auto lt = ExactScalar::canonical_less;
    if (x.heun.t != y.heun.t) return lt(x.heun.t, y.heun.t);
    if (x.heun.theta1 != y.heun.theta1) return lt(x.heun.theta1, y.heun.theta1);
    if (x.heun.theta2 != y.heun.theta2) return lt(x.heun.theta2, y.heun.theta2);
    if (x.heun.theta3 != y.heun.theta3) return lt(x.heun.theta3, y.heun.theta3);
    return false;
}
}  // namespace

HeunCandidate ode_to_heun_candidate(const LinearODE2& ode, const FieldSpec& fs) {
    std::vector<HeunCandidate> orbit = heun_orbit(ode, fs);
    return *std::min_element(orbit.begin(), orbit.end(), candidate_less);
}

HeunEquation ode_to_heun(const LinearODE2& ode, const FieldSpec& fs) {
    return ode_to_heun_candidate(ode, fs).heun;
}

LinearODE2 SLHeun::as_ode() const {
    Poly z = Poly::variable();
    Poly zm1 = z - Poly(1);
    Poly zmt = z - Poly(t);
    RationalFunction p2 = RationalFunction(Poly(a1), zmt * zmt) +
                          RationalFunction(Poly(a2), z * z) +
                          RationalFunction(Poly(a3), zm1 * zm1) +
                          RationalFunction(Poly(a4), z * zm1) +
                          RationalFunction(Poly(L), z * zmt * zm1);
    return {RationalFunction(), p2};
}

SLHeun heun_to_sl(const HeunEquation& h) {
    ExactScalar quarter(Rational(1, 4)), half(Rational(1, 2)), one(1);
    SLHeun sl;
    sl.t = h.t;
    sl.a1 = (one - h.theta1 * h.theta1) * quarter;
    sl.a2 = (one - h.theta2 * h.theta2) * quarter;
    sl.a3 = (one - h.theta3 * h.theta3) * quarter;
    sl.a4 = (h.theta1 * h.theta1 + h.theta2 * h.theta2 + h.theta3 * h.theta3 -
             h.theta4 * h.theta4) *
                quarter -
            half;
    sl.L = h.t * h.theta41() * h.theta42() - h.q -
           ((one - h.theta1) * half) *
               ((one - h.theta2) * (h.t - one) + (one - h.theta3) * h.t);
    return sl;
}

SLHeun sl_coefficients(const LinearODE2& sl, const ExactScalar& t) {
    if (!sl.p1.is_zero()) throw error("operator is not in SL form");
    auto double_pole_coeff = [&](const ExactScalar& at) {
        auto [v, s] = sl.p2.series_at(at, 1);
        if (v < -2) throw error("pole order exceeds two");
        return v == -2 ? s[0] : ExactScalar(0);
    };
    auto residue = [&](const ExactScalar& at) {
        auto [v, s] = sl.p2.series_at(at, 3);
        if (v > -1) return ExactScalar(0);
        return s[static_cast<size_t>(-1 - v)];
    };
    SLHeun out;
    out.t = t;
    out.a1 = double_pole_coeff(t);
    out.a2 = double_pole_coeff(ExactScalar(0));
    out.a3 = double_pole_coeff(ExactScalar(1));
    ExactScalar r0 = residue(ExactScalar(0));
    ExactScalar rt = residue(t);
    out.L = rt * t * (t - ExactScalar(1));
    out.a4 = out.L / t - r0;
    if (out.as_ode() != sl) throw error("operator is not of SL-Heun shape");
    return out;
}

ExactScalar accessory_from_solution(const ExactScalar& theta1, const ExactScalar& theta2,
                                    const ExactScalar& theta3, const ExactScalar& theta4,
                                    const ExactScalar& t,
                                    const std::vector<ExactScalar>& series) {
    if (series.size() < 3) throw error("series must carry coefficients up to order 2");
    const ExactScalar& c0 = series[0];
    const ExactScalar& c1 = series[1];
    const ExactScalar& c2 = series[2];
    if (c0.is_zero()) throw error("series must have a nonzero constant term");
    ExactScalar one(1), half(Rational(1, 2));
    // multiply the operator by D = z(z-1)(z-t); the z^0 and z^1 coefficients
    // of D y'' + (D p1) y' + (th41 th42 z - q) y are linear in q.
    ExactScalar E0 = t * (one - theta2);
    ExactScalar E1 = -((one - theta1) + (one + t) * (one - theta2) + t * (one - theta3));
    ExactScalar sum = theta1 + theta2 + theta3;
    ExactScalar th41 = -half * (sum - ExactScalar(2) + theta4);
    ExactScalar th42 = -half * (sum - ExactScalar(2) - theta4);
    ExactScalar q = E0 * c1 / c0;
    // order-1 coefficient must vanish as well
    ExactScalar eq1 = ExactScalar(2) * t * c2 + E0 * ExactScalar(2) * c2 + E1 * c1 +
                      th41 * th42 * c0 - q * c1;
    if (!eq1.is_zero()) throw error("inconsistent series");
    return q;
}

LameEquation heun_to_lame(const HeunEquation& h) {
    ExactScalar half(Rational(1, 2));
    if (h.theta1 != half || h.theta2 != half || h.theta3 != half)
        throw error("not Lame: theta_i != 1/2");
    LameEquation l;
    l.n = h.theta4 - half;
    l.B = ExactScalar(4) * h.q;
    ExactScalar third(Rational(1, 3));
    ExactScalar sigma = (h.t + ExactScalar(1)) * third;
    ExactScalar e1 = h.t - sigma, e2 = -sigma, e3 = ExactScalar(1) - sigma;
    if (e1 == e2 || e1 == e3 || e2 == e3) throw error("degenerate cubic");
    // 4(z-e1)(z-e2)(z-e3) = 4z^3 - g2 z - g3 with sum(e) = 0
    ExactScalar s2 = e1 * e2 + e1 * e3 + e2 * e3;
    ExactScalar s3 = e1 * e2 * e3;
    l.g2 = ExactScalar(-4) * s2;
    l.g3 = ExactScalar(4) * s3;
    return l;
}

std::vector<HeunEquation> lame_to_heun(const LameEquation& l, const FieldSpec& fs) {
    // The shifted singularities obey sigma2(e) = t - (t+1)^2/3 = -g2/4, i.e.
    //   t^2 - t + (1 - 3 g2/4) = 0;
    // each root is validated against sigma3(e) = g3/4.
    ExactScalar one(1), third(Rational(1, 3));
    ExactScalar cterm = one - ExactScalar(Rational(3, 4)) * l.g2;
    ExactScalar disc = one - ExactScalar(4) * cterm;
    auto sq = field_sqrt(disc, FieldSpec::join(fs, disc.field()));
    if (!sq) throw error("cubic does not describe a Heun configuration over the field");
    ExactScalar half(Rational(1, 2));
    std::vector<HeunEquation> out;
    for (int sign : {+1, -1}) {
        ExactScalar t = (one + ExactScalar(sign) * (*sq)) * half;
        if (t == ExactScalar(0) || t == one) continue;
        ExactScalar sigma = (t + one) * third;
        ExactScalar e1 = t - sigma, e2 = -sigma, e3 = one - sigma;
        if (e1 * e2 * e3 * ExactScalar(4) != l.g3) continue;
        out.emplace_back(half, half, half, l.n + half, t, l.B * ExactScalar(Rational(1, 4)));
    }
    if (out.empty()) throw error("cubic does not match the normalized root pattern");
    return out;
}

LinearODE2 lame_operator(const ExactScalar& n, const ExactScalar& B_op, const ExactScalar& g2,
                         const ExactScalar& g3) {
    Poly z = Poly::variable();
    Poly p = z.pow(3) * ExactScalar(4) - z * g2 - Poly(g3);
    RationalFunction p1(p.derivative() * ExactScalar(Rational(1, 2)), p);
    Poly num = z * (n * (n + ExactScalar(1))) + Poly(B_op);
    RationalFunction p2 = RationalFunction(-num, p);
    return {p1, p2};
}

std::pair<ExactScalar, std::vector<ExactScalar>> heun_local_series_exact(
    const HeunEquation& h, const Point& pt, int branch, int order) {
    if (pt.infinite) throw error("expansion point must be finite");
    if (pt.z != ExactScalar(0) && pt.z != ExactScalar(1) && pt.z != h.t)
        throw error("expansion point must be one of 0, 1, t");
    LinearODE2 ode = heun_to_ode(h);
    ExponentPair e = local_exponents(ode, pt);
    ExactScalar rho;
    if (branch == 0)
        rho = e.rho1.is_zero() || e.rho2.is_zero() ? ExactScalar(0) : e.rho1;
    else
        rho = e.rho1.is_zero() ? e.rho2 : (e.rho2.is_zero() ? e.rho1 : e.rho2);
    return {rho, frobenius_series(ode, pt.z, rho, order)};
}

}  // namespace heun
