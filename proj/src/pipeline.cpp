#include "heun/pipeline.hpp"

#include <algorithm>

namespace heun {

LinearODE2 belyi_pullback_operator(const BelyiMap& m, const HypergeometricParams& p) {
    const ExactScalar &a = p.alpha, &b = p.beta, &g = p.gamma;
    RationalFunction L1 = dlog(m.j1);
    RationalFunction LW = dlog(m.w());
    RationalFunction LL = dlog(m.lambda);
    RationalFunction q1 = LL + L1 * RationalFunction(g - ExactScalar(1)) +
                          LW * RationalFunction(a + b - g);
    RationalFunction q2 = L1 * LW * RationalFunction(a * b);
    if (m.M > 0) {
        RationalFunction L2 = dlog(m.j2);
        q1 += L2 * RationalFunction(a - b);
        RationalFunction j2pp(m.j2.derivative().derivative(), m.j2);
        q2 += (L2 * LL + L1 * L2 * RationalFunction(g - b - ExactScalar(1)) +
               L2 * LW * RationalFunction(a - g) + j2pp - L2 * L2) *
              RationalFunction(a);
    }
    return {q1, q2};
}

LinearODE2 belyi_pullback_oracle(const BelyiMap& m, const HypergeometricParams& p) {
    LinearODE2 gauss = hypergeometric_ode(p.alpha, p.beta, p.gamma);
    LinearODE2 pulled = pullback(gauss, m.as_ratfunc());
    if (m.M == 0) return pulled;
    RationalFunction u = dlog(m.j2) * RationalFunction(-p.alpha);
    return gauge(pulled, GaugeFactor{u});
}

RiemannScheme belyi_pullback_scheme(const BelyiMap& m, const HypergeometricParams& p,
                                    const FieldSpec& fs_in) {
    const ExactScalar &a = p.alpha, &b = p.beta, &g = p.gamma;
    FieldSpec fs = FieldSpec::join(
        fs_in, FieldSpec::join(FieldSpec::join(m.j1.field(), m.j2.field()),
                               FieldSpec::join(a.field(), FieldSpec::join(b.field(), g.field()))));
    RiemannScheme scheme;
    auto add = [&](const Poly& poly, Fiber fiber, const ExactScalar& slope) {
        for (const auto& [mult, factor] : squarefree_decomposition(poly)) {
            SchemeRow row;
            row.fiber = fiber;
            row.index = mult;
            row.factor = factor;
            row.roots = split_roots(factor, FieldSpec::join(fs, factor.field()));
            row.exp1 = ExactScalar(0);
            row.exp2 = slope * ExactScalar(mult);
            scheme.rows.push_back(std::move(row));
        }
    };
    add(m.j1, Fiber::zero, ExactScalar(1) - g);
    add(m.w(), Fiber::one, g - a - b);
    if (m.M > 0) add(m.j2, Fiber::infinity, b - a);
    SchemeRow inf;
    inf.fiber = Fiber::infinity;
    inf.index = m.N - m.M;
    inf.at_infinity = true;
    inf.exp1 = a * ExactScalar(m.N);
    inf.exp2 = b * ExactScalar(m.N - m.M) + a * ExactScalar(m.M);
    scheme.rows.push_back(std::move(inf));
    return scheme;
}

std::vector<HeunCandidate> belyi_pullback_heun_orbit(const BelyiMap& m,
                                                     const HypergeometricParams& p,
                                                     const FieldSpec& fs) {
    return heun_orbit(belyi_pullback_operator(m, p), fs);
}

HeunEquation belyi_pullback_to_heun(const BelyiMap& m, const HypergeometricParams& p,
                                    IndexConstraint A, IndexConstraint B, IndexConstraint C,
                                    const FieldSpec& fs) {
    RamificationData ram = ramification_data(m);
    if (!check_index_constraints(ram, A, B, C))
        throw error("index constraints fail on the ramification data");
    std::vector<SingularPoint> pts = singular_points(m, A, B, C, fs);
    long count = 0;
    for (const auto& sp : pts) count += sp.at_infinity ? 1 : sp.factor.degree();
    if (count != 4) throw error("singular count != 4");

    LinearODE2 op = belyi_pullback_operator(m, p);
    HeunCandidate cand = ode_to_heun_candidate(op, fs);
    if (!cand.source_inf.infinite) return cand.heun;

    // Label theta4 so that theta41 is the image of the alpha*N exponent.
    ExactScalar alphaN = p.alpha * ExactScalar(m.N);
    ExactScalar th41_target = alphaN - cand.inf_shift;
    if (cand.heun.theta41() == th41_target) return cand.heun;
    HeunEquation flipped = cand.heun.theta4_flipped();
    if (flipped.theta41() == th41_target) return flipped;
    return cand.heun;  // degenerate labelling (equal exponents)
}

}  // namespace heun
