#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heun/expr.hpp"
#include "heun/pipeline.hpp"

using namespace heun;

namespace {

Poly P(const std::string& s, const EvalContext& ctx = EvalContext{}) {
    return parse_poly(s, ctx);
}

BelyiMap degree10_map() {
    return make_belyi(P("-4/27*z*(z^3 - 6*z^2 + 15*z - 12)^3"), P("3*z^2 - 14*z + 27"));
}

HypergeometricParams catalogue_params(const Rational& a) {
    ExactScalar av(a);
    return {ExactScalar(Rational(1, 3)) - av / ExactScalar(2),
            av / ExactScalar(2) - ExactScalar(Rational(1, 6)),
            ExactScalar(Rational(2, 3))};
}

ExactScalar S(const std::string& s, const FieldSpec& fs = FieldSpec()) {
    EvalContext ctx;
    ctx.field = fs;
    return parse_scalar(s, ctx);
}

}  // namespace

TEST_CASE("closed formulas agree with the composition route") {
    BelyiMap m = degree10_map();
    for (Rational a : {Rational(1, 5), Rational(1, 2), Rational(2)}) {
        HypergeometricParams p = catalogue_params(a);
        CHECK(belyi_pullback_operator(m, p) == belyi_pullback_oracle(m, p));
    }

    // trivial cover j = z reduces to the Gauss operator itself
    BelyiMap triv = make_belyi(P("z"), P("1"));
    HypergeometricParams p{S("1/5"), S("1/7"), S("2/3")};
    LinearODE2 op = belyi_pullback_operator(triv, p);
    CHECK(op == hypergeometric_ode(p.alpha, p.beta, p.gamma));
    CHECK(op == belyi_pullback_oracle(triv, p));

    BelyiMap sq = make_belyi(P("z^2"), P("1"));
    CHECK(belyi_pullback_operator(sq, p) == belyi_pullback_oracle(sq, p));
}

TEST_CASE("the degree-10 pullback reproduces the printed normalized operator") {
    BelyiMap m = degree10_map();
    for (Rational a : {Rational(1, 5), Rational(1, 2), Rational(2)}) {
        EvalContext ctx;
        ctx.params["a"] = ExactScalar(a);
        LinearODE2 printed{
            parse_ratfunc("(3/2 - a)*(6*z - 14)/(3*z^2 - 14*z + 27) + 2/(3*z)", ctx),
            parse_ratfunc(
                "(3*(9*a-2)*(-15*a+10)*z + 2*(3*a-2)*(96*a-25))/(9*z*(3*z^2 - 14*z + 27))",
                ctx)};
        CHECK(belyi_pullback_operator(m, catalogue_params(a)) == printed);
    }
}

TEST_CASE("predicted scheme matches the operator exponents") {
    FieldSpec fs = parse_field_decl("t1^2 = 14/3*t1 - 9");
    BelyiMap m = degree10_map();
    HypergeometricParams p = catalogue_params(Rational(1, 5));
    LinearODE2 op = belyi_pullback_operator(m, p);
    RiemannScheme scheme = belyi_pullback_scheme(m, p, fs);

    int checked_points = 0;
    for (const auto& row : scheme.rows) {
        if (row.at_infinity) {
            ExponentPair e = local_exponents(op, Point::infinity());
            ExactScalar lo = row.exp1, hi = row.exp2;
            if (ExactScalar::canonical_less(hi, lo)) std::swap(lo, hi);
            CHECK(e.rho1 == lo);
            CHECK(e.rho2 == hi);
            ++checked_points;
            continue;
        }
        if (row.exp2 == ExactScalar(1)) {
            // removable class: no pole of the reduced operator on this factor
            CHECK(poly_gcd(op.p1.den(), row.factor).degree() == 0);
            CHECK(poly_gcd(op.p2.den(), row.factor).degree() == 0);
            continue;
        }
        if (!row.roots) continue;
        for (const auto& r : *row.roots) {
            ExponentPair e = local_exponents(op, Point::finite(r));
            ExactScalar lo = row.exp1, hi = row.exp2;
            if (ExactScalar::canonical_less(hi, lo)) std::swap(lo, hi);
            CHECK(e.rho1 == lo);
            CHECK(e.rho2 == hi);
            ++checked_points;
        }
    }
    CHECK(checked_points == 4);

    // scheme at infinity: (alpha N, beta (N-M) + M alpha) = (10a, 8b + 2a)
    const SchemeRow& inf = scheme.rows.back();
    CHECK(inf.at_infinity);
    CHECK(inf.exp1 == p.alpha * ExactScalar(10));
    CHECK(inf.exp2 == p.beta * ExactScalar(8) + p.alpha * ExactScalar(2));
}

TEST_CASE("cube family normalizes to the two-parameter values") {
    // j = (z+1)^3 with gamma = 2/3: theta_i = 2/3 - (alpha+beta),
    // theta41 = 3 alpha, theta42 = 3 beta, t = t1^2/3, q = -3 alpha beta t1
    FieldSpec fs = parse_field_decl("t1^2 = -3*t1 - 3");
    BelyiMap cube = make_belyi(P("(z+1)^3"), P("1"));
    HypergeometricParams p{S("1/3"), S("1/5"), S("2/3")};
    HeunEquation h = belyi_pullback_to_heun(cube, p, 3, std::nullopt, std::nullopt, fs);
    CHECK(h.theta1 == S("2/15"));
    CHECK(h.theta2 == S("2/15"));
    CHECK(h.theta3 == S("2/15"));
    CHECK(h.theta41() == S("1"));    // 3 alpha
    CHECK(h.theta42() == S("3/5"));  // 3 beta
    CHECK(h.t == S("t1^2/3", fs));
    CHECK(h.q == S("-3*(1/3)*(1/5)*t1", fs));

    // without the fiber-0 constraint five singular points survive
    CHECK_THROWS_WITH(
        belyi_pullback_to_heun(cube, p, std::nullopt, std::nullopt, std::nullopt, fs),
        doctest::Contains("singular count != 4"));
}

TEST_CASE("quartic family with the half-shift relation") {
    // j = (-z^4 + 2z^2 - 1)/(4z^2), beta = gamma - alpha - 1/2:
    // theta = (2(1-g), 2g-4a-1, 2(1-g)), t = -1, q = 0, th41 = 4a, th42 = 2g-1
    BelyiMap m = make_belyi(P("-z^4 + 2*z^2 - 1"), P("4*z^2"));
    ExactScalar alpha = S("1/5"), gamma = S("3/4");
    ExactScalar beta = gamma - alpha - S("1/2");
    HeunEquation h =
        belyi_pullback_to_heun(m, {alpha, beta, gamma}, std::nullopt, 2, std::nullopt);
    CHECK(h.t == S("-1"));
    CHECK(h.q == S("0"));
    CHECK(h.theta1 == S("1/2"));    // 2(1-gamma)
    CHECK(h.theta2 == S("-3/10"));  // 2 gamma - 4 alpha - 1
    CHECK(h.theta3 == S("1/2"));
    CHECK(h.theta41() == S("4/5"));  // 4 alpha
    CHECK(h.theta42() == S("1/2"));  // 2 gamma - 1
}

TEST_CASE("produced operators satisfy the residue identity and are apparent-free") {
    FieldSpec fs = parse_field_decl("t1^2 = 14/3*t1 - 9");
    BelyiMap m = degree10_map();
    HypergeometricParams p = catalogue_params(Rational(1, 5));
    LinearODE2 op = belyi_pullback_operator(m, p);
    CHECK(fuchs_residue_check(op, fs));
    std::vector<Point> apparent;
    std::vector<Point> sing = true_singular_support(op, fs, &apparent);
    CHECK(apparent.empty());
    CHECK(sing.size() == 4);
}
