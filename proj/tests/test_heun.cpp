#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "heun/expr.hpp"
#include "heun/heun_eq.hpp"

using namespace heun;

namespace {

RationalFunction RF(const std::string& s) { return parse_ratfunc(s, EvalContext{}); }

ExactScalar S(const std::string& s, const FieldSpec& fs = FieldSpec()) {
    EvalContext ctx;
    ctx.field = fs;
    return parse_scalar(s, ctx);
}

}  // namespace

TEST_CASE("theta labels satisfy the defining identities") {
    HeunEquation h(S("1/5"), S("1/7"), S("2/9"), S("3/11"), S("3"), S("4/7"));
    CHECK(h.theta42() - h.theta41() == h.theta4);
    CHECK(h.theta41() + h.theta42() ==
          ExactScalar(2) - h.theta1 - h.theta2 - h.theta3);
    CHECK_THROWS_WITH(HeunEquation(S("1"), S("1"), S("1"), S("1"), S("0"), S("0")),
                      doctest::Contains("avoid 0 and 1"));
}

TEST_CASE("normal-form operator") {
    // fully degenerate family member: all thetas zero, q = 0, t = -1
    HeunEquation h(S("0"), S("0"), S("0"), S("0"), S("-1"), S("0"));
    LinearODE2 ode = heun_to_ode(h);
    CHECK(ode.p1 == RF("1/(z+1) + 1/z + 1/(z-1)"));
    CHECK(ode.p2 == RF("z/(z*(z-1)*(z+1))"));  // theta41*theta42 = 1

    // exponents: (0, theta_i) at the finite points, (th41, th42) at infinity
    HeunEquation g(S("1/5"), S("1/7"), S("2/9"), S("3/11"), S("3"), S("4/7"));
    LinearODE2 gop = heun_to_ode(g);
    ExponentPair et = local_exponents(gop, Point::finite(g.t));
    CHECK(et.rho1 == ExactScalar(0));
    CHECK(et.rho2 == g.theta1);
    ExponentPair e0 = local_exponents(gop, Point::finite(ExactScalar(0)));
    CHECK(e0.rho2 == g.theta2);
    ExponentPair e1 = local_exponents(gop, Point::finite(ExactScalar(1)));
    CHECK(e1.rho2 == g.theta3);
    ExponentPair ei = local_exponents(gop, Point::infinity());
    CHECK(ei.rho1 + ei.rho2 == g.theta41() + g.theta42());
    CHECK((ei.rho2 - ei.rho1 == g.theta4 || ei.rho1 - ei.rho2 == g.theta4));
    CHECK(fuchs_residue_check(gop));
}

TEST_CASE("normalization round trip") {
    HeunEquation h(S("1/5"), S("1/7"), S("2/9"), S("3/11"), S("3"), S("4/7"));
    LinearODE2 ode = heun_to_ode(h);
    auto orbit = heun_orbit(ode);
    CHECK(orbit.size() == 24);
    bool found = false;
    for (const auto& cand : orbit)
        if (cand.heun == h || cand.heun == h.theta4_flipped()) found = true;
    CHECK(found);
    // the canonical representative is a fixed point of renormalization
    HeunEquation canon = ode_to_heun(ode);
    CHECK(ode_to_heun(heun_to_ode(canon)) == canon);

    CHECK_THROWS_WITH(ode_to_heun(hypergeometric_ode(S("1/5"), S("1/7"), S("2/3"))),
                      doctest::Contains("wrong singularity count"));
    // apparent singularity at 0 (solutions z, z^2 near 0)
    LinearODE2 app{RF("-2/z"), RF("2/z^2")};
    CHECK_THROWS(ode_to_heun(app));
}

TEST_CASE("SL-Heun coefficients, both routes") {
    // all angular parameters 1/2: a1 = a2 = a3 = 3/16
    HeunEquation lame_like(S("1/2"), S("1/2"), S("1/2"), S("2/7"), S("2"), S("1/5"));
    SLHeun sl = heun_to_sl(lame_like);
    CHECK(sl.a1 == S("3/16"));
    CHECK(sl.a2 == S("3/16"));
    CHECK(sl.a3 == S("3/16"));
    LinearODE2 direct = to_sl_form(heun_to_ode(lame_like));
    CHECK(sl.as_ode() == direct);
    SLHeun extracted = sl_coefficients(direct, lame_like.t);
    CHECK(extracted.a1 == sl.a1);
    CHECK(extracted.a2 == sl.a2);
    CHECK(extracted.a3 == sl.a3);
    CHECK(extracted.a4 == sl.a4);
    CHECK(extracted.L == sl.L);

    // catalogue member with a quadratic singularity: t1^2 + 3 t1 + 3 = 0
    FieldSpec fs = parse_field_decl("t1^2 = -3*t1 - 3");
    ExactScalar t = S("t1^2/3", fs);
    ExactScalar q = S("-1/48*t1", fs);  // (1/12)(3a-1)(3a-2) t1 at a = 1/2
    HeunEquation row33(S("1/2"), S("1/2"), S("1/2"), S("0"), t, q);
    SLHeun sl33 = heun_to_sl(row33);
    LinearODE2 direct33 = to_sl_form(heun_to_ode(row33));
    CHECK(sl33.as_ode() == direct33);
    SLHeun ex33 = sl_coefficients(direct33, t);
    CHECK(ex33.a4 == sl33.a4);
    CHECK(ex33.L == sl33.L);

    // with theta_1..3 = 1 the trailing term drops out of L
    HeunEquation ones(S("1"), S("1"), S("1"), S("1/3"), S("5"), S("2/7"));
    SLHeun slo = heun_to_sl(ones);
    CHECK(slo.L == ones.t * ones.theta41() * ones.theta42() - ones.q);
}

TEST_CASE("accessory parameter from a local solution") {
    // catalogue family, one-parameter member at a = 1/2: q = -3a + 2 = 1/2, t = 9
    HeunEquation row25(S("1/3"), S("2/3"), S("0"), S("0"), S("9"), S("1/2"));
    auto [rho, series] = heun_local_series_exact(row25, Point::finite(ExactScalar(0)), 0, 6);
    CHECK(rho == ExactScalar(0));
    ExactScalar q = accessory_from_solution(row25.theta1, row25.theta2, row25.theta3,
                                            row25.theta4, row25.t, series);
    CHECK(q == S("1/2"));

    // invariance under scaling the series
    std::vector<ExactScalar> scaled = series;
    for (auto& c : scaled) c = c * S("7/3");
    CHECK(accessory_from_solution(row25.theta1, row25.theta2, row25.theta3, row25.theta4,
                                  row25.t, scaled) == S("1/2"));

    // a perturbed series is rejected
    std::vector<ExactScalar> broken = series;
    broken[2] += ExactScalar(1);
    CHECK_THROWS_WITH(accessory_from_solution(row25.theta1, row25.theta2, row25.theta3,
                                              row25.theta4, row25.t, broken),
                      doctest::Contains("inconsistent series"));

    // exact polynomial solution: y = 1 solves the equation with q = 0 and
    // theta41*theta42 = 0 (take theta4 = 2 - theta1 - theta2 - theta3)
    HeunEquation poly1(S("1/5"), S("1/7"), S("1/9"), S("2 - 1/5 - 1/7 - 1/9"), S("4"),
                       S("0"));
    CHECK(poly1.theta41() * poly1.theta42() == ExactScalar(0));
    std::vector<ExactScalar> one = {ExactScalar(1), ExactScalar(0), ExactScalar(0)};
    CHECK(accessory_from_solution(poly1.theta1, poly1.theta2, poly1.theta3, poly1.theta4,
                                  poly1.t, one) == ExactScalar(0));
}

TEST_CASE("local series requires a fresh exponent branch") {
    HeunEquation h(S("1/5"), S("1"), S("2/9"), S("3/11"), S("3"), S("4/7"));
    // theta2 = 1: exponents (0, 1) at the origin; the zero branch resonates
    CHECK_THROWS_WITH(heun_local_series_exact(h, Point::finite(ExactScalar(0)), 0, 4),
                      doctest::Contains("resonance"));
    auto [rho, c] = heun_local_series_exact(h, Point::finite(ExactScalar(0)), 1, 4);
    CHECK(rho == ExactScalar(1));
    CHECK(c[0] == ExactScalar(1));
}

TEST_CASE("lame specialization") {
    // two-parameter member with q = 0, t = -1: n = theta4 - 1/2, B = 0,
    // cubic 4 z (z-1) (z+1) => g2 = 4, g3 = 0
    HeunEquation h(S("1/2"), S("1/2"), S("1/2"), S("1/3"), S("-1"), S("0"));
    LameEquation l = heun_to_lame(h);
    CHECK(l.n == S("-1/6"));
    CHECK(l.B == S("0"));
    CHECK(l.g2 == S("4"));
    CHECK(l.g3 == S("0"));

    // centroid-zero invariant on a generic member
    HeunEquation g(S("1/2"), S("1/2"), S("1/2"), S("2/7"), S("5"), S("3/11"));
    LameEquation lg = heun_to_lame(g);
    ExactScalar sigma = (g.t + ExactScalar(1)) / ExactScalar(3);
    ExactScalar e1 = g.t - sigma, e2 = -sigma, e3 = ExactScalar(1) - sigma;
    CHECK(e1 + e2 + e3 == ExactScalar(0));
    CHECK(ExactScalar(4) * (e1 * e2 + e1 * e3 + e2 * e3) == -lg.g2);

    // label round trip
    auto cands = lame_to_heun(lg, FieldSpec());
    bool found = false;
    for (const auto& cand : cands)
        if (cand == g) found = true;
    CHECK(found);

    // operator-level identity: the standard form carries the accessory
    // B + n(n+1)(t+1)/3 once the singularities are recentred
    ExactScalar shift = (g.t + ExactScalar(1)) / ExactScalar(3);
    Mobius sh(ExactScalar(1), shift, ExactScalar(0), ExactScalar(1));
    LinearODE2 moved = mobius_transform(heun_to_ode(g), sh);
    ExactScalar B_op = lg.B + lg.n * (lg.n + ExactScalar(1)) * (g.t + ExactScalar(1)) /
                                 ExactScalar(3);
    CHECK(moved == lame_operator(lg.n, B_op, lg.g2, lg.g3));

    CHECK_THROWS_WITH(heun_to_lame(HeunEquation(S("1/3"), S("1/2"), S("1/2"), S("1/3"),
                                                S("-1"), S("0"))),
                      doctest::Contains("not Lame"));
}
