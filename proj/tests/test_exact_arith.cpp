#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heun/expr.hpp"

using namespace heun;

namespace {

EvalContext plain_ctx() { return EvalContext{}; }

Poly P(const std::string& s) { return parse_poly(s, plain_ctx()); }

EvalContext quad_ctx(const std::string& minpoly) {
    EvalContext ctx;
    ctx.field = parse_field_decl(minpoly);
    return ctx;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(rational_from_string("-16/9") == Rational(-16, 9));
    CHECK(rational_to_string(Rational(-16, 9)) == "-16/9");
    CHECK(rational_from_string("4/6") == Rational(2, 3));
    CHECK(rational_sqrt(Rational(49, 64)).value() == Rational(7, 8));
    CHECK(!rational_sqrt(Rational(2)).has_value());
    CHECK(!rational_sqrt(Rational(-4)).has_value());
}

TEST_CASE("quadratic field arithmetic basics") {
    FieldSpec fs = FieldSpec::quadratic(Rational(-3), Rational(-3));  // t1^2 = -3 t1 - 3
    ExactScalar t1 = ExactScalar::generator(fs);
    CHECK(t1 * t1 == ExactScalar(Rational(-3)) * t1 + ExactScalar(Rational(-3)));
    ExactScalar x = ExactScalar(Rational(2, 3)) + t1 * ExactScalar(Rational(5, 7));
    CHECK(x * x.inverse() == ExactScalar(1));
    CHECK((x.conj() * x).is_rational());  // conj * x is the norm
    CHECK(x * x.conj() == ExactScalar(x.norm()));
    // irreducibility guard
    CHECK_THROWS(FieldSpec::quadratic(Rational(0), Rational(4)));  // x^2 = 4 splits
}

TEST_CASE("mixed extensions are rejected") {
    FieldSpec f1 = FieldSpec::quadratic(Rational(-3), Rational(-3));
    FieldSpec f2 = FieldSpec::quadratic(Rational(0), Rational(-3));
    ExactScalar a = ExactScalar::generator(f1);
    ExactScalar b = ExactScalar::generator(f2);
    CHECK_THROWS(a + b);
    CHECK_THROWS(a * b);
}

TEST_CASE("field square roots") {
    FieldSpec fs = FieldSpec::quadratic(Rational(14, 3), Rational(-9));  // 3z^2-14z+27 roots
    ExactScalar t1 = ExactScalar::generator(fs);
    // (1 + t1)^2 has a square root in the field
    ExactScalar d = (ExactScalar(1) + t1) * (ExactScalar(1) + t1);
    auto s = field_sqrt(d, fs);
    REQUIRE(s.has_value());
    CHECK(*s * *s == d);
    CHECK(!field_sqrt(ExactScalar(2), fs).has_value());
}

TEST_CASE("poly_gcd matches the examples") {
    CHECK(poly_gcd(P("z^2 - 1"), P("z - 1")) == P("z - 1"));
    Poly j1 = P("z*(z^3 - 6*z^2 + 15*z - 12)^3");
    CHECK(poly_gcd(j1, P("3*z^2 - 14*z + 27")) == Poly(1));
    CHECK(poly_gcd(P("z^2 + 3*z + 3"), P("2*z^2 + 6*z + 6")) == P("z^2 + 3*z + 3"));
    CHECK(poly_gcd(Poly(), Poly()) == Poly());
}

TEST_CASE("squarefree decomposition on the catalogue polynomials") {
    Poly a = P("z*(z^3 - 6*z^2 + 15*z - 12)^3");
    auto dec = squarefree_decomposition(a);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == 1);
    CHECK(dec[0].second == P("z"));
    CHECK(dec[1].first == 3);
    CHECK(dec[1].second == P("z^3 - 6*z^2 + 15*z - 12"));

    auto cube = squarefree_decomposition(P("(z+1)^3"));
    REQUIRE(cube.size() == 1);
    CHECK(cube[0].first == 3);
    CHECK(cube[0].second == P("z + 1"));

    auto sf = squarefree_decomposition(P("z^2 + 3*z + 3"));
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].first == 1);

    CHECK_THROWS_WITH(squarefree_decomposition(Poly()), doctest::Contains("zero input"));
}

TEST_CASE("radical") {
    CHECK(radical(P("(z+1)^3")) == P("z + 1"));
    CHECK(radical(P("z*(z^3 - 6*z^2 + 15*z - 12)^3")) == P("z*(z^3 - 6*z^2 + 15*z - 12)"));
    CHECK(radical(P("z^4 + 8*z^3")) == P("z*(z + 8)"));
    CHECK_THROWS(radical(Poly()));
}

TEST_CASE("rational function arithmetic") {
    EvalContext ctx;
    RationalFunction f = parse_ratfunc("(z+1)^3", ctx);
    CHECK(f.derivative() == parse_ratfunc("3*(z+1)^2", ctx));
    RationalFunction inv_z = parse_ratfunc("1/z", ctx);
    CHECK(inv_z.compose(parse_ratfunc("z - 1", ctx)) == parse_ratfunc("1/(z-1)", ctx));
    RationalFunction g = parse_ratfunc("(-z^4 + 2*z^2 - 1)/(4*z^2)", ctx);
    CHECK(g.evaluate(ExactScalar(3)) == ExactScalar(Rational(-16, 9)));
    CHECK_THROWS_WITH(g.evaluate(ExactScalar(0)), doctest::Contains("pole at point"));
    CHECK_THROWS_WITH(f / RationalFunction(), doctest::Contains("division by zero"));
    // reduced form with monic denominator
    CHECK(g.den() == P("z^2"));
    CHECK(g.num() == P("(-z^4 + 2*z^2 - 1)/4"));
}

TEST_CASE("parser round trips and errors") {
    EvalContext ctx = quad_ctx("t1^2 = -3*t1 - 3");
    Poly p = parse_poly("(1/2 - 3/4*t1)*z^2 + t1*z - 7/5", ctx);
    Poly back = parse_poly(poly_to_string(p), ctx);
    CHECK(p == back);
    RationalFunction f(p, parse_poly("3*z^3 - z + 5/7", ctx));
    CHECK(parse_ratfunc(ratfunc_to_string(f), ctx) == f);
    CHECK(parse_field_decl(ctx.field.minpoly_string()) == ctx.field);
    CHECK_THROWS_WITH(parse_poly("z +* 2", plain_ctx()), doctest::Contains("column"));
    CHECK_THROWS_WITH(parse_poly("w + 1", plain_ctx()), doctest::Contains("unknown symbol"));
    CHECK_THROWS(parse_poly("1/z", plain_ctx()));  // not a polynomial
    ExactScalar s = parse_scalar("1/(4*t1)", ctx);
    ExactScalar t1 = ExactScalar::generator(ctx.field);
    CHECK(s * ExactScalar(4) * t1 == ExactScalar(1));
}

TEST_CASE("field declaration parsing") {
    FieldSpec fs = parse_field_decl("t1^2 = 14/3*t1 - 9");
    CHECK(fs.p() == Rational(14, 3));
    CHECK(fs.q() == Rational(-9));
    CHECK_THROWS(parse_field_decl("t1^3 = 1"));
    CHECK_THROWS(parse_field_decl("t1^2 = t1^2 + 1"));
}

namespace {

std::mt19937_64 rng(20240817u);

Rational random_rational() {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 9);
    return rational_of(num(rng), den(rng));
}

ExactScalar random_scalar(const FieldSpec& fs, bool allow_gen) {
    Rational a = random_rational();
    if (!allow_gen) return ExactScalar(a);
    std::uniform_int_distribution<int> coin(0, 2);
    if (coin(rng) == 0) return ExactScalar(a);
    return ExactScalar(a, random_rational(), fs);
}

Poly random_poly(const FieldSpec& fs, int maxdeg, bool allow_gen) {
    std::uniform_int_distribution<int> degd(0, maxdeg);
    int d = degd(rng);
    std::vector<ExactScalar> c;
    for (int i = 0; i <= d; ++i) c.push_back(random_scalar(fs, allow_gen));
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("property: squarefree reconstruction, radical and gcd divisibility") {
    FieldSpec fs = FieldSpec::quadratic(Rational(1), Rational(1));  // t1^2 = t1 + 1
    int with_field = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        bool use_field = iter % 3 == 0;
        with_field += use_field;
        Poly a = random_poly(fs, 4, use_field);
        if (a.is_zero()) continue;
        // build interesting multiplicity structure
        Poly b = random_poly(fs, 2, use_field);
        if (!b.is_zero()) a = a * b * b;

        auto dec = squarefree_decomposition(a);
        Poly rebuilt(a.lc());
        int last_mult = 0;
        for (const auto& [mult, factor] : dec) {
            CHECK(mult > last_mult);  // strictly increasing multiplicities
            last_mult = mult;
            CHECK(factor.lc().is_one());
            CHECK(poly_gcd(factor, factor.derivative()) == Poly(1));
            rebuilt = rebuilt * factor.pow(mult);
        }
        CHECK(rebuilt == a);

        Poly rad = radical(a);
        CHECK(a.divexact(rad * a.lc()) * rad * a.lc() == a);
        CHECK(poly_gcd(rad, rad.derivative()) == Poly(1));

        Poly c = random_poly(fs, 3, use_field);
        if (c.is_zero()) continue;
        Poly g = poly_gcd(a, c);
        CHECK((Poly::divmod(a, g).second.is_zero()));
        CHECK((Poly::divmod(c, g).second.is_zero()));
        CHECK(poly_gcd(a.divexact(g), c.divexact(g)) == Poly(1));
    }
    CHECK(with_field > 100);
}

TEST_CASE("property: field inverses on 1000 random pairs") {
    FieldSpec fs = FieldSpec::quadratic(Rational(-3), Rational(-3));
    int done = 0;
    while (done < 1000) {
        ExactScalar x = random_scalar(fs, true);
        ExactScalar y = random_scalar(fs, true);
        if (x.is_zero() || y.is_zero()) continue;
        CHECK((x * y) * x.inverse() == y);
        ++done;
    }
}
