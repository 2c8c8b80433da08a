#include "novikov/linear_algebra.hpp"
#include "novikov/puiseux.hpp"
#include "novikov/sampling.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace novikov;

namespace {

RationalFunction rf(const char* text) { return *simplify(parse_expr(text)).as_rational_function(); }

}  // namespace

TEST_SUITE("exact-arith") {

TEST_CASE("rationals and Gaussian rationals") {
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);

    GaussRational i = GaussRational::i();
    CHECK(i * i == GaussRational(-1));
    GaussRational z(Rational(3), Rational(4));
    CHECK(z * z.conj() == GaussRational(25));
    CHECK(z * z.inverse() == GaussRational(1));
    CHECK_THROWS_AS(GaussRational().inverse(), std::domain_error);
    CHECK(z.pow(-2) * z.pow(2) == GaussRational(1));
}

TEST_CASE("polynomial gcd and exact division") {
    Symbol x("x");
    Polynomial px(x);
    Polynomial a = (px - Polynomial(1)) * (px + Polynomial(2));
    Polynomial b = (px - Polynomial(1)) * (px + Polynomial(3));
    CHECK(gcd(a, b) == px - Polynomial(1));
    CHECK(a.divide_exact(px + Polynomial(2)) == px - Polynomial(1));
    CHECK_FALSE(a.divide_exact(px + Polynomial(5)).has_value());
    CHECK(gcd(Polynomial(), Polynomial()).is_zero());
}

TEST_CASE("rational functions are canonical") {
    CHECK(rf("(x^2 - 1)/(x - 1)") == rf("x + 1"));
    CHECK(rf("1/(2*x)") == rf("(1/2)/x"));
    CHECK(rf("(x + i)*(x - i)") == rf("x^2 + 1"));
    CHECK_THROWS_AS(simplify(parse_expr("1/(x - x)")), std::domain_error);
}

TEST_CASE("limits at t = 0") {
    Symbol t = t_symbol();
    RationalFunction f = rf("(t^2 + 3*t)/(t*(1 + t))");
    CHECK(f.regular_at_zero(t));
    CHECK(f.value_at_zero(t) == RationalFunction(3));
    RationalFunction g = rf("alpha/t + 1");
    CHECK_FALSE(g.regular_at_zero(t));
    CHECK(rf("t^3/(t + t^2)").valuation(t) == 2);
    CHECK(rf("alpha*t + beta").value_at_zero(t) == rf("beta"));
}

TEST_CASE("expression text roundtrips") {
    for (const char* text : {"alpha^2 - 3*alpha + 1/2", "(1 + i)*t/(t - 2)", "sqrt(1 + t)", "root(3, alpha)*t",
                             "root(2, t)/t^2"}) {
        ScalarExpr e = simplify(parse_expr(text));
        CHECK(simplify(parse_expr(e.to_string())) == e);
    }
    CHECK_THROWS_AS(parse_expr("1 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expr("2**3"), std::invalid_argument);
}

TEST_CASE("radicals") {
    ScalarExpr r = root(2, parse_expr("x"));
    CHECK(simplify(r * r) == parse_expr("x"));
    CHECK(r.has_roots());
    CHECK_FALSE(r.as_rational_function().has_value());
    CHECK_THROWS_AS(is_zero(r, ZeroMode::exact()), std::domain_error);
    Assignment at{{Symbol("x"), GaussRational(2)}};
    CHECK(is_zero(simplify(r * r - parse_expr("x")), ZeroMode::exact(), at));
    CHECK(is_zero(r - parse_expr("sqrt(2)"), ZeroMode::numeric(60), at));
    CHECK_FALSE(is_zero(r - parse_expr("7/5"), ZeroMode::numeric(60), at));
}

TEST_CASE("evaluation against MPFR directly") {
    int digits = 80;
    mpfr_prec_t prec = precision_for_digits(digits);
    BigComplex v = eval(parse_expr("sqrt(2) + 1/3"), Assignment{}, digits);
    mpfr_t ref;
    mpfr_init2(ref, prec);
    mpfr_sqrt_ui(ref, 2, MPFR_RNDN);
    mpfr_t third;
    mpfr_init2(third, prec);
    mpfr_set_ui(third, 1, MPFR_RNDN);
    mpfr_div_ui(third, third, 3, MPFR_RNDN);
    mpfr_add(ref, ref, third, MPFR_RNDN);
    mpfr_sub(ref, ref, v.re().get(), MPFR_RNDN);
    CHECK(mpfr_get_d(ref, MPFR_RNDN) == doctest::Approx(0.0).epsilon(1e-70));
    CHECK(std::abs(mpfr_get_d(ref, MPFR_RNDN)) < 1e-75);
    CHECK(v.im().is_zero());
    mpfr_clear(ref);
    mpfr_clear(third);

    BigComplex m4(prec, GaussRational(-4));
    BigComplex r = m4.principal_root(2);
    CHECK(r.re().log10_abs() < -70);
    CHECK((r.im() - BigFloat(prec, 2L)).log10_abs() < -70);

    CHECK_THROWS_AS(eval(parse_expr("alpha"), Assignment{}, 30), std::domain_error);
    CHECK_THROWS_AS(eval(parse_expr("1/(x - 1)"), Assignment{{Symbol("x"), GaussRational(1)}}, 30),
                    std::domain_error);
}

TEST_CASE("Puiseux normalization") {
    PuiseuxExpr p = puiseux_normalize(parse_expr("sqrt(t)*(1 + t) + alpha"));
    REQUIRE(p.terms().size() == 3);
    CHECK(p.terms()[0].exponent == 0);
    CHECK(p.terms()[1].exponent == Rational(1, 2));
    CHECK(p.terms()[2].exponent == Rational(3, 2));
    CHECK(p.valuation() == Rational(0));
    PuiseuxExpr q = puiseux_normalize(parse_expr("root(3, t)/t"));
    CHECK(q.valuation() == Rational(-2, 3));
    CHECK((p + (-p)).is_zero());
    CHECK((q * q).valuation() == Rational(-4, 3));
    CHECK_THROWS_AS(puiseux_normalize(parse_expr("1/(1 + sqrt(t))")), std::domain_error);
}

TEST_CASE("estimated valuation") {
    Symbol t = t_symbol();
    CHECK(estimated_valuation(parse_expr("t^2*(1 + t)"), t) == Rational(2));
    CHECK(estimated_valuation(parse_expr("sqrt(t)/t^3"), t) == Rational(-5, 2));
    CHECK_FALSE(estimated_valuation(parse_expr("0"), t).has_value());
}

TEST_CASE("linear algebra agrees with a dense rational oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 2 + trial % 4, cols = 3 + trial % 3;
        RFMatrix m(rows, RFVector(cols));
        oracle::Mat q(rows, std::vector<oracle::Q>(cols));
        std::uniform_int_distribution<int> zero(0, 2);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                oracle::Q v = zero(rng) == 0 ? oracle::Q(0) : oracle::small_rational(rng);
                q[i][j] = v;
                m[i][j] = RationalFunction(GaussRational(Rational(v)));
            }
        }
        if (trial % 5 == 0 && rows > 1) {
            for (int j = 0; j < cols; ++j) {
                m[rows - 1][j] = m[0][j] * RationalFunction(3);
                q[rows - 1][j] = q[0][j] * 3;
            }
        }
        std::size_t r = rank(m, cols);
        CHECK(static_cast<int>(r) == oracle::rank(q));
        RFMatrix ns = nullspace(m, cols);
        CHECK(ns.size() == cols - r);
        for (const auto& v : ns) {
            for (const auto& row : m) {
                RationalFunction s;
                for (int j = 0; j < cols; ++j) s += row[j] * v[j];
                CHECK(s.is_zero());
            }
        }
    }
}

TEST_CASE("symbolic inverse") {
    RFMatrix m = {{rf("t"), rf("1")}, {rf("alpha"), rf("t^2")}};
    RFMatrix inv = inverse(m);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            RationalFunction s;
            for (int k = 0; k < 2; ++k) s += m[i][k] * inv[k][j];
            CHECK(s == RationalFunction(i == j ? 1 : 0));
        }
    }
    CHECK(determinant(m) == rf("t^3 - alpha"));
    CHECK_THROWS_AS(inverse(RFMatrix{{rf("t"), rf("t^2")}, {rf("1"), rf("t")}}), std::domain_error);
    CHECK(same_span({{rf("1"), rf("t")}}, {{rf("2/t"), rf("2")}}, 2));
    CHECK(intersection({{rf("1"), rf("0"), rf("0")}, {rf("0"), rf("1"), rf("0")}},
                       {{rf("1"), rf("1"), rf("1")}, {rf("0"), rf("0"), rf("1")}}, 3)
              .size() == 1);
}

TEST_CASE("sampling avoids excluded values") {
    std::mt19937_64 rng(3);
    Symbol a("alpha");
    std::vector<ScalarExpr> nonzero = {parse_expr("alpha"), parse_expr("alpha - 1"), parse_expr("alpha + 1")};
    for (int k = 0; k < 50; ++k) {
        Assignment at = sample_assignment({a}, nonzero, rng);
        const GaussRational& v = at.at(a);
        CHECK_FALSE(v.is_zero());
        CHECK_FALSE(v == GaussRational(1));
        CHECK_FALSE(v == GaussRational(-1));
    }
    std::mt19937_64 r1(11), r2(11);
    CHECK(sample_assignment({a}, nonzero, r1) == sample_assignment({a}, nonzero, r2));
}

}
