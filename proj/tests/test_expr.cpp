#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curveasym/errors.hpp"
#include "curveasym/expr.hpp"

#include <cmath>
#include <random>

using curveasym::Expr;

TEST_CASE("basic evaluation") {
    CHECK(Expr::parse("exp(2*t)").eval(0.0) == doctest::Approx(1.0));
    CHECK(Expr::parse("ln(t)").eval(M_E) == doctest::Approx(1.0));
    CHECK(Expr::parse("arccot(1)").eval(0.0) == doctest::Approx(M_PI / 4.0));
    CHECK(Expr::parse("arccot(t)").eval(-1.0) == doctest::Approx(3.0 * M_PI / 4.0));
    CHECK(Expr::parse("-(-t)^1.5").eval(-4.0) == doctest::Approx(-8.0));
    CHECK(Expr::parse("pi+e").eval(0.0) == doctest::Approx(M_PI + M_E));
    CHECK(Expr::parse("pow(t,3)").eval(2.0) == doctest::Approx(8.0));
}

TEST_CASE("precedence and associativity") {
    CHECK(Expr::parse("2+3*4").eval(0.0) == doctest::Approx(14.0));
    CHECK(Expr::parse("2^3^2").eval(0.0) == doctest::Approx(512.0));  // right assoc
    CHECK(Expr::parse("-t^2").eval(3.0) == doctest::Approx(-9.0));   // ^ above unary -
    CHECK(Expr::parse("(2+3)*4").eval(0.0) == doctest::Approx(20.0));
    CHECK(Expr::parse("2-3-4").eval(0.0) == doctest::Approx(-5.0));
}

TEST_CASE("domain errors, never silent non-finite") {
    CHECK_THROWS_AS(Expr::parse("ln(t)").eval(0.0), curveasym::eval_error);
    CHECK_THROWS_AS(Expr::parse("1/t").eval(0.0), curveasym::eval_error);
    CHECK_THROWS_AS(Expr::parse("sqrt(t)").eval(-1.0), curveasym::eval_error);
    CHECK_THROWS_AS(Expr::parse("t^t").eval(-0.5), curveasym::eval_error);
    CHECK_THROWS_AS(Expr::parse("exp(t)").eval(1e9), curveasym::eval_error);
}

TEST_CASE("syntax errors carry byte offsets") {
    CHECK_THROWS_AS(Expr::parse("2+*3"), curveasym::parse_error);
    CHECK_THROWS_AS(Expr::parse("foo(t)"), curveasym::parse_error);
    CHECK_THROWS_AS(Expr::parse("2 t"), curveasym::parse_error);  // no implicit mul
    CHECK_THROWS_AS(Expr::parse("(1+2"), curveasym::parse_error);
    try {
        Expr::parse("1+@");
        FAIL("expected parse_error");
    } catch (const curveasym::parse_error& e) {
        CHECK(e.offset == 2);
    }
}

TEST_CASE("parse-print-parse idempotence") {
    const char* samples[] = {
        "exp(2*t)", "-(-t)^1.5", "t^2-3*t+1", "sin(t)/cos(t)",
        "arccot(t^2)+pi", "pow(abs(t),0.5)", "1/(1+t^2)",
    };
    for (const char* s : samples) {
        Expr e = Expr::parse(s);
        Expr r = Expr::parse(e.to_string());
        CHECK(e == r);
        CHECK(e.to_string() == r.to_string());
    }
}

TEST_CASE("eval is deterministic and pure") {
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> dt(0.1, 3.0);
    Expr e = Expr::parse("sin(t)*exp(t/2)+t^3");
    for (int i = 0; i < 1000; i++) {
        double t = dt(rng);
        CHECK(e.eval(t) == e.eval(t));
    }
}

TEST_CASE("arccot range convention") {
    std::mt19937 rng(11u);
    std::uniform_real_distribution<double> dx(-50.0, 50.0);
    Expr e = Expr::parse("arccot(t)");
    for (int i = 0; i < 100; i++) {
        double x = dx(rng);
        CHECK(e.eval(x) + e.eval(-x) == doctest::Approx(M_PI).epsilon(1e-12));
        CHECK(e.eval(x) > 0.0);
        CHECK(e.eval(x) < M_PI);
    }
}
