#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curveasym/curve.hpp"

#include <cmath>

using namespace curveasym;

TEST_CASE("cartesian evaluation and start point") {
    Curve c = Curve::cartesian([](double t) { return std::cos(t); },
                               [](double t) { return std::sin(t); },
                               Domain{0.0, 6.0});
    Point2 p = c.point(M_PI / 2.0);
    CHECK(p.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p.y == doctest::Approx(1.0));
    CHECK(c.start().x == doctest::Approx(1.0));
    CHECK(c.distance_from_start(M_PI) == doctest::Approx(2.0));
    CHECK_THROWS_AS(c.point(7.0), input_error);
}

TEST_CASE("analytic vs finite-difference derivative") {
    Curve exact = Curve::graph([](double t) { return t * t * t; }, Domain{0.0, 2.0},
                               RealFn([](double t) { return 3.0 * t * t; }));
    Curve fd = Curve::graph([](double t) { return t * t * t; }, Domain{0.0, 2.0});
    CHECK(exact.has_analytic_derivative());
    CHECK(!fd.has_analytic_derivative());
    Vec2 de = exact.derivative(1.0);
    Vec2 dn = fd.derivative(1.0);
    CHECK(de.x == doctest::Approx(1.0));
    CHECK(de.y == doctest::Approx(3.0));
    CHECK(dn.y == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("derivative stencil clipping near the boundary") {
    Curve c = Curve::graph([](double t) { return t * t; }, Domain{0.0, 1.0});
    // close to the edge the step shrinks instead of leaving the domain
    CHECK(c.derivative(1e-7).y == doctest::Approx(2e-7).epsilon(1e-3));
    CHECK_THROWS_AS(c.derivative(0.0), input_error);
}

TEST_CASE("polar point and drho fallback") {
    Curve c = Curve::polar([](double t) { return t; }, Domain{0.0, 10.0});
    Point2 p = c.point(M_PI / 2.0);
    CHECK(p.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p.y == doctest::Approx(M_PI / 2.0));
    CHECK(c.drho(1.0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(c.start().x == 0.0);
}

TEST_CASE("log-form polar survives extreme parameters") {
    Curve c = Curve::polar_log([](double t) { return t; },
                               [](double) { return 1.0; },
                               Domain{-std::numeric_limits<double>::infinity(),
                                      std::numeric_limits<double>::infinity()});
    CHECK(c.log_rho(-1000.0) == doctest::Approx(-1000.0));
    CHECK(c.dlog_rho(-1000.0) == doctest::Approx(1.0));
    // rho itself underflows there, but the log form stays exact
    CHECK(c.rho(-1000.0) == 0.0);
    Curve r = c.rescaled(1000.0);
    CHECK(r.rho(-1000.0) == doctest::Approx(1.0));
}

TEST_CASE("arc length: line, circle, additivity") {
    Curve line = Curve::graph([](double t) { return 2.0 * t; }, Domain{0.0, 10.0},
                              RealFn([](double) { return 2.0; }));
    CHECK(line.arc_length(0.0, 3.0) == doctest::Approx(3.0 * std::sqrt(5.0)));

    Curve circle = Curve::cartesian([](double t) { return std::sin(t); },
                                    [](double t) { return 1.0 - std::cos(t); },
                                    Domain{0.0, 2.0 * M_PI},
                                    RealFn([](double t) { return std::cos(t); }),
                                    RealFn([](double t) { return std::sin(t); }));
    CHECK(circle.arc_length(0.0, 1.5) == doctest::Approx(1.5).epsilon(1e-9));
    double whole = circle.arc_length(0.1, 1.3);
    double split = circle.arc_length(0.1, 0.6) + circle.arc_length(0.6, 1.3);
    CHECK(whole == doctest::Approx(split).epsilon(1e-9));
    CHECK_THROWS_AS(circle.arc_length(1.0, 1.0), input_error);
}

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(Curve::graph([](double t) { return t; }, Domain{1.0, 1.0}),
                    input_error);
    // infinite left end needs a designated start point
    CHECK_THROWS_AS(
        Curve::cartesian([](double t) { return t; }, [](double t) { return t; },
                         Domain{-std::numeric_limits<double>::infinity(), 0.0}),
        input_error);
}
