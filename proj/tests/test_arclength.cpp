#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curveasym/arclength.hpp"
#include "curveasym/catalog.hpp"

#include <cmath>

using namespace curveasym;

TEST_CASE("straight segment: arc ratio is one") {
    Curve line = Curve::graph([](double t) { return 0.5 * t; }, Domain{0.0, 10.0},
                              RealFn([](double) { return 0.5; }));
    std::vector<double> seq = {2.0, 1.0, 0.5};
    ArcTrace trace = arc_ratio_trace(line, seq, {}, 3);
    for (const ArcSample& s : trace.samples) {
        REQUIRE(!s.failed);
        CHECK(s.ratio_ls == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(s.ratio_lt == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("circle arc: support at the midpoint of the arc") {
    Curve circle = Curve::cartesian([](double t) { return std::sin(t); },
                                    [](double t) { return 1.0 - std::cos(t); },
                                    Domain{0.0, 2.0 * M_PI},
                                    RealFn([](double t) { return std::cos(t); }),
                                    RealFn([](double t) { return std::sin(t); }));
    std::vector<double> seq = {2.0, 1.5, 1.0};
    ArcTrace trace = arc_ratio_trace(circle, seq, {}, 3);
    for (const ArcSample& s : trace.samples) {
        REQUIRE(!s.failed);
        // unit-speed circle: L(t) = t and the support point sits at t/2
        CHECK(s.l == doctest::Approx(s.t).epsilon(1e-8));
        CHECK(s.ratio_ls == doctest::Approx(0.5).epsilon(1e-6));
    }
}

TEST_CASE("log spiral: arc ratio keeps the distance-ratio shift") {
    CurveEntry e = make_ex1(1.0);
    std::vector<double> seq = {-2.0, -4.0, -8.0};
    ArcTrace trace = arc_ratio_trace(e.curve, seq, {}, 3);
    for (const ArcSample& s : trace.samples) {
        REQUIRE(!s.failed);
        // L(t) is proportional to D(t), so the arc ratio equals e^{-pi/4}
        CHECK(s.ratio_ls == doctest::Approx(std::exp(-M_PI / 4.0)).epsilon(1e-6));
    }
}

TEST_CASE("ratios live in [0, 1] and L is nondecreasing") {
    Curve parabola = Curve::graph([](double t) { return t * t; }, Domain{0.0, 10.0},
                                  RealFn([](double t) { return 2.0 * t; }));
    std::vector<double> seq;
    for (double t = 2.0; t > 0.01; t *= 0.6) seq.push_back(t);
    ArcTrace trace = arc_ratio_trace(parabola, seq, {}, 3);
    double prev_l = std::numeric_limits<double>::infinity();
    for (const ArcSample& s : trace.samples) {
        REQUIRE(!s.failed);
        CHECK(s.ratio_ls >= 0.0);
        CHECK(s.ratio_ls <= 1.0 + 1e-9);
        CHECK(s.l <= prev_l);  // seq decreases toward a, so L decreases too
        prev_l = s.l;
    }
}

TEST_CASE("eq6: smooth curve vs log spiral") {
    Curve parabola = Curve::graph([](double t) { return t * t; }, Domain{0.0, 10.0},
                                  RealFn([](double t) { return 2.0 * t; }));
    std::vector<double> seq;
    for (double t = 1.0; t > 1e-6; t *= 0.5) seq.push_back(t);
    Eq6Report smooth = eq6_check(parabola, seq);
    CHECK(smooth.tends_to_one);
    CHECK(smooth.tail_value == doctest::Approx(1.0).epsilon(1e-6));

    CurveEntry spiral = make_ex1(1.0);
    std::vector<double> sseq = {-1.0, -2.0, -4.0, -8.0, -16.0};
    Eq6Report rep = eq6_check(spiral.curve, sseq, {}, 1e-4, 5);
    CHECK(!rep.tends_to_one);
    CHECK(rep.tail_value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
}

TEST_CASE("conjecture harness never claims a counterexample") {
    Curve circle = Curve::cartesian([](double t) { return std::sin(t); },
                                    [](double t) { return 1.0 - std::cos(t); },
                                    Domain{0.0, 2.0 * M_PI},
                                    RealFn([](double t) { return std::cos(t); }),
                                    RealFn([](double t) { return std::sin(t); }));
    std::vector<double> seq = {2.0, 1.5, 1.0, 0.7, 0.5};
    ArcConjectureReport rep = arc_conjecture_check(circle, seq, {}, 3);
    CHECK(rep.verdict == Verdict::holds);
    CHECK(rep.verdict != Verdict::violated);
}
