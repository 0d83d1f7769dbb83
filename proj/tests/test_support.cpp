#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curveasym/catalog.hpp"
#include "curveasym/support.hpp"

#include <cmath>

using namespace curveasym;

namespace {

Curve parabola() {
    return Curve::graph([](double t) { return t * t; }, Domain{0.0, 10.0},
                        RealFn([](double t) { return 2.0 * t; }));
}

} // namespace

TEST_CASE("parabola chord: support point at t/2") {
    Curve c = parabola();
    for (double t : {0.5, 1.0, 2.0}) {
        ChordReport rep = find_support_set(c, t);
        REQUIRE(rep.points.size() == 1);
        CHECK(rep.points[0].tau == doctest::Approx(t / 2.0).epsilon(1e-7));
        CHECK(rep.points[0].kind == PointKind::support_min);
        double d_half = c.distance_from_start(t / 2.0);
        // ds accuracy is limited by the tau refinement (D is not stationary
        // at the support point), so only ~1e-6 relative is guaranteed
        CHECK(rep.ds == doctest::Approx(d_half).epsilon(1e-6));
        CHECK(!rep.degenerate);
    }
}

TEST_CASE("tangent set matches the support set for the parabola") {
    Curve c = parabola();
    ChordReport tan = find_tangent_set(c, 1.0);
    REQUIRE(tan.points.size() == 1);
    CHECK(tan.points[0].tau == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(tan.dt_sup == doctest::Approx(c.distance_from_start(0.5)).epsilon(1e-9));
}

TEST_CASE("straight segment: plateau, ratio one") {
    Curve line = Curve::graph([](double t) { return 0.5 * t; }, Domain{0.0, 10.0},
                              RealFn([](double) { return 0.5; }));
    ChordReport sup = find_support_set(line, 2.0);
    REQUIRE(sup.points.size() == 1);
    CHECK(sup.points[0].kind == PointKind::plateau);
    CHECK(sup.ds == doctest::Approx(sup.d_t));
    ChordReport tan = find_tangent_set(line, 2.0);
    REQUIRE(tan.points.size() == 1);
    CHECK(tan.points[0].kind == PointKind::plateau);
    CHECK(tan.dt_sup == doctest::Approx(tan.d_t));
}

TEST_CASE("degenerate chord is flagged unbounded") {
    // loop that returns exactly to the start at t = 2
    Curve c = Curve::cartesian([](double t) { return t * (t - 2.0); },
                               [](double t) { return t * t * (t - 2.0); },
                               Domain{0.0, 3.0});
    ChordReport rep = find_support_set(c, 2.0);
    CHECK(rep.degenerate);
    CHECK(std::isinf(rep.ds));
}

TEST_CASE("polar tangency equation for the power spiral") {
    // roots satisfy t = tau + arccot(alpha/tau) + pi*n
    double alpha = 2.0;
    CurveEntry e = make_ex2(alpha);
    double t = 1.0;
    std::vector<double> taus = tangent_set_polar(e.curve, t, 8);
    REQUIRE(!taus.empty());
    for (double tau : taus) {
        REQUIRE(tau > 0.0);
        double lhs = std::fmod(tau + arccot(alpha / tau) - t, M_PI);
        if (lhs > M_PI / 2.0) lhs -= M_PI;
        if (lhs < -M_PI / 2.0) lhs += M_PI;
        CHECK(std::abs(lhs) < 1e-9);
    }
}

TEST_CASE("phi vanishes at both chord endpoints") {
    Curve c = parabola();
    CHECK(phi_value(c, 1.5, 0.0) == 0.0);
    CHECK(phi_value(c, 1.5, 1.5) == 0.0);
}

TEST_CASE("log-form chord ratios: constant-pitch spiral") {
    double alpha = 1.0;
    CurveEntry e = make_ex1(alpha);
    for (double t : {-2.0, -100.0, -10000.0}) {
        PolarChordRatios pc = polar_chord_ratios(e.curve, t);
        CHECK(pc.ratio ==
              doctest::Approx(std::exp(-alpha * arccot(alpha))).epsilon(1e-9));
        REQUIRE(!pc.deltas.empty());
        CHECK(pc.deltas.front() == doctest::Approx(arccot(alpha)).epsilon(1e-9));
    }
}

TEST_CASE("chord parameter must sit inside the domain") {
    Curve c = parabola();
    CHECK_THROWS_AS(find_support_set(c, 10.5), input_error);
    CHECK_THROWS_AS(find_support_set(c, 0.0), input_error);
}
