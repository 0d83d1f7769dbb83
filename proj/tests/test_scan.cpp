#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curveasym/errors.hpp"
#include "curveasym/scan.hpp"

#include <cmath>

using namespace curveasym;

TEST_CASE("single parabola extremum") {
    ScanOptions opt;
    opt.refine_tol = 1e-12;
    auto f = [](double t) { return -(t - 0.3) * (t - 0.3); };
    ScanResult r = scan_extrema(f, 0.0, 1.0, opt);
    REQUIRE(r.extrema.size() == 1);
    CHECK(r.extrema[0].is_max);
    CHECK(r.extrema[0].tau == doctest::Approx(0.3).epsilon(1e-7));
}

TEST_CASE("mixed extrema of a sine") {
    ScanOptions opt;
    opt.refine_tol = 1e-12;
    ScanResult r = scan_extrema([](double t) { return std::sin(t); }, 0.0, 7.0, opt);
    REQUIRE(r.extrema.size() == 2);
    CHECK(r.extrema[0].is_max);
    CHECK(r.extrema[0].tau == doctest::Approx(M_PI / 2.0).epsilon(1e-7));
    CHECK(!r.extrema[1].is_max);
    CHECK(r.extrema[1].tau == doctest::Approx(3.0 * M_PI / 2.0).epsilon(1e-7));
}

TEST_CASE("extremum at the right endpoint is judged two-sidedly") {
    ScanOptions opt;
    opt.refine_tol = 1e-12;
    opt.hard_hi = 2.0;
    // max at exactly hi = 1: visible only with probes beyond hi
    ScanResult r = scan_extrema([](double t) { return -(t - 1.0) * (t - 1.0); },
                                0.0, 1.0, opt);
    REQUIRE(r.extrema.size() == 1);
    CHECK(r.extrema[0].tau == doctest::Approx(1.0).epsilon(1e-7));

    // monotone increase onto hi, nothing beyond: no extremum, no plateau
    opt.hard_hi = 1.0;
    ScanResult r2 = scan_extrema([](double t) { return t; }, 0.0, 1.0, opt);
    CHECK(r2.extrema.empty());
    CHECK(!r2.all_plateau);
}

TEST_CASE("plateau detection") {
    ScanOptions opt;
    opt.refine_tol = 1e-12;
    auto f = [](double t) { return t < 0.4 ? t : 0.4; };
    ScanResult r = scan_extrema(f, 0.0, 1.0, opt);
    REQUIRE(r.plateaus.size() == 1);
    CHECK(r.plateaus[0].lo == doctest::Approx(0.4).epsilon(1e-2));
    CHECK(r.plateaus[0].hi == doctest::Approx(1.0));

    ScanResult flat = scan_extrema([](double) { return 2.0; }, 0.0, 1.0, opt);
    CHECK(flat.all_plateau);
}

TEST_CASE("ternary refinement reaches the noise floor") {
    auto f = [](double t) { return std::cos(t); };
    double w = 0.0;
    double t = ternary_refine(f, 2.5, 3.8, false, 1e-6, &w);
    // well past the requested 1e-6: refinement continues while samples resolve
    CHECK(std::abs(t - M_PI) < 1e-7);
}

TEST_CASE("root bracketing and bisection") {
    auto f = [](double t) { return std::cos(t); };
    RootScan r = scan_roots(f, 0.0, 7.0, 128, 1e-12);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == doctest::Approx(M_PI / 2.0).epsilon(1e-10));
    CHECK(r.roots[1] == doctest::Approx(3.0 * M_PI / 2.0).epsilon(1e-10));

    // tol 0: bisect to the floating-point floor
    double root = bisect(f, 1.0, 2.0, 0.0);
    CHECK(root == doctest::Approx(M_PI / 2.0).epsilon(1e-15));

    CHECK_THROWS_AS(bisect(f, 0.1, 0.2, 1e-9), input_error);
}

TEST_CASE("all-zero flag is exact by default") {
    RootScan z = scan_roots([](double) { return 0.0; }, 0.0, 1.0, 64, 1e-9);
    CHECK(z.all_zero);
    // tiny but genuine sign structure is not mistaken for zero
    RootScan tiny = scan_roots([](double t) { return 1e-30 * (t - 0.5); },
                               0.0, 1.0, 64, 0.0);
    CHECK(!tiny.all_zero);
    REQUIRE(tiny.roots.size() == 1);
    CHECK(tiny.roots[0] == doctest::Approx(0.5).epsilon(1e-12));
}
