#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curveasym/catalog.hpp"
#include "curveasym/meanvalue.hpp"
#include "curveasym/support.hpp"

#include <cmath>

using namespace curveasym;

namespace {

FunctionPair square_pair() {
    FunctionPair p;
    p.g = [](double t) { return t * t; };
    p.h = [](double t) { return t; };
    p.dg = [](double t) { return 2.0 * t; };
    p.dh = [](double) { return 1.0; };
    p.a = 0.0;
    p.b = 4.0;
    return p;
}

} // namespace

TEST_CASE("mu of the parabola pair is x/2") {
    FunctionPair p = square_pair();
    for (double x : {0.5, 1.0, 2.0}) {
        MeanValueResult r = mu_point(p, x);
        CHECK(r.tau == doctest::Approx(x / 2.0).epsilon(1e-7));
        CHECK(r.ratio_t == doctest::Approx(0.5).epsilon(1e-7));
    }
}

TEST_CASE("mu agrees with a dense brute-force scan") {
    FunctionPair p;
    p.g = [](double t) { return t * t * t - t; };
    p.h = [](double t) { return t; };
    p.a = 0.0;
    p.b = 2.0;
    double x = 1.0;
    MeanValueResult r = mu_point(p, x);

    double gx = p.g(x), hx = x;
    auto psi = [&](double t) { return gx * t - hx * p.g(t); };
    double best = 0.0, best_v = -1e300;
    const int n = 1000000;
    for (int i = 1; i < n; i++) {
        double t = x * i / n;
        double v = std::abs(psi(t));
        if (v > best_v) {
            best_v = v;
            best = t;
        }
    }
    CHECK(r.tau == doctest::Approx(best).epsilon(1e-6));
}

TEST_CASE("Cauchy point: parabola and sine oracles") {
    FunctionPair p = square_pair();
    MeanValueResult r = xi_cauchy(p, 1.0);
    CHECK(r.tau == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(r.ratio_h == doctest::Approx(0.5).epsilon(1e-10));

    FunctionPair q;
    q.g = [](double t) { return std::sin(t); };
    q.h = [](double t) { return t; };
    q.dg = [](double t) { return std::cos(t); };
    q.dh = [](double) { return 1.0; };
    q.a = 0.0;
    q.b = 3.0;
    MeanValueResult rs = xi_cauchy(q, 2.0);
    CHECK(rs.tau == doctest::Approx(std::acos(std::sin(2.0) / 2.0)).epsilon(1e-9));
}

TEST_CASE("Remark-4.1 family: ratio constant in x") {
    for (double alpha : {1.0, 3.0}) {
        MeanValuePreset p = make_remark41(alpha);
        for (double x : {1.0, 0.25, 1.0 / 64.0}) {
            MeanValueResult r = xi_cauchy(p.problem.pair, x);
            CHECK(r.ratio_h == doctest::Approx(p.expected_ratio_h).epsilon(1e-10));
        }
    }
}

TEST_CASE("Lagrange point: cubic and degenerate cases") {
    auto g = [](double t) { return t * t * t; };
    auto dg = [](double t) { return 3.0 * t * t; };
    MeanValueResult r = xi_lagrange(g, dg, 0.0, 1.0);
    CHECK(r.tau == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));

    // constant g: every tau solves; the supremum is x
    MeanValueResult c = xi_lagrange([](double) { return 2.0; },
                                    [](double) { return 0.0; }, 0.0, 1.0);
    CHECK(c.tau == doctest::Approx(1.0));
    CHECK(c.plateau_at_x);
}

TEST_CASE("weighted integral mean value") {
    // w = 1, f = t: M = x/2
    MeanValueResult r = eta_integral([](double t) { return t; },
                                     [](double) { return 1.0; }, 2.0);
    CHECK(r.tau == doctest::Approx(1.0).epsilon(1e-10));

    // constant f sits on its mean everywhere
    MeanValueResult c = eta_integral([](double) { return 3.0; },
                                     [](double) { return 1.0; }, 2.0);
    CHECK(c.tau == doctest::Approx(2.0));
    CHECK(c.plateau_at_x);

    // w = t^beta, f = t: eta = x(beta+1)/(beta+2)
    MeanValueResult b1 = eta_integral([](double t) { return t; },
                                      [](double t) { return t; }, 1.0);
    CHECK(b1.tau == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("C estimates") {
    std::vector<double> xs = {1.0, 0.5, 0.25, 0.125, 0.0625};
    CEstimate c1 = estimate_C([](double x) { return x; },
                              [](double) { return 1.0; }, 0.0, xs, 3);
    CHECK(c1.value == doctest::Approx(1.0));
    CHECK(c1.continuity_caveat);

    double p = 3.0;
    CEstimate cp = estimate_C([p](double x) { return std::pow(x, p); },
                              [p](double x) { return p * std::pow(x, p - 1.0); },
                              0.0, xs, 3);
    CHECK(cp.value == doctest::Approx(1.0 / p).epsilon(1e-12));
}

TEST_CASE("xi is not below mu") {
    FunctionPair q;
    q.g = [](double t) { return std::sin(t); };
    q.h = [](double t) { return t; };
    q.dg = [](double t) { return std::cos(t); };
    q.dh = [](double) { return 1.0; };
    q.a = 0.0;
    q.b = 3.0;
    MeanValueResult mu = mu_point(q, 2.0);
    MeanValueResult xi = xi_cauchy(q, 2.0);
    CHECK(xi.tau >= mu.tau - 1e-6);
}

TEST_CASE("affine invariance of the defining equations") {
    FunctionPair p = square_pair();
    MeanValueResult base = xi_cauchy(p, 1.5);

    FunctionPair q = p;
    q.g = [](double t) { return 2.5 * t * t - 7.0; };
    q.dg = [](double t) { return 5.0 * t; };
    q.h = [](double t) { return 3.0 * t + 1.0; };
    q.dh = [](double) { return 3.0; };
    MeanValueResult moved = xi_cauchy(q, 1.5);
    CHECK(moved.tau == doctest::Approx(base.tau).epsilon(1e-9));
}

TEST_CASE("trace verdicts for the power-weight preset") {
    MeanValuePreset p = make_powerweight(1.0);
    MeanValueTrace trace = meanvalue_trace(p.problem, p.xs);
    CHECK(trace.verdict_h == Verdict::holds);
    CHECK(trace.verdict_t == Verdict::holds);
    CHECK(trace.c_estimate == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(trace.est_ratio_t.value == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("h must increase") {
    FunctionPair bad;
    bad.g = [](double t) { return t; };
    bad.h = [](double t) { return -t; };
    bad.a = 0.0;
    bad.b = 2.0;
    CHECK_THROWS_AS(validate_pair(bad, 1.0), input_error);
}
