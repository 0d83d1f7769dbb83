#include "curveasym/catalog.hpp"
#include "curveasym/quadrature.hpp"

#include <cmath>

namespace curveasym {

namespace {

const double kInf = std::numeric_limits<double>::infinity();
const double kNaN = std::numeric_limits<double>::quiet_NaN();

SequenceSpec geometric(double a, double t0, double r = 0.7, int count = 48) {
    SequenceSpec s;
    s.mode = SequenceSpec::Mode::geometric_to_finite;
    s.a = a;
    s.t0 = t0;
    s.ratio = r;
    s.count = count;
    return s;
}

SequenceSpec exponential(double t0, double s_ratio = 1.5, int count = 32) {
    SequenceSpec s;
    s.mode = SequenceSpec::Mode::exponential_to_minus_inf;
    s.a = -kInf;
    s.t0 = t0;
    s.ratio = s_ratio;
    s.count = count;
    return s;
}

} // namespace

CurveEntry make_ex1(double alpha) {
    if (!(alpha > 0.0)) throw input_error("ex1 requires alpha > 0");
    CurveEntry e("ex1-a" + std::to_string(alpha),
                 "logarithmic spiral rho = exp(alpha*t)",
                 Curve::polar_log([alpha](double t) { return alpha * t; },
                                  [alpha](double) { return alpha; },
                                  Domain{-kInf, kInf}));
    e.seq = exponential(1.0);
    e.expected_ratio = std::exp(-alpha * arccot(alpha));
    return e;
}

CurveEntry make_ex2(double alpha) {
    if (!(alpha > 0.0)) throw input_error("ex2 requires alpha > 0");
    CurveEntry e("ex2-a" + std::to_string(alpha),
                 "power spiral rho = t^alpha on t > 0",
                 Curve::polar(
                     [alpha](double t) { return std::pow(t, alpha); },
                     Domain{0.0, 12.0},
                     RealFn([alpha](double t) {
                         return alpha * std::pow(t, alpha - 1.0);
                     })));
    e.seq = geometric(0.0, 1.0);
    e.expected_ratio = std::pow(1.0 + 1.0 / alpha, -alpha);
    return e;
}

CurveEntry make_ex3(double l) {
    if (!(l > 1.0)) throw input_error("ex3 requires l > 1");
    CurveEntry e("ex3-l" + std::to_string(l),
                 "flat spiral rho = exp(-(-t)^l) on t < 0",
                 Curve::polar_log(
                     [l](double t) { return -std::pow(-t, l); },
                     [l](double t) { return l * std::pow(-t, l - 1.0); },
                     Domain{-kInf, 0.0}));
    e.seq = exponential(5.0, 1.5, 20);
    e.expected_ratio = 1.0 / M_E;  // the limit; approached slowly from above
    return e;
}

std::vector<CurveEntry> curve_catalog() {
    std::vector<CurveEntry> cat;
    cat.push_back(make_ex1(0.5));
    cat.push_back(make_ex1(1.0));
    cat.push_back(make_ex1(2.0));
    cat.push_back(make_ex1(5.0));
    cat.push_back(make_ex2(1.0));
    cat.push_back(make_ex2(2.0));
    cat.push_back(make_ex3(2.0));

    {
        CurveEntry e("parabola", "graph y = t^2 from the origin",
                     Curve::graph([](double t) { return t * t; },
                                  Domain{0.0, 10.0},
                                  RealFn([](double t) { return 2.0 * t; })));
        e.seq = geometric(0.0, 1.0, 0.7, 40);
        e.expected_ratio = 0.5;
        cat.push_back(std::move(e));
    }
    {
        CurveEntry e("cubic", "cartesian (t, t^3 - t)",
                     Curve::cartesian(
                         [](double t) { return t; },
                         [](double t) { return t * t * t - t; },
                         Domain{0.0, 1.5}, RealFn([](double) { return 1.0; }),
                         RealFn([](double t) { return 3.0 * t * t - 1.0; })));
        e.seq = geometric(0.0, 1.0, 0.7, 40);
        e.expected_ratio = 1.0 / std::sqrt(3.0);
        cat.push_back(std::move(e));
    }
    {
        CurveEntry e("circle", "unit circle through the start point",
                     Curve::cartesian([](double t) { return std::sin(t); },
                                      [](double t) { return 1.0 - std::cos(t); },
                                      Domain{0.0, 2.0 * M_PI},
                                      RealFn([](double t) { return std::cos(t); }),
                                      RealFn([](double t) { return std::sin(t); })));
        e.seq = geometric(0.0, 3.0, 0.7, 40);
        e.expected_ratio = 0.5;
        cat.push_back(std::move(e));
    }
    {
        CurveEntry e("line", "straight ray y = t/2 (every point supports)",
                     Curve::graph([](double t) { return 0.5 * t; },
                                  Domain{0.0, 10.0},
                                  RealFn([](double) { return 0.5; })));
        e.seq = geometric(0.0, 1.0, 0.7, 32);
        e.expected_ratio = 1.0;
        cat.push_back(std::move(e));
    }
    {
        CurveEntry e("sine-graph", "graph y = sin t",
                     Curve::graph([](double t) { return std::sin(t); },
                                  Domain{0.0, M_PI},
                                  RealFn([](double t) { return std::cos(t); })));
        e.seq = geometric(0.0, 1.0, 0.7, 40);
        e.expected_ratio = 1.0 / std::sqrt(3.0);
        cat.push_back(std::move(e));
    }
    {
        CurveEntry e("exp-graph", "graph y = e^t - 1",
                     Curve::graph([](double t) { return std::expm1(t); },
                                  Domain{0.0, 5.0},
                                  RealFn([](double t) { return std::exp(t); })));
        e.seq = geometric(0.0, 1.0, 0.7, 40);
        e.expected_ratio = 0.5;
        cat.push_back(std::move(e));
    }
    {
        CurveEntry e("polar-sine", "polar circle rho = sin t",
                     Curve::polar([](double t) { return std::sin(t); },
                                  Domain{0.0, M_PI},
                                  RealFn([](double t) { return std::cos(t); })));
        e.seq = geometric(0.0, 2.0, 0.7, 40);
        e.expected_ratio = 0.5;
        cat.push_back(std::move(e));
    }
    return cat;
}

MeanValuePreset make_remark41(double alpha) {
    if (!(alpha > 0.0)) throw input_error("remark41 requires alpha > 0");
    MeanValuePreset p;
    p.name = "remark41-a" + std::to_string(alpha);
    p.problem.kind = MeanValueProblem::Kind::xi_cauchy;
    p.problem.pair.g = [alpha](double t) { return std::pow(t, 1.0 + alpha); };
    p.problem.pair.h = [](double t) { return t; };
    p.problem.pair.dg = [alpha](double t) {
        return (1.0 + alpha) * std::pow(t, alpha);
    };
    p.problem.pair.dh = [](double) { return 1.0; };
    p.problem.pair.a = 0.0;
    p.problem.pair.b = 4.0;
    double x = 1.0;
    for (int k = 0; k < 12; k++) {
        p.xs.push_back(x);
        x *= 0.5;
    }
    p.expected_ratio_h = std::pow(1.0 / (1.0 + alpha), 1.0 / alpha);
    p.expected_ratio_t = p.expected_ratio_h;  // h is the identity
    p.expected_c = 1.0;
    return p;
}

MeanValuePreset make_lagrange_extremal(double x_min) {
    if (!(x_min > 0.0 && x_min < 1e-3)) {
        throw input_error("lagrange-extremal requires x_min in (0, 1e-3)");
    }
    MeanValuePreset p;
    p.name = "lagrange-extremal";
    p.problem.kind = MeanValueProblem::Kind::xi_lagrange;
    // integrand extends continuously by 0 at t = 0
    auto dg = [](double t) { return t <= 0.0 ? 0.0 : -1.0 / std::log(t); };
    p.problem.pair.g = [dg](double x) {
        return x == 0.0 ? 0.0 : adaptive_simpson_rel(dg, 0.0, x, 1e-12);
    };
    p.problem.pair.dg = dg;
    p.problem.pair.a = 0.0;
    p.problem.pair.b = 1e-3;
    for (double x = 1e-4; x >= x_min * (1.0 - 1e-9); x *= 0.1) {
        p.xs.push_back(x);
    }
    p.expected_ratio_h = kNaN;  // tends to 1/e from above, no finite closed form
    p.expected_ratio_t = kNaN;
    p.expected_c = 1.0;
    return p;
}

MeanValuePreset make_powerweight(double beta) {
    if (!(beta >= 0.0)) throw input_error("powerweight requires beta >= 0");
    MeanValuePreset p;
    p.name = "powerweight-b" + std::to_string(beta);
    p.problem.kind = MeanValueProblem::Kind::eta;
    p.problem.f = [](double t) { return t; };
    p.problem.w = [beta](double t) { return beta == 0.0 ? 1.0 : std::pow(t, beta); };
    double x = 1.0;
    for (int k = 0; k < 10; k++) {
        p.xs.push_back(x);
        x *= 0.7;
    }
    p.expected_ratio_t = (beta + 1.0) / (beta + 2.0);
    p.expected_ratio_h = p.expected_ratio_t;
    p.expected_c = 1.0 / (beta + 1.0);
    return p;
}

CurveEntry make_example(const std::string& name, double param) {
    if (name == "ex1") return make_ex1(param);
    if (name == "ex2") return make_ex2(param);
    if (name == "ex3") return make_ex3(param);
    throw input_error("unknown example '" + name + "' (want ex1|ex2|ex3)");
}

MeanValuePreset make_preset(const std::string& name, double param) {
    if (name == "remark41") return make_remark41(param);
    if (name == "lagrange-extremal") {
        return make_lagrange_extremal(param > 0.0 ? param : 1e-10);
    }
    if (name == "powerweight") return make_powerweight(param);
    throw input_error("unknown preset '" + name +
                      "' (want remark41|lagrange-extremal|powerweight)");
}

} // namespace curveasym
