#include "curveasym/acceptance.hpp"

#include "curveasym/arclength.hpp"
#include "curveasym/catalog.hpp"
#include "curveasym/meanvalue.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

namespace curveasym {

namespace {

struct Check {
    bool ok = true;
    std::ostringstream why;

    void require(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            why << msg;
        }
    }
    void require_close(double got, double want, double tol, const std::string& what) {
        if (std::abs(got - want) > tol && ok) {
            ok = false;
            why << what << ": got " << got << ", want " << want << " +/- " << tol;
        }
    }
};

std::vector<double> entry_sequence(const CurveEntry& e) {
    return make_sequence(e.seq, e.curve.domain());
}

// ---- criterion 1: log spiral closed form at every sample -------------------

Check criterion1() {
    Check c;
    for (double alpha : {0.5, 1.0, 2.0, 5.0}) {
        CurveEntry e = make_ex1(alpha);
        RatioTrace trace = ratio_trace(e.curve, entry_sequence(e), e.settings);
        for (const TraceSample& s : trace.samples) {
            c.require(!s.failed, "ex1 sample failed: " + s.error);
            if (s.failed) return c;
            c.require_close(s.ratio_s, e.expected_ratio, 1e-5,
                            "ex1 alpha=" + std::to_string(alpha) + " support ratio");
            c.require_close(s.ratio_t, e.expected_ratio, 1e-5,
                            "ex1 alpha=" + std::to_string(alpha) + " tangent ratio");
        }
    }
    return c;
}

// ---- criterion 2: rho = t^alpha tail estimate ------------------------------

Check criterion2() {
    Check c;
    for (double alpha : {1.0, 2.0}) {
        CurveEntry e = make_ex2(alpha);
        RatioTrace trace = ratio_trace(e.curve, entry_sequence(e), e.settings);
        LimsupEstimate s = limsup_estimate(trace, 8, RatioChannel::support);
        LimsupEstimate t = limsup_estimate(trace, 8, RatioChannel::tangent);
        c.require_close(s.value, e.expected_ratio, 1e-3,
                        "ex2 alpha=" + std::to_string(alpha) + " support tail");
        c.require_close(t.value, e.expected_ratio, 1e-3,
                        "ex2 alpha=" + std::to_string(alpha) + " tangent tail");
    }
    return c;
}

// ---- criterion 3: flat spiral decreases toward 1/e -------------------------

Check criterion3() {
    Check c;
    CurveEntry e = make_ex3(2.0);
    RatioTrace trace = ratio_trace(e.curve, entry_sequence(e), e.settings);
    const auto& ss = trace.samples;
    c.require(ss.size() == 20, "ex3 expected 20 samples");
    for (const TraceSample& s : ss) c.require(!s.failed, "ex3 sample failed: " + s.error);
    if (!c.ok) return c;
    double last = ss.back().ratio_s;
    c.require(std::abs(last - 1.0 / M_E) < 0.05, "ex3 last ratio not near 1/e");
    for (std::size_t i = ss.size() - 10; i + 1 < ss.size(); i++) {
        c.require(ss[i + 1].ratio_s < ss[i].ratio_s,
                  "ex3 ratios not monotone decreasing over the last 10");
    }
    for (const TraceSample& s : ss) {
        c.require(s.ratio_s > 1.0 / M_E, "ex3 ratio fell below 1/e");
    }
    return c;
}

// ---- criterion 4: universal bound over the full catalog --------------------

Check criterion4() {
    Check c;
    for (const CurveEntry& e : curve_catalog()) {
        RatioTrace trace = ratio_trace(e.curve, entry_sequence(e), e.settings);
        LimsupEstimate est = limsup_estimate(trace, 8, RatioChannel::support);
        c.require(check_universal_bound(est, 1e-3) == Verdict::holds,
                  e.name + ": support-ratio bound verdict not 'holds'");
        try {
            LimsupEstimate et = limsup_estimate(trace, 8, RatioChannel::tangent);
            c.require(check_universal_bound(et, 1e-3) == Verdict::holds,
                      e.name + ": tangent-ratio bound verdict not 'holds'");
        } catch (const input_error&) {
            // no tangent route for this family; the support check stands
        }
    }
    return c;
}

// ---- criterion 5: Remark-4.1 constant ratio --------------------------------

Check criterion5() {
    Check c;
    for (double alpha : {1.0, 3.0}) {
        MeanValuePreset p = make_remark41(alpha);
        double first = 0.0;
        bool have_first = false;
        for (double x : p.xs) {
            MeanValueResult r = xi_cauchy(p.problem.pair, x, p.problem.tol,
                                          p.problem.n_grid);
            c.require_close(r.ratio_h, p.expected_ratio_h, 1e-9,
                            p.name + " ratio_h at x=" + std::to_string(x));
            if (!have_first) {
                first = r.ratio_h;
                have_first = true;
            }
            c.require_close(r.ratio_h, first, 1e-9, p.name + " ratio_h drifts in x");
        }
    }
    return c;
}

// ---- criterion 6: Lagrange equality-case function --------------------------

Check criterion6() {
    Check c;
    MeanValuePreset p = make_lagrange_extremal(1e-10);
    double prev = 2.0;
    double last_ratio = 0.0, last_x = 0.0;
    for (double x : p.xs) {
        MeanValueResult r = xi_lagrange(p.problem.pair.g, *p.problem.pair.dg, 0.0,
                                        x, p.problem.tol, p.problem.n_grid);
        c.require(r.ratio_t < prev, "extremal ratio_t not decreasing in x");
        c.require(r.ratio_t >= 1.0 / M_E - 1e-6, "extremal ratio_t below 1/e");
        prev = r.ratio_t;
        last_ratio = r.ratio_t;
        last_x = x;
    }
    double band = 2.0 / std::abs(std::log(last_x));
    c.require_close(last_ratio, 1.0 / M_E, band, "extremal final ratio_t");
    return c;
}

// ---- criterion 7: weighted integral mean value, power weights --------------

Check criterion7() {
    Check c;
    for (double beta : {0.0, 1.0, 2.0}) {
        MeanValuePreset p = make_powerweight(beta);
        for (double x : p.xs) {
            MeanValueResult r = eta_integral(p.problem.f, p.problem.w, x,
                                             p.problem.quad_tol, p.problem.tol,
                                             p.problem.n_grid);
            c.require_close(r.ratio_t, p.expected_ratio_t, 1e-9,
                            p.name + " eta(x)/x at x=" + std::to_string(x));
        }
        // C from the closed-form cumulative weight
        RealFn h = [beta](double x) { return std::pow(x, beta + 1.0) / (beta + 1.0); };
        RealFn dh = [beta](double x) { return beta == 0.0 ? 1.0 : std::pow(x, beta); };
        CEstimate ce = estimate_C(h, dh, 0.0, p.xs, 8);
        c.require_close(ce.value, p.expected_c, 1e-9, p.name + " C estimate");
        c.require(p.expected_ratio_t >= std::exp(-p.expected_c),
                  p.name + " ratio does not dominate e^-C");
    }
    return c;
}

// ---- criterion 8: property suites ------------------------------------------

Curve rigid_motion(const Curve& base, double angle, Vec2 shift, double scale) {
    double ca = std::cos(angle), sa = std::sin(angle);
    auto x = [=](double t) {
        Point2 p = base.point(t);
        return scale * (ca * p.x - sa * p.y) + shift.x;
    };
    auto y = [=](double t) {
        Point2 p = base.point(t);
        return scale * (sa * p.x + ca * p.y) + shift.y;
    };
    return Curve::cartesian(x, y, base.domain());
}

void check_invariance(Check& c, const Curve& base, double t) {
    ChordReport r0 = find_support_set(base, t);
    double ratio0 = r0.ds / r0.d_t;
    Curve moved = rigid_motion(base, 0.83, {1.5, -2.25}, 1.0);
    ChordReport r1 = find_support_set(moved, t);
    c.require_close(r1.ds / r1.d_t, ratio0, 1e-6, "ratio not rigid-motion invariant");
    Curve scaled = rigid_motion(base, 0.0, {0.0, 0.0}, 3.5);
    ChordReport r2 = find_support_set(scaled, t);
    c.require_close(r2.ds / r2.d_t, ratio0, 1e-6, "ratio not scaling invariant");
    // reparameterize u -> 2u
    const Domain& d = base.domain();
    Curve repar = Curve::cartesian([&base](double u) { return base.point(2.0 * u).x; },
                                   [&base](double u) { return base.point(2.0 * u).y; },
                                   Domain{d.a / 2.0, d.b / 2.0});
    ChordReport r3 = find_support_set(repar, t / 2.0);
    c.require_close(r3.ds / r3.d_t, ratio0, 1e-6,
                    "ratio not reparameterization invariant");
}

void check_s_in_t(Check& c, const Curve& curve, double t) {
    ChordReport sup = find_support_set(curve, t);
    Point2 o = curve.start();
    Vec2 chord = curve.point(t) - o;
    double scale = 0.0;
    for (int i = 1; i <= 64; i++) {
        double tau = t * i / 65.0;
        scale = std::max(scale, std::abs(cross(chord, curve.derivative(tau))));
    }
    for (const MarkedPoint& p : sup.points) {
        if (p.kind == PointKind::plateau) continue;
        if (std::abs(p.tau - t) < 1e-9 * t) continue;  // clamped endpoint
        double res = std::abs(cross(chord, curve.derivative(p.tau))) / scale;
        c.require(res < 1e-5, "interior support point fails the tangency equation");
    }
}

void check_phi_endpoints(Check& c, const Curve& curve, double t) {
    double at_a = phi_value(curve, t, curve.domain().a);
    double at_t = phi_value(curve, t, t);
    c.require(at_a == 0.0 && at_t == 0.0, "Phi not zero at the chord endpoints");
}

void check_arclength_props(Check& c, const Curve& curve) {
    double t0 = 0.1, t1 = 0.7, t2 = 1.3;
    double l01 = curve.arc_length(t0, t1);
    double l12 = curve.arc_length(t1, t2);
    double l02 = curve.arc_length(t0, t2);
    c.require(std::abs(l02 - (l01 + l12)) < 5e-9, "arc length not additive");
    double chord = (curve.point(t1) - curve.point(t0)).norm();
    c.require(l01 >= chord - 1e-9, "arc length below the chord length");
}

void check_meanvalue_props(Check& c) {
    FunctionPair pair;
    pair.g = [](double t) { return std::sin(t); };
    pair.h = [](double t) { return t; };
    pair.dg = [](double t) { return std::cos(t); };
    pair.dh = [](double) { return 1.0; };
    pair.a = 0.0;
    pair.b = 3.0;
    double x = 2.0;
    MeanValueResult xi = xi_cauchy(pair, x);
    double oracle = std::acos(std::sin(x) / x);
    c.require_close(xi.tau, oracle, 1e-9, "Cauchy point vs closed form");
    c.require(xi.residual < 1e-8, "Cauchy residual too large");

    // maximality surrogate: no sign change of the residual right of tau
    double gx = std::sin(x);
    auto res = [&](double tt) { return std::cos(tt) * x - gx; };
    int sign = 0;
    bool flips = false;
    for (int i = 0; i < 10000; i++) {
        double tt = xi.tau + 1e-6 + (x - xi.tau - 1e-6) * i / 9999.0;
        double v = res(tt);
        int s = v > 0.0 ? 1 : v < 0.0 ? -1 : 0;
        if (s != 0 && sign != 0 && s != sign) flips = true;
        if (s != 0) sign = s;
    }
    c.require(!flips, "residual changes sign right of the Cauchy point");

    MeanValueResult mu = mu_point(pair, x);
    c.require(mu.residual < 1e-6, "mu bracket did not shrink");
    c.require(xi.tau >= mu.tau - 1e-6, "xi < mu violates the ordering");
}

void check_oracle_equivalence(Check& c) {
    std::mt19937 rng(20240817u);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_real_distribution<double> freq(2.0, 9.0);

    for (int k = 0; k < 20 && c.ok; k++) {
        double a1 = coef(rng), a2 = coef(rng), a3 = coef(rng);
        double b1 = 0.5 * coef(rng), w = freq(rng);
        auto f = [=](double t) {
            return a1 * t + a2 * t * t + a3 * t * t * t + b1 * std::sin(w * t);
        };
        Curve curve = Curve::graph(f, Domain{0.0, 2.0});
        double t = 1.0;
        if (curve.distance_from_start(t) < 1e-6) continue;

        ChordReport rep = find_support_set(curve, t);

        // brute force: 10^6-point grid with parabolic sharpening
        Point2 o = curve.start();
        Vec2 chord = curve.point(t) - o;
        auto phi = [&](double tau) { return cross(chord, curve.point(tau) - o); };
        const int n = 1000000;
        std::vector<double> brute;
        double h = t / n;
        double fm = phi(0.0), f0 = phi(h);
        for (int i = 1; i < n; i++) {
            double fp = phi((i + 1) * h);
            if ((f0 - fm) * (fp - f0) < 0.0) {
                double denom = fm - 2.0 * f0 + fp;
                double off = denom != 0.0 ? 0.5 * (fm - fp) / denom : 0.0;
                brute.push_back((i + off) * h);
            }
            fm = f0;
            f0 = fp;
        }
        for (const MarkedPoint& p : rep.points) {
            if (p.kind == PointKind::plateau) continue;
            if (std::abs(p.tau - t) < 2.0 * h) continue;  // endpoint: grid-blind
            double best = 1e9;
            for (double b : brute) best = std::min(best, std::abs(b - p.tau));
            c.require(best < 1e-6,
                      "support point not matched by the brute-force oracle");
        }
        for (double b : brute) {
            double best = 1e9;
            for (const MarkedPoint& p : rep.points) {
                best = std::min(best, std::abs(b - p.tau));
            }
            c.require(best < 1e-6, "oracle extremum missed by find_support_set");
        }
    }
}

Check criterion8() {
    Check c;
    Curve parabola = Curve::graph([](double t) { return t * t; }, Domain{0.0, 10.0},
                                  RealFn([](double t) { return 2.0 * t; }));
    Curve circle = Curve::cartesian([](double t) { return std::sin(t); },
                                    [](double t) { return 1.0 - std::cos(t); },
                                    Domain{0.0, 2.0 * M_PI},
                                    RealFn([](double t) { return std::cos(t); }),
                                    RealFn([](double t) { return std::sin(t); }));

    for (double t : {0.5, 1.0, 2.0}) {
        check_s_in_t(c, parabola, t);
        check_s_in_t(c, circle, t);
        check_phi_endpoints(c, parabola, t);
        check_phi_endpoints(c, circle, t);
    }
    check_invariance(c, circle, 2.0);
    check_arclength_props(c, parabola);
    check_arclength_props(c, circle);
    check_meanvalue_props(c);
    check_oracle_equivalence(c);
    return c;
}

// ---- criterion 9: L/D limits -----------------------------------------------

Check criterion9() {
    Check c;
    SequenceSpec seq;
    seq.a = 0.0;
    seq.t0 = 1.0;
    seq.ratio = 0.7;
    seq.count = 48;

    std::vector<std::pair<std::string, Curve>> smooth;
    smooth.emplace_back("parabola",
                        Curve::graph([](double t) { return t * t; },
                                     Domain{0.0, 10.0},
                                     RealFn([](double t) { return 2.0 * t; })));
    smooth.emplace_back(
        "circle", Curve::cartesian([](double t) { return std::sin(t); },
                                   [](double t) { return 1.0 - std::cos(t); },
                                   Domain{0.0, 2.0 * M_PI},
                                   RealFn([](double t) { return std::cos(t); }),
                                   RealFn([](double t) { return std::sin(t); })));
    smooth.emplace_back(
        "cubic", Curve::cartesian([](double t) { return t; },
                                  [](double t) { return t * t * t - t; },
                                  Domain{0.0, 1.5},
                                  RealFn([](double) { return 1.0; }),
                                  RealFn([](double t) { return 3.0 * t * t - 1.0; })));
    for (auto& [name, curve] : smooth) {
        Eq6Report rep = eq6_check(curve, make_sequence(seq, curve.domain()));
        c.require(rep.tends_to_one, name + ": L/D does not reach the 1e-4 band");
    }

    CurveEntry spiral = make_ex1(1.0);
    std::vector<double> ts = make_sequence(spiral.seq, spiral.curve.domain());
    ts.resize(12);  // modest range is plenty for a constant ratio
    Eq6Report rep = eq6_check(spiral.curve, ts);
    for (auto& [t, ld] : rep.samples) {
        c.require(std::abs(ld - std::sqrt(2.0)) < 1e-6,
                  "log spiral L/D differs from sqrt(2)");
    }
    c.require(!rep.tends_to_one, "log spiral misclassified as satisfying L ~ D");
    return c;
}

} // namespace

std::vector<CriterionResult> run_acceptance() {
    struct Entry {
        int id;
        const char* name;
        Check (*fn)();
    };
    const Entry entries[] = {
        {1, "Example 1 closed form, every sample", criterion1},
        {2, "Example 2 tail estimates", criterion2},
        {3, "Example 3 decrease toward 1/e", criterion3},
        {4, "universal 1/e bound over the catalog", criterion4},
        {5, "Remark-4.1 constant Cauchy ratio", criterion5},
        {6, "Lagrange equality-case function", criterion6},
        {7, "weighted mean value, power weights", criterion7},
        {8, "property suites and brute-force oracle", criterion8},
        {9, "arc-length vs distance limits", criterion9},
    };

    std::vector<CriterionResult> out;
    for (const Entry& e : entries) {
        CriterionResult r;
        r.id = e.id;
        r.name = e.name;
        auto start = std::chrono::steady_clock::now();
        try {
            Check c = e.fn();
            r.pass = c.ok;
            r.detail = c.ok ? "ok" : c.why.str();
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        r.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        out.push_back(std::move(r));
    }
    return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results) {
        if (!r.pass) return false;
    }
    return true;
}

} // namespace curveasym
