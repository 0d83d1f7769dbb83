#include "curveasym/meanvalue.hpp"
#include "curveasym/quadrature.hpp"
#include "curveasym/scan.hpp"

#include <algorithm>
#include <cmath>

namespace curveasym {

namespace {

void require_in_range(const FunctionPair& pair, double x) {
    if (!(x > pair.a && x < pair.b)) {
        throw input_error("mean-value point x outside (a, b)");
    }
}

MeanValueResult make_result(const FunctionPair& pair, double x, double tau,
                            double residual, bool plateau_at_x = false) {
    MeanValueResult r;
    r.x = x;
    r.tau = tau;
    r.residual = residual;
    r.plateau_at_x = plateau_at_x;
    double dh = pair.h(x) - pair.h(pair.a);
    r.ratio_h = dh != 0.0 ? (pair.h(tau) - pair.h(pair.a)) / dh
                          : std::numeric_limits<double>::quiet_NaN();
    r.ratio_t = (tau - pair.a) / (x - pair.a);
    return r;
}

} // namespace

std::optional<std::string> validate_pair(const FunctionPair& pair, double x) {
    require_in_range(pair, x);

    const int n = 256;
    double scale = 0.0;
    std::vector<double> hv(n + 1);
    for (int i = 0; i <= n; i++) {
        double t = pair.a + (x - pair.a) * i / n;
        hv[i] = pair.h(t);
        scale = std::max(scale, std::abs(hv[i]));
    }
    for (int i = 0; i < n; i++) {
        if (!(hv[i + 1] > hv[i] - 1e-14 * scale)) {
            throw input_error("h is not increasing on the sampled grid");
        }
    }

    // does (g - g(a)) / (h - h(a)) settle on a shrinking grid?
    double ga = pair.g(pair.a), ha = pair.h(pair.a);
    double prev = std::numeric_limits<double>::quiet_NaN();
    double last_step = 0.0;
    int settled = 0;
    for (int k = 1; k <= 20; k++) {
        double xk = pair.a + (x - pair.a) * std::pow(0.25, k);
        double dh = pair.h(xk) - ha;
        if (std::abs(dh) < 1e-13 * std::max(scale, 1.0)) break;
        double q = (pair.g(xk) - ga) / dh;
        if (!std::isnan(prev)) {
            last_step = std::abs(q - prev);
            if (last_step <= 1e-6 * (1.0 + std::abs(q))) settled++;
        }
        prev = q;
    }
    if (settled == 0 && !std::isnan(prev)) {
        return "the quotient (g-g(a))/(h-h(a)) has not settled near a; "
               "the finite-limit hypothesis may fail";
    }
    return std::nullopt;
}

MeanValueResult mu_point(const FunctionPair& pair, double x,
                         int n_grid, double tol) {
    require_in_range(pair, x);
    double gx = pair.g(x) - pair.g(pair.a);
    double hx = pair.h(x) - pair.h(pair.a);
    auto psi = [&](double t) { return gx * pair.h(t) - hx * pair.g(t); };

    ScanOptions opt;
    opt.n_grid = n_grid;
    opt.refine_tol = tol * (x - pair.a);
    opt.hard_hi = pair.b;
    ScanResult scan = scan_extrema(psi, pair.a, x, opt);

    if (scan.all_plateau) {
        // Psi constant: every point is extremal, the supremum is x
        return make_result(pair, x, x, 0.0, true);
    }

    double tau = std::numeric_limits<double>::quiet_NaN();
    double residual = 0.0;
    for (const FoundExtremum& e : scan.extrema) {
        if (std::isnan(tau) || e.tau > tau) {
            tau = e.tau;
            residual = e.width;
        }
    }
    for (const FoundPlateau& pl : scan.plateaus) {
        if (std::isnan(tau) || pl.hi > tau) {
            tau = pl.hi;
            residual = 0.0;
        }
    }
    if (std::isnan(tau)) {
        throw resolution_error("mu_point: no extremum resolved; increase n_grid");
    }
    return make_result(pair, x, tau, residual);
}

MeanValueResult xi_cauchy(const FunctionPair& pair, double x,
                          double tol, int n_grid) {
    require_in_range(pair, x);
    if (!pair.dg || !pair.dh) {
        throw capability_error("xi_cauchy requires dg and dh");
    }
    double gx = pair.g(x) - pair.g(pair.a);
    double hx = pair.h(x) - pair.h(pair.a);
    const RealFn& dg = *pair.dg;
    const RealFn& dh = *pair.dh;
    auto res = [&](double t) { return dg(t) * hx - dh(t) * gx; };

    // stay a sliver inside (a, x): derivatives need not extend to a itself
    double lo = pair.a + (x - pair.a) * 1e-12;
    // natural magnitude of the residual, for the "everywhere zero" call
    double nat = 0.0;
    for (int i = 1; i <= 32; i++) {
        double tt = lo + (x - lo) * i / 33.0;
        nat = std::max(nat, std::abs(dg(tt) * hx) + std::abs(dh(tt) * gx));
    }
    RootScan roots = scan_roots(res, lo, x, n_grid, tol * (x - pair.a),
                                1e-12 * nat);
    if (roots.all_zero) {
        // degenerate equation (g affine in h): every tau solves; sup is x
        return make_result(pair, x, x, 0.0, true);
    }
    if (roots.roots.empty()) {
        throw resolution_error(
            "xi_cauchy: no sign change of the residual; increase n_grid");
    }
    double tau = roots.roots.back();
    double residual = std::abs(res(tau)) / roots.scale;
    return make_result(pair, x, tau, residual);
}

MeanValueResult xi_lagrange(RealFn g, RealFn dg, double a, double x,
                            double tol, int n_grid) {
    FunctionPair pair;
    pair.g = std::move(g);
    pair.h = [](double t) { return t; };
    pair.dg = std::move(dg);
    pair.dh = [](double) { return 1.0; };
    pair.a = a;
    pair.b = x + (x - a);  // only the (a, x) range is probed
    return xi_cauchy(pair, x, tol, n_grid);
}

MeanValueResult eta_integral(RealFn f, RealFn w, double x,
                             double quad_tol, double tol, int n_grid) {
    if (!(x > 0.0)) throw input_error("eta_integral requires x > 0");
    double wsum = adaptive_simpson_rel(w, 0.0, x, quad_tol);
    if (!(wsum > 0.0)) {
        throw input_error("eta_integral: weight integrates to a non-positive value");
    }
    double wf = adaptive_simpson_rel([&](double t) { return w(t) * f(t); },
                                     0.0, x, quad_tol);
    double m = wf / wsum;

    auto res = [&](double t) { return f(t) - m; };
    double lo = x * 1e-12;
    double nat = std::abs(m);
    for (int i = 1; i <= 32; i++) {
        nat = std::max(nat, std::abs(f(lo + (x - lo) * i / 33.0)));
    }
    RootScan roots = scan_roots(res, lo, x, n_grid, tol * x, 1e-12 * nat);

    FunctionPair pr;
    pr.g = f;
    pr.h = [](double t) { return t; };
    pr.a = 0.0;
    pr.b = 2.0 * x;
    if (roots.all_zero) {
        // f coincides with its mean on the whole window: eta = x
        return make_result(pr, x, x, 0.0, true);
    }
    if (roots.roots.empty()) {
        throw resolution_error("eta_integral: no crossing of the mean resolved");
    }
    double tau = roots.roots.back();
    double residual = std::abs(res(tau)) / roots.scale;
    return make_result(pr, x, tau, residual);
}

CEstimate estimate_C(const RealFn& h, const RealFn& dh, double a,
                     const std::vector<double>& seq, int window) {
    if (window < 1) throw input_error("estimate_C window must be >= 1");
    CEstimate est;
    double ha = h(a);
    for (double x : seq) {
        double d = dh(x);
        if (d == 0.0) {
            est.skipped++;
            continue;
        }
        double q = (h(x) - ha) / ((x - a) * d);
        est.sup_grid.emplace_back(x, q);
    }
    est.samples_used = static_cast<int>(est.sup_grid.size());
    if (est.samples_used == 0) {
        throw resolution_error("estimate_C: every sample had h'(x) = 0");
    }
    std::size_t tail = std::min<std::size_t>(est.sup_grid.size(), window);
    est.value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = est.sup_grid.size() - tail; i < est.sup_grid.size(); i++) {
        est.value = std::max(est.value, est.sup_grid[i].second);
    }
    return est;
}

MeanValueTrace meanvalue_trace(const MeanValueProblem& problem,
                               const std::vector<double>& seq,
                               int window, double epsilon) {
    if (seq.empty()) throw input_error("meanvalue_trace: empty sequence");
    using Kind = MeanValueProblem::Kind;

    MeanValueTrace trace;
    if (problem.kind == Kind::mu || problem.kind == Kind::xi_cauchy) {
        trace.warning = validate_pair(problem.pair, seq.front());
    }

    for (double x : seq) {
        try {
            MeanValueResult r;
            switch (problem.kind) {
                case Kind::mu:
                    r = mu_point(problem.pair, x, problem.n_grid, problem.tol);
                    break;
                case Kind::xi_cauchy:
                    r = xi_cauchy(problem.pair, x, problem.tol, problem.n_grid);
                    break;
                case Kind::xi_lagrange:
                    r = xi_lagrange(problem.pair.g, *problem.pair.dg,
                                    problem.pair.a, x, problem.tol,
                                    problem.n_grid);
                    break;
                case Kind::eta:
                    r = eta_integral(problem.f, problem.w, x, problem.quad_tol,
                                     problem.tol, problem.n_grid);
                    break;
            }
            trace.samples.push_back(r);
        } catch (const error& e) {
            trace.failures.push_back(e.what());
        }
    }
    if (trace.samples.empty()) {
        throw resolution_error("meanvalue_trace: every sample failed");
    }

    // funnel the ratios through the shared limsup estimator
    RatioTrace rt;
    for (const MeanValueResult& r : trace.samples) {
        TraceSample s;
        s.t = r.x;
        s.ratio_s = r.ratio_h;
        s.ratio_t = r.ratio_t;
        rt.samples.push_back(s);
    }
    int w = std::min<int>(window, static_cast<int>(trace.samples.size()));
    w = std::max(w, 3);
    trace.est_ratio_h = limsup_estimate(rt, w, RatioChannel::support);
    trace.est_ratio_t = limsup_estimate(rt, w, RatioChannel::tangent);

    trace.verdict_h = check_universal_bound(trace.est_ratio_h, epsilon);

    // ratio_t bound is e^{-C}; C needs a derivative route for h
    trace.c_estimate = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> xs;
    for (const MeanValueResult& r : trace.samples) xs.push_back(r.x);
    if (problem.kind == Kind::eta) {
        // Theorem-4.4 form: h(x) = integral of the weight over [0, x]
        RealFn w_fn = problem.w;
        double qt = problem.quad_tol;
        RealFn hint = [w_fn, qt](double x) {
            return x == 0.0 ? 0.0 : adaptive_simpson_rel(w_fn, 0.0, x, qt);
        };
        trace.c_estimate = estimate_C(hint, w_fn, 0.0, xs, w).value;
    } else if (problem.kind == Kind::xi_lagrange) {
        trace.c_estimate = 1.0;  // h = identity
    } else if (problem.pair.dh) {
        trace.c_estimate =
            estimate_C(problem.pair.h, *problem.pair.dh, problem.pair.a, xs, w)
                .value;
    }

    if (std::isnan(trace.c_estimate)) {
        trace.verdict_t = Verdict::inconclusive;
    } else {
        double bound = std::exp(-trace.c_estimate);
        const LimsupEstimate& et = trace.est_ratio_t;
        if (et.unbounded || et.value >= bound - epsilon) {
            trace.verdict_t = Verdict::holds;
        } else if (et.trend == Trend::rising) {
            trace.verdict_t = Verdict::inconclusive;
        } else {
            trace.verdict_t = Verdict::violated;
        }
    }
    return trace;
}

} // namespace curveasym
