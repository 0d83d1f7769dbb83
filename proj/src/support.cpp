#include "curveasym/support.hpp"
#include "curveasym/quadrature.hpp"
#include "curveasym/scan.hpp"

#include <algorithm>
#include <cmath>

namespace curveasym {

namespace {

constexpr double kDegenerateFloor = 1e-280;

double auto_refine_tol(double refine_tol, double t, double a_eff) {
    return refine_tol > 0.0 ? refine_tol : 1e-10 * (t - a_eff);
}

void require_chord_param(const Curve& curve, double t) {
    if (!curve.domain().contains_open(t)) {
        throw input_error("chord parameter outside (a, b)");
    }
}

/// Max of D over k+1 uniform samples of [lo, hi], plus its argmax.
std::pair<double, double> max_distance_on(const Curve& curve, double lo, double hi,
                                          int k = 128) {
    double best_d = -1.0, best_tau = lo;
    for (int i = 0; i <= k; i++) {
        double tau = lo + (hi - lo) * i / k;
        double d = curve.distance_from_start(tau);
        if (d > best_d) {
            best_d = d;
            best_tau = tau;
        }
    }
    return {best_d, best_tau};
}

} // namespace

double effective_left(const Curve& curve, double t, const SupportSettings& s) {
    if (!std::isnan(s.a_eff_override)) return s.a_eff_override;
    const Domain& d = curve.domain();
    if (!d.infinite_a()) return d.a;
    return t - s.left_window;
}

double phi_value(const Curve& curve, double t, double tau) {
    Point2 o = curve.start();
    return cross(curve.point(t) - o, curve.point(tau) - o);
}

ChordReport find_support_set(const Curve& curve, double t,
                             int n_grid, double refine_tol,
                             const SupportSettings& settings) {
    require_chord_param(curve, t);
    if (n_grid < 16) throw input_error("find_support_set: n_grid must be >= 16");

    ChordReport rep;
    rep.t = t;
    rep.d_t = curve.distance_from_start(t);
    if (rep.d_t <= kDegenerateFloor) {
        // S(t) = (a, t] for a degenerate chord; DS/D is unbounded
        rep.degenerate = true;
        rep.ds = std::numeric_limits<double>::infinity();
        return rep;
    }

    const double a_eff = effective_left(curve, t, settings);
    const double tol = auto_refine_tol(refine_tol, t, a_eff);

    Point2 o = curve.start();
    Vec2 chord = curve.point(t) - o;
    auto phi = [&](double tau) { return cross(chord, curve.point(tau) - o); };

    ScanOptions opt;
    opt.n_grid = n_grid;
    opt.refine_tol = tol;
    opt.hard_hi = curve.domain().b;
    ScanResult scan = scan_extrema(phi, a_eff, t, opt);

    if (scan.all_plateau) {
        auto [dmax, arg] = max_distance_on(curve, a_eff, t);
        rep.points.push_back({arg, PointKind::plateau, dmax, 0.0, {a_eff, t}});
        rep.ds = dmax;
        return rep;
    }

    for (const FoundExtremum& e : scan.extrema) {
        MarkedPoint p;
        p.tau = e.tau;
        p.kind = e.is_max ? PointKind::support_max : PointKind::support_min;
        p.d_tau = curve.distance_from_start(e.tau);
        p.residual = e.width;
        p.bracket = {e.bracket_lo, e.bracket_hi};
        rep.points.push_back(p);
    }
    for (const FoundPlateau& pl : scan.plateaus) {
        auto [dmax, arg] = max_distance_on(curve, pl.lo, pl.hi);
        rep.points.push_back({arg, PointKind::plateau, dmax, 0.0, {pl.lo, pl.hi}});
    }
    std::sort(rep.points.begin(), rep.points.end(),
              [](const MarkedPoint& a, const MarkedPoint& b) { return a.tau < b.tau; });

    if (rep.points.empty()) {
        throw resolution_error(
            "find_support_set: no extremum resolved; increase n_grid");
    }
    rep.ds = 0.0;
    for (const MarkedPoint& p : rep.points) rep.ds = std::max(rep.ds, p.d_tau);
    return rep;
}

ChordReport find_tangent_set(const Curve& curve, double t,
                             int n_grid, double refine_tol,
                             const SupportSettings& settings) {
    require_chord_param(curve, t);
    if (n_grid < 16) throw input_error("find_tangent_set: n_grid must be >= 16");

    ChordReport rep;
    rep.t = t;
    rep.d_t = curve.distance_from_start(t);
    if (rep.d_t <= kDegenerateFloor) {
        rep.degenerate = true;
        rep.dt_sup = std::numeric_limits<double>::infinity();
        return rep;
    }

    const double a_eff = effective_left(curve, t, settings);
    const double tol = auto_refine_tol(refine_tol, t, a_eff);

    Point2 o = curve.start();
    Vec2 chord = curve.point(t) - o;
    auto r = [&](double tau) { return cross(chord, curve.derivative(tau)); };

    // natural magnitude of r, so "everywhere zero" means zero relative to it
    double speed = 0.0;
    for (int i = 1; i <= 32; i++) {
        speed = std::max(speed,
                         curve.derivative(a_eff + (t - a_eff) * i / 33.0).norm());
    }
    // gamma' need not extend to a itself: scan a sliver inside the open end
    double lo = a_eff + (t - a_eff) * 1e-9;
    RootScan roots = scan_roots(r, lo, t, n_grid, tol,
                                1e-12 * chord.norm() * speed);
    if (roots.all_zero) {
        // derivative everywhere collinear with the chord: straight segment
        auto [dmax, arg] = max_distance_on(curve, a_eff, t);
        rep.points.push_back({arg, PointKind::plateau, dmax, 0.0, {a_eff, t}});
        rep.dt_sup = dmax;
        return rep;
    }

    for (double tau : roots.roots) {
        if (tau <= a_eff) continue;  // the interval is open at the left end
        MarkedPoint p;
        p.tau = tau;
        p.kind = PointKind::tangent_root;
        p.d_tau = curve.distance_from_start(tau);
        p.residual = std::abs(r(tau)) / roots.scale;
        p.bracket = {tau - tol, tau + tol};
        rep.points.push_back(p);
    }
    if (rep.points.empty()) {
        throw resolution_error(
            "find_tangent_set: no tangency root bracketed; increase n_grid");
    }
    rep.dt_sup = 0.0;
    for (const MarkedPoint& p : rep.points) rep.dt_sup = std::max(rep.dt_sup, p.d_tau);
    return rep;
}

std::vector<double> tangent_set_polar(const Curve& curve, double t, int n_max,
                                      const SupportSettings& settings) {
    if (curve.kind() != CurveKind::polar) {
        throw capability_error("tangent_set_polar requires a polar curve");
    }
    require_chord_param(curve, t);

    const double a_eff = effective_left(curve, t, settings);
    const double tol = auto_refine_tol(settings.refine_tol, t, a_eff);

    std::function<double(double)> eq;
    if (curve.has_log_form()) {
        // divide through by rho > 0; same roots, no under/overflow
        eq = [&curve, t](double tau) {
            return std::cos(t - tau) - curve.dlog_rho(tau) * std::sin(t - tau);
        };
    } else {
        eq = [&curve, t](double tau) {
            return curve.rho(tau) * std::cos(t - tau) -
                   curve.drho(tau) * std::sin(t - tau);
        };
    }

    double mag = 0.0;
    for (int i = 1; i <= 32; i++) {
        mag = std::max(mag, std::abs(eq(a_eff + (t - a_eff) * i / 33.0)));
    }
    RootScan roots = scan_roots(eq, a_eff, t, settings.n_grid, tol, 1e-12 * mag);
    std::vector<double> out;
    if (roots.all_zero) return out;
    for (auto it = roots.roots.rbegin(); it != roots.roots.rend(); ++it) {
        if (static_cast<int>(out.size()) >= n_max) break;
        if (*it <= a_eff) continue;  // the interval is open at the left end
        out.push_back(*it);
    }
    return out;
}

PolarChordRatios polar_chord_ratios(const Curve& curve, double t,
                                    const SupportSettings& settings) {
    if (!curve.has_log_form()) {
        throw capability_error("polar_chord_ratios requires a log-form polar curve");
    }
    require_chord_param(curve, t);

    const double a_eff = effective_left(curve, t, settings);
    const double window = t - a_eff;
    const double tol = auto_refine_tol(settings.refine_tol, t, a_eff);

    // tangency equation in the offset delta = t - tau
    auto eq = [&curve, t](double delta) {
        return std::cos(delta) - curve.dlog_rho(t - delta) * std::sin(delta);
    };

    // bisect to the floating-point floor: offsets are small in magnitude, so
    // full precision here is cheap and keeps D-ratios sharp at huge |t|
    RootScan roots = scan_roots(eq, 0.0, window, settings.n_grid, 0.0);
    (void)tol;
    PolarChordRatios out;
    for (auto it = roots.roots.begin(); it != roots.roots.end(); ++it) {
        double delta = *it;
        if (delta <= 0.0) continue;  // tau = t itself is never a root: eq(0) = 1
        // log D(tau) - log D(t) integrated in offset space
        double dlog = adaptive_simpson(
            [&curve, t](double u) { return -curve.dlog_rho(t - u); }, 0.0, delta,
            1e-13 * std::max(1.0, delta));
        out.deltas.push_back(delta);
        out.point_ratios.push_back(std::exp(dlog));
    }
    if (out.deltas.empty()) {
        throw resolution_error("polar_chord_ratios: no tangency root bracketed");
    }
    out.ratio = *std::max_element(out.point_ratios.begin(), out.point_ratios.end());
    return out;
}

} // namespace curveasym
