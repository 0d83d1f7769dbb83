#include "curveasym/scan.hpp"
#include "curveasym/errors.hpp"

#include <algorithm>
#include <cmath>

namespace curveasym {

double ternary_refine(const std::function<double(double)>& f,
                      double lo, double hi, bool is_max, double tol,
                      double* width_out) {
    const double sign = is_max ? 1.0 : -1.0;
    int stalled = 0;
    for (int iter = 0; iter < 200; iter++) {
        double w = hi - lo;
        if (!(w > 0.0)) break;
        double m1 = lo + w / 3.0;
        double m2 = hi - w / 3.0;
        if (!(lo < m1 && m1 < m2 && m2 < hi)) break;
        double f1 = sign * f(m1);
        double f2 = sign * f(m2);
        if (f1 < f2) {
            lo = m1;
        } else if (f1 > f2) {
            hi = m2;
        } else {
            lo = m1;
            hi = m2;
            // past the requested tolerance, identical samples mean the
            // noise floor; a couple of confirmations and we stop
            if (w <= tol && ++stalled >= 3) break;
        }
        if (hi - lo <= tol && f1 == f2) break;
    }
    if (width_out) *width_out = hi - lo;
    return 0.5 * (lo + hi);
}

ScanResult scan_extrema(const std::function<double(double)>& f,
                        double lo, double hi, const ScanOptions& opt) {
    if (!(lo < hi)) throw input_error("scan_extrema: empty interval");
    if (opt.n_grid < 16) throw input_error("scan_extrema: n_grid must be >= 16");

    const int n = opt.n_grid;
    const double h = (hi - lo) / n;

    // probe points beyond hi so hi itself is judged as an interior point
    int m = 0;
    if (opt.extend_steps > 0 && opt.hard_hi > hi) {
        while (m < opt.extend_steps && hi + (m + 1) * h < opt.hard_hi) m++;
    }

    std::vector<double> tau(n + m + 1), v(n + m + 1);
    for (int i = 0; i <= n + m; i++) {
        tau[i] = (i == n) ? hi : lo + i * h;
        v[i] = f(tau[i]);
    }

    ScanResult res;
    res.scale = 0.0;
    for (double x : v) res.scale = std::max(res.scale, std::abs(x));

    const double eps = opt.plateau_eps * res.scale;
    // diff signs: 0 marks a run flat to within plateau tolerance
    std::vector<int> s(n + m);
    bool any_nonzero = false;
    for (int i = 0; i < n + m; i++) {
        double d = v[i + 1] - v[i];
        s[i] = (std::abs(d) <= eps) ? 0 : (d > 0.0 ? 1 : -1);
        if (s[i] != 0) any_nonzero = true;
    }

    if (!any_nonzero) {
        res.all_plateau = true;
        res.plateaus.push_back({lo, hi});
        return res;
    }

    auto add_extremum = [&](int center, bool is_max, int bleft, int bright) {
        double blo = tau[std::max(bleft, 0)];
        double bhi = tau[std::min(bright, n + m)];
        double width = 0.0;
        double t = ternary_refine(f, blo, bhi, is_max, opt.refine_tol, &width);
        if (t > hi + opt.refine_tol) return;  // true extremum lies beyond hi
        t = std::min(t, hi);
        (void)center;
        res.extrema.push_back({t, is_max, blo, bhi, width});
    };

    // walk runs of equal diff sign
    int i = 0;
    int prev_sign = 0;  // last nonzero sign seen before position i
    while (i < n + m) {
        int j = i;
        while (j < n + m && s[j] == s[i]) j++;
        int run_sign = s[i];
        int run_len = j - i;
        if (run_sign == 0) {
            int next_sign = (j < n + m) ? s[j] : 0;
            bool straddles_flip = prev_sign != 0 && next_sign != 0 && prev_sign != next_sign;
            if (run_len == 1 && straddles_flip) {
                // a single flat diff between opposite slopes is just an
                // extremum straddling a grid node
                add_extremum(i, prev_sign > 0, i - 1, i + 2);
            } else {
                double plo = std::max(tau[i], lo);
                double phi = std::min(tau[j], hi);
                if (plo < phi) res.plateaus.push_back({plo, phi});
            }
        } else {
            if (prev_sign != 0 && prev_sign != run_sign) {
                // sign flip at sample index i: strict local extremum
                if (tau[i] <= hi + opt.refine_tol) {
                    add_extremum(i, prev_sign > 0, i - 1, i + 1);
                }
            }
            prev_sign = run_sign;
        }
        i = j;
    }

    std::sort(res.extrema.begin(), res.extrema.end(),
              [](const FoundExtremum& a, const FoundExtremum& b) { return a.tau < b.tau; });
    return res;
}

double bisect(const std::function<double(double)>& f,
              double a, double b, double tol) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw input_error("bisect: bracket does not straddle a root");
    for (int iter = 0; iter < 200 && b - a > tol; iter++) {
        double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        double fm = f(m);
        if (fm == 0.0) return m;
        if (fa * fm < 0.0) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

RootScan scan_roots(const std::function<double(double)>& f,
                    double lo, double hi, int n_grid, double tol,
                    double zero_eps) {
    if (!(lo < hi)) throw input_error("scan_roots: empty interval");
    if (n_grid < 16) throw input_error("scan_roots: n_grid must be >= 16");

    const int n = n_grid;
    std::vector<double> tau(n + 1), v(n + 1);
    const double h = (hi - lo) / n;
    for (int i = 0; i <= n; i++) {
        tau[i] = (i == n) ? hi : lo + i * h;
        v[i] = f(tau[i]);
    }

    RootScan res;
    for (double x : v) res.scale = std::max(res.scale, std::abs(x));
    if (res.scale <= zero_eps) {
        res.all_zero = true;
        return res;
    }

    const double node_eps = 1e-13 * res.scale;
    for (int i = 0; i < n; i++) {
        if (std::abs(v[i]) <= node_eps) {
            if (res.roots.empty() || tau[i] - res.roots.back() > h) {
                res.roots.push_back(tau[i]);
            }
        } else if (std::abs(v[i + 1]) > node_eps && v[i] * v[i + 1] < 0.0) {
            res.roots.push_back(bisect(f, tau[i], tau[i + 1], tol));
        }
    }
    if (std::abs(v[n]) <= node_eps &&
        (res.roots.empty() || tau[n] - res.roots.back() > h)) {
        res.roots.push_back(tau[n]);
    }
    return res;
}

} // namespace curveasym
