#include "curveasym/quadrature.hpp"
#include "curveasym/errors.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace curveasym {

namespace {

// One interval with a five-point Simpson/Richardson state.
struct Panel {
    double a, b;
    double fa, fq1, fm, fq3, fb;
    double value;  // extrapolated two-panel Simpson
    double err;    // |S2 - S1| / 15

    static Panel make(const RealFn& f, double a, double b,
                      double fa, double fm, double fb) {
        Panel p;
        p.a = a;
        p.b = b;
        p.fa = fa;
        p.fm = fm;
        p.fb = fb;
        double h = b - a;
        p.fq1 = f(a + 0.25 * h);
        p.fq3 = f(a + 0.75 * h);
        double s1 = (h / 6.0) * (fa + 4.0 * fm + fb);
        double s2 = (h / 12.0) * (fa + 4.0 * p.fq1 + 2.0 * fm + 4.0 * p.fq3 + fb);
        p.err = std::abs(s2 - s1) / 15.0;
        p.value = s2 + (s2 - s1) / 15.0;
        return p;
    }
};

struct PanelWorse {
    bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

} // namespace

double adaptive_simpson(const RealFn& f, double a, double b, const QuadOptions& opt) {
    if (!(a < b)) {
        if (a == b) return 0.0;
        throw input_error("adaptive_simpson: inverted interval");
    }
    const double min_width = (b - a) * std::ldexp(1.0, -opt.max_halvings);

    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> active;
    double settled_value = 0.0;  // panels too narrow to split
    double settled_err = 0.0;
    double active_value = 0.0;
    double active_err = 0.0;
    int n_panels = 1;

    {
        double fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
        Panel root = Panel::make(f, a, b, fa, fm, fb);
        active_value = root.value;
        active_err = root.err;
        active.push(root);
    }

    while (!active.empty() && settled_err + active_err > opt.abs_tol) {
        if (n_panels >= opt.max_intervals) {
            throw accuracy_error("adaptive_simpson: interval budget exhausted",
                                 settled_value + active_value);
        }
        Panel p = active.top();
        active.pop();
        active_value -= p.value;
        active_err -= p.err;

        double m = 0.5 * (p.a + p.b);
        if (p.b - p.a <= min_width || m <= p.a || m >= p.b) {
            settled_value += p.value;
            settled_err += p.err;
            continue;
        }
        Panel left = Panel::make(f, p.a, m, p.fa, p.fq1, p.fm);
        Panel right = Panel::make(f, m, p.b, p.fm, p.fq3, p.fb);
        n_panels++;
        active_value += left.value + right.value;
        active_err += left.err + right.err;
        active.push(left);
        active.push(right);
    }

    double total = settled_value + active_value;
    if (settled_err + active_err > opt.abs_tol) {
        throw accuracy_error("adaptive_simpson: tolerance not reached", total);
    }
    if (!std::isfinite(total)) {
        throw accuracy_error("adaptive_simpson: non-finite result", total);
    }
    return total;
}

double adaptive_simpson_rel(const RealFn& f, double a, double b,
                            double rel_tol, double abs_floor) {
    QuadOptions rough;
    rough.abs_tol = 1e-6;
    double first;
    try {
        first = adaptive_simpson(f, a, b, rough);
    } catch (const accuracy_error& e) {
        first = e.best_estimate;
    }
    QuadOptions fine;
    fine.abs_tol = std::max(abs_floor, rel_tol * std::abs(first));
    return adaptive_simpson(f, a, b, fine);
}

} // namespace curveasym
