#pragma once

#include <functional>

namespace curveasym {

using RealFn = std::function<double(double)>;

struct QuadOptions {
    double abs_tol = 1e-9;
    // Intervals narrower than (b-a)*2^-max_halvings are never split further.
    int max_halvings = 60;
    int max_intervals = 200000;
};

/// Globally adaptive Simpson integration of f over [a, b].
/// Worst intervals are bisected first until the summed error estimate
/// meets abs_tol. Throws accuracy_error (carrying the best estimate)
/// when the budget is exhausted first.
double adaptive_simpson(const RealFn& f, double a, double b, const QuadOptions& opt = {});

inline double adaptive_simpson(const RealFn& f, double a, double b, double abs_tol) {
    QuadOptions opt;
    opt.abs_tol = abs_tol;
    return adaptive_simpson(f, a, b, opt);
}

/// Two-pass wrapper: a rough pass fixes the magnitude, the second pass
/// integrates to rel_tol of it (never below abs_floor).
double adaptive_simpson_rel(const RealFn& f, double a, double b,
                            double rel_tol, double abs_floor = 1e-300);

} // namespace curveasym
