#pragma once

#include <functional>
#include <vector>

namespace curveasym {

/// Grid scan of a continuous function for local extrema and plateaus.
///
/// Samples on [lo, hi] plus a few probe points beyond hi (up to hard_hi) so
/// that an extremum sitting exactly at hi is judged two-sidedly. Detected
/// extrema are refined derivative-free by ternary search.
struct ScanOptions {
    int n_grid = 4096;
    double refine_tol = 1e-12;
    int extend_steps = 8;
    double hard_hi = 0.0;      // samples never reach hard_hi; 0 means "hi"
    double plateau_eps = 1e-12;
};

struct FoundExtremum {
    double tau = 0.0;
    bool is_max = false;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double width = 0.0;  // final bracket width
};

struct FoundPlateau {
    double lo = 0.0;
    double hi = 0.0;
};

struct ScanResult {
    std::vector<FoundExtremum> extrema;   // tau <= hi, in increasing tau order
    std::vector<FoundPlateau> plateaus;   // clipped to [lo, hi]
    bool all_plateau = false;             // f constant on the whole grid
    double scale = 0.0;                   // max |f| over the grid
};

ScanResult scan_extrema(const std::function<double(double)>& f,
                        double lo, double hi, const ScanOptions& opt);

/// Refine a bracketed extremum of f by ternary search. Stops at width
/// <= tol and then keeps shrinking while samples still resolve the
/// function, which pins smooth extrema down to the noise floor.
double ternary_refine(const std::function<double(double)>& f,
                      double lo, double hi, bool is_max, double tol,
                      double* width_out = nullptr);

struct RootScan {
    std::vector<double> roots;  // increasing
    bool all_zero = false;      // |f| below noise threshold everywhere
    double scale = 0.0;
};

/// Bracketing root finder: sign changes between grid samples refined by
/// bisection. Roots of even multiplicity (no sign change) are invisible.
/// all_zero fires when max |f| over the grid is <= zero_eps; the default
/// accepts only an exact zero, since |f|'s natural magnitude is the
/// caller's to judge.
RootScan scan_roots(const std::function<double(double)>& f,
                    double lo, double hi, int n_grid, double tol,
                    double zero_eps = 0.0);

/// Bisection on a bracket with f(a)*f(b) <= 0.
double bisect(const std::function<double(double)>& f,
              double a, double b, double tol);

} // namespace curveasym
