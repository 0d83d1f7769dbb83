#pragma once

#include "curveasym/asymptote.hpp"
#include "curveasym/curve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curveasym {

/// Two continuous functions on [a, b) with h increasing.
struct FunctionPair {
    RealFn g;
    RealFn h;
    std::optional<RealFn> dg;
    std::optional<RealFn> dh;
    double a = 0.0;
    double b = 1.0;
};

/// Checks that h strictly increases on a sample grid of (a, x] and that the
/// quotient (g-g(a))/(h-h(a)) settles on a shrinking grid. Returns a warning
/// string when the quotient drifts; throws input_error when h fails.
std::optional<std::string> validate_pair(const FunctionPair& pair, double x);

struct MeanValueResult {
    double x = 0.0;
    double tau = 0.0;      // the located mu / xi / eta
    double residual = 0.0; // defining-equation residual (normalized) or bracket width
    double ratio_h = 0.0;  // (h(tau)-h(a)) / (h(x)-h(a))
    double ratio_t = 0.0;  // (tau-a) / (x-a)
    bool plateau_at_x = false;
};

/// Largest local extremum parameter of
/// Psi(t) = (g(x)-g(a))h(t) - (h(x)-h(a))g(t) on (a, x].
MeanValueResult mu_point(const FunctionPair& pair, double x,
                         int n_grid = 2048, double tol = 1e-12);

/// Largest tau in (a, x) with g'(tau)(h(x)-h(a)) = h'(tau)(g(x)-g(a)),
/// found by a leftward scan from x for the first sign change. tol is
/// relative to (x - a).
MeanValueResult xi_cauchy(const FunctionPair& pair, double x,
                          double tol = 1e-13, int n_grid = 2048);

/// xi_cauchy with h = identity: g'(tau)(x-a) = g(x)-g(a).
MeanValueResult xi_lagrange(RealFn g, RealFn dg, double a, double x,
                            double tol = 1e-13, int n_grid = 2048);

/// Largest tau in (0, x] with f(tau) = (integral of w*f) / (integral of w).
MeanValueResult eta_integral(RealFn f, RealFn w, double x,
                             double quad_tol = 1e-12, double tol = 1e-13,
                             int n_grid = 2048);

/// Sampled surrogate of C = ess-limsup (h(x)-h(a)) / ((x-a) h'(x)).
/// Valid only when the quotient is piecewise continuous near a; the
/// caveat flag records that standing assumption.
struct CEstimate {
    double value = 0.0;
    int samples_used = 0;
    std::vector<std::pair<double, double>> sup_grid;  // (x, quotient)
    int skipped = 0;            // samples with h'(x) = 0
    bool continuity_caveat = true;
};

CEstimate estimate_C(const RealFn& h, const RealFn& dh, double a,
                     const std::vector<double>& seq, int window = 8);

struct MeanValueProblem {
    enum class Kind { mu, xi_cauchy, xi_lagrange, eta };
    Kind kind = Kind::xi_cauchy;
    FunctionPair pair;            // mu / xi kinds
    RealFn f, w;                  // eta kind ([0, x] convention, a = 0)
    int n_grid = 2048;
    double tol = 1e-13;
    double quad_tol = 1e-12;
};

struct MeanValueTrace {
    std::vector<MeanValueResult> samples;
    std::vector<std::string> failures;
    LimsupEstimate est_ratio_h;
    LimsupEstimate est_ratio_t;
    double c_estimate = 0.0;          // NaN when no derivative route
    Verdict verdict_h = Verdict::inconclusive;  // tail max ratio_h vs 1/e
    Verdict verdict_t = Verdict::inconclusive;  // tail max ratio_t vs e^-C
    std::optional<std::string> warning;
};

MeanValueTrace meanvalue_trace(const MeanValueProblem& problem,
                               const std::vector<double>& seq,
                               int window = 8, double epsilon = 1e-3);

} // namespace curveasym
