#pragma once

#include "curveasym/curve.hpp"

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace curveasym {

enum class PointKind { support_max, support_min, tangent_root, plateau };

/// One parameter value in S(t) or T(t).
struct MarkedPoint {
    double tau = 0.0;
    PointKind kind = PointKind::support_max;
    double d_tau = 0.0;                      // D(tau)
    double residual = 0.0;                   // bracket width / equation residual
    std::pair<double, double> bracket{0.0, 0.0};
};

/// Support or tangent analysis of the chord [gamma(a), gamma(t)].
struct ChordReport {
    double t = 0.0;
    double d_t = 0.0;                        // D(t)
    std::vector<MarkedPoint> points;
    double ds = std::numeric_limits<double>::quiet_NaN();      // DS(t)
    double dt_sup = std::numeric_limits<double>::quiet_NaN();  // DT(t)
    bool degenerate = false;                 // D(t) = 0: DS/D = DT/D = infinity
};

struct SupportSettings {
    int n_grid = 4096;
    double refine_tol = 0.0;        // 0: auto, 1e-10 * (t - a_eff)
    double left_window = 8.0 * 3.14159265358979323846;  // a_eff = t - window for a = -inf
    double a_eff_override = std::numeric_limits<double>::quiet_NaN();
    int tangent_n_max = 64;
};

/// Left end of the scanned window for the chord at t.
double effective_left(const Curve& curve, double t, const SupportSettings& s = {});

/// Cross product (gamma(t) - gamma(a)) x (gamma(tau) - gamma(a)); tau is a
/// support parameter for the chord exactly when this has a local extremum.
double phi_value(const Curve& curve, double t, double tau);

/// Scan phi for local extrema and plateaus over (a_eff, t]; DS is the max
/// of D over the detected set. Degenerate chords (D(t)=0) are flagged and
/// carry an unbounded DS.
ChordReport find_support_set(const Curve& curve, double t,
                             int n_grid = 4096, double refine_tol = 0.0,
                             const SupportSettings& settings = {});

/// Roots of (gamma(t) - gamma(a)) x gamma'(tau) over (a_eff, t]. Roots of
/// even multiplicity (touch without sign change) are invisible to the
/// bracketing and are not reported.
ChordReport find_tangent_set(const Curve& curve, double t,
                             int n_grid = 4096, double refine_tol = 0.0,
                             const SupportSettings& settings = {});

/// Polar tangency: solutions of rho(tau)cos(t-tau) - rho'(tau)sin(t-tau) = 0
/// in (a_eff, t], largest first, at most n_max.
std::vector<double> tangent_set_polar(const Curve& curve, double t, int n_max,
                                      const SupportSettings& settings = {});

/// High-precision ratios for polar log-form curves. Works in the chord
/// offset delta = t - tau, which stays accurate where t itself is huge, and
/// recovers D(tau)/D(t) = exp(integral of -dlog_rho over the offset) without
/// cancellation. The tangency roots found this way are sign changes of
/// phi', i.e. exactly the strict support extrema.
struct PolarChordRatios {
    double ratio = 0.0;                 // DS/D = DT/D over the window
    std::vector<double> deltas;         // root offsets t - tau, increasing
    std::vector<double> point_ratios;   // D(tau)/D(t) per root
};
PolarChordRatios polar_chord_ratios(const Curve& curve, double t,
                                    const SupportSettings& settings = {});

} // namespace curveasym
