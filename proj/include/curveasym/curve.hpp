#pragma once

#include "curveasym/errors.hpp"
#include "curveasym/geometry.hpp"

#include <functional>
#include <memory>
#include <optional>

namespace curveasym {

using RealFn = std::function<double(double)>;

enum class CurveKind { cartesian, polar, graph };

/// Half-open parameter domain [a, b); a may be -infinity, in which case a
/// designated limit start point must be supplied to the curve.
struct Domain {
    double a = 0.0;
    double b = 1.0;

    bool infinite_a() const { return std::isinf(a); }
    bool contains_open(double t) const { return t > a && t < b; }
};

/// Immutable planar parametric curve with total evaluators on (a, b).
///
/// Polar curves use the polar angle as the parameter, with the pole at the
/// start point. A polar curve may instead be given through log(rho), which
/// keeps ratios representable where rho itself under/overflows.
class Curve {
public:
    static Curve cartesian(RealFn x, RealFn y, Domain d,
                           std::optional<RealFn> dx = {},
                           std::optional<RealFn> dy = {},
                           std::optional<Point2> start = {});
    static Curve graph(RealFn f, Domain d,
                       std::optional<RealFn> df = {},
                       std::optional<Point2> start = {});
    static Curve polar(RealFn rho, Domain d, std::optional<RealFn> drho = {});
    static Curve polar_log(RealFn log_rho, RealFn dlog_rho, Domain d);

    CurveKind kind() const;
    const Domain& domain() const;
    Point2 start() const;

    Point2 point(double t) const;
    Vec2 derivative(double t) const;
    Vec2 derivative(double t, double h) const;
    bool has_analytic_derivative() const;

    double distance_from_start(double t) const;

    /// Arc length of gamma over [t0, t1] by adaptive quadrature of |gamma'|.
    double arc_length(double t0, double t1, double tol = 1e-9) const;

    // Polar accessors.
    double rho(double t) const;
    double drho(double t) const;
    bool has_drho() const;
    bool has_log_form() const;
    double log_rho(double t) const;
    double dlog_rho(double t) const;

    /// Polar log-form only: same curve scaled by exp(log_scale) about the
    /// start point. Support/tangent parameter sets and all D-ratios are
    /// invariant under this scaling.
    Curve rescaled(double log_scale) const;

private:
    struct Impl;
    explicit Curve(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Default finite-difference step: max(1e-6, 1e-6*|t|).
double default_fd_step(double t);

} // namespace curveasym
