#include "curveasym/curve.hpp"
#include "curveasym/quadrature.hpp"

#include <cmath>

namespace curveasym {

struct Curve::Impl {
    CurveKind kind = CurveKind::cartesian;
    Domain domain;
    Point2 start;

    // cartesian / graph
    RealFn x_eval, y_eval;
    RealFn dx_eval, dy_eval;  // empty when no analytic derivative

    // polar
    RealFn rho_eval, drho_eval;
    RealFn log_rho_eval, dlog_rho_eval;
    double log_offset = 0.0;  // applied on top of log_rho_eval
};

namespace {

void require_domain(const Domain& d) {
    if (!(d.a < d.b)) throw input_error("curve domain requires a < b");
}

} // namespace

Curve Curve::cartesian(RealFn x, RealFn y, Domain d,
                       std::optional<RealFn> dx, std::optional<RealFn> dy,
                       std::optional<Point2> start) {
    require_domain(d);
    auto impl = std::make_shared<Impl>();
    impl->kind = CurveKind::cartesian;
    impl->domain = d;
    impl->x_eval = std::move(x);
    impl->y_eval = std::move(y);
    if (dx && dy) {
        impl->dx_eval = std::move(*dx);
        impl->dy_eval = std::move(*dy);
    }
    if (start) {
        impl->start = *start;
    } else if (!d.infinite_a()) {
        impl->start = {impl->x_eval(d.a), impl->y_eval(d.a)};
    } else {
        throw input_error("infinite domain start requires a designated start point");
    }
    return Curve(std::move(impl));
}

Curve Curve::graph(RealFn f, Domain d, std::optional<RealFn> df,
                   std::optional<Point2> start) {
    RealFn fx = [](double t) { return t; };
    RealFn fy = f;
    std::optional<RealFn> dx, dy;
    if (df) {
        dx = [](double) { return 1.0; };
        dy = *df;
    }
    Curve c = cartesian(std::move(fx), std::move(fy), d, std::move(dx), std::move(dy),
                        std::move(start));
    auto impl = std::make_shared<Impl>(*c.impl_);
    impl->kind = CurveKind::graph;
    return Curve(std::move(impl));
}

Curve Curve::polar(RealFn rho, Domain d, std::optional<RealFn> drho) {
    require_domain(d);
    auto impl = std::make_shared<Impl>();
    impl->kind = CurveKind::polar;
    impl->domain = d;
    impl->start = {0.0, 0.0};
    impl->rho_eval = std::move(rho);
    if (drho) impl->drho_eval = std::move(*drho);
    return Curve(std::move(impl));
}

Curve Curve::polar_log(RealFn log_rho, RealFn dlog_rho, Domain d) {
    require_domain(d);
    auto impl = std::make_shared<Impl>();
    impl->kind = CurveKind::polar;
    impl->domain = d;
    impl->start = {0.0, 0.0};
    impl->log_rho_eval = std::move(log_rho);
    impl->dlog_rho_eval = std::move(dlog_rho);
    return Curve(std::move(impl));
}

CurveKind Curve::kind() const { return impl_->kind; }
const Domain& Curve::domain() const { return impl_->domain; }
Point2 Curve::start() const { return impl_->start; }

bool Curve::has_log_form() const { return static_cast<bool>(impl_->log_rho_eval); }

double Curve::log_rho(double t) const {
    if (!has_log_form()) throw capability_error("curve has no log-rho form");
    return impl_->log_rho_eval(t) + impl_->log_offset;
}

double Curve::dlog_rho(double t) const {
    if (!has_log_form()) throw capability_error("curve has no log-rho form");
    return impl_->dlog_rho_eval(t);
}

double Curve::rho(double t) const {
    if (impl_->kind != CurveKind::polar) throw capability_error("not a polar curve");
    if (has_log_form()) return std::exp(log_rho(t));
    return impl_->rho_eval(t);
}

bool Curve::has_drho() const {
    return impl_->kind == CurveKind::polar &&
           (has_log_form() || static_cast<bool>(impl_->drho_eval));
}

double Curve::drho(double t) const {
    if (impl_->kind != CurveKind::polar) throw capability_error("not a polar curve");
    if (has_log_form()) return std::exp(log_rho(t)) * impl_->dlog_rho_eval(t);
    if (impl_->drho_eval) return impl_->drho_eval(t);
    double h = default_fd_step(t);
    const Domain& d = impl_->domain;
    double lo = std::max(t - h, std::nextafter(d.a, d.b));
    double hi = std::min(t + h, std::nextafter(d.b, d.a));
    if (!(lo < hi)) throw stencil_error("drho stencil does not fit in domain");
    return (impl_->rho_eval(hi) - impl_->rho_eval(lo)) / (hi - lo);
}

Curve Curve::rescaled(double log_scale) const {
    if (!has_log_form()) {
        throw capability_error("rescaled requires a polar log-form curve");
    }
    auto impl = std::make_shared<Impl>(*impl_);
    impl->log_offset += log_scale;
    return Curve(std::move(impl));
}

Point2 Curve::point(double t) const {
    const Domain& d = impl_->domain;
    bool at_start = !d.infinite_a() && t == d.a;
    if (!at_start && !d.contains_open(t)) {
        throw input_error("parameter outside curve domain");
    }
    switch (impl_->kind) {
        case CurveKind::polar: {
            if (at_start) return impl_->start;
            double r = rho(t);
            return {r * std::cos(t), r * std::sin(t)};
        }
        case CurveKind::cartesian:
        case CurveKind::graph:
            return {impl_->x_eval(t), impl_->y_eval(t)};
    }
    throw input_error("corrupt curve kind");
}

bool Curve::has_analytic_derivative() const {
    if (impl_->kind == CurveKind::polar) return has_drho();
    return static_cast<bool>(impl_->dx_eval);
}

double default_fd_step(double t) {
    return std::max(1e-6, 1e-6 * std::abs(t));
}

Vec2 Curve::derivative(double t) const { return derivative(t, default_fd_step(t)); }

Vec2 Curve::derivative(double t, double h) const {
    const Domain& d = impl_->domain;
    if (!d.contains_open(t)) throw input_error("parameter outside curve domain");
    if (impl_->kind == CurveKind::polar && has_drho()) {
        double r = rho(t);
        double dr = has_log_form() ? r * impl_->dlog_rho_eval(t) : impl_->drho_eval(t);
        double c = std::cos(t), s = std::sin(t);
        return {dr * c - r * s, dr * s + r * c};
    }
    if (impl_->kind != CurveKind::polar && impl_->dx_eval) {
        return {impl_->dx_eval(t), impl_->dy_eval(t)};
    }
    // central difference fallback, step clipped to stay inside (a, b)
    if (h <= 0.0) throw input_error("finite-difference step must be positive");
    double room = std::min(std::isinf(d.a) ? h : t - d.a,
                           std::isinf(d.b) ? h : d.b - t);
    double step = std::min(h, 0.49 * room);
    if (!(step > 0.0) || t - step <= d.a || t + step >= d.b) {
        throw stencil_error("derivative stencil does not fit in domain");
    }
    Point2 p1 = point(t + step);
    Point2 p0 = point(t - step);
    return (p1 - p0) / (2.0 * step);
}

double Curve::distance_from_start(double t) const {
    return (point(t) - impl_->start).norm();
}

double Curve::arc_length(double t0, double t1, double tol) const {
    const Domain& d = impl_->domain;
    if (!(t0 < t1)) throw input_error("arc_length requires t0 < t1");
    if (t0 < d.a || t1 >= d.b) throw input_error("arc_length interval outside domain");
    auto speed = [this, &d](double t) {
        if (t == d.a || t == d.b) {
            // endpoint nudged inward for numeric stencils
            t = std::nextafter(t, 0.5 * (d.a + d.b));
        }
        return derivative(t).norm();
    };
    QuadOptions opt;
    opt.abs_tol = tol;
    return adaptive_simpson(speed, t0, t1, opt);
}

} // namespace curveasym
