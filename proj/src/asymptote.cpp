#include "curveasym/asymptote.hpp"

#include <algorithm>
#include <cmath>

namespace curveasym {

std::vector<double> make_sequence(const SequenceSpec& spec, const Domain& domain) {
    if (spec.count < 1) throw input_error("sequence count must be >= 1");
    std::vector<double> out;
    out.reserve(spec.count);
    if (spec.mode == SequenceSpec::Mode::geometric_to_finite) {
        if (!(spec.ratio > 0.0 && spec.ratio < 1.0)) {
            throw input_error("geometric sequence requires ratio in (0,1)");
        }
        if (!(spec.t0 > spec.a) || !domain.contains_open(spec.t0)) {
            throw input_error("geometric sequence start outside the domain");
        }
        if (spec.a < domain.a) {
            throw input_error("geometric sequence limit below the domain start");
        }
        double step = spec.t0 - spec.a;
        for (int k = 0; k < spec.count; k++) {
            out.push_back(spec.a + step);
            step *= spec.ratio;
        }
    } else {
        if (!(spec.ratio > 1.0)) {
            throw input_error("exponential sequence requires ratio > 1");
        }
        if (!(spec.t0 > 0.0)) throw input_error("exponential sequence requires T0 > 0");
        if (!domain.infinite_a()) {
            throw input_error("exponential sequence requires a = -infinity");
        }
        double t = -spec.t0;
        for (int k = 0; k < spec.count; k++) {
            if (!domain.contains_open(t)) {
                throw input_error("exponential sequence sample outside the domain");
            }
            out.push_back(t);
            t *= spec.ratio;
        }
    }
    return out;
}

namespace {

TraceSample trace_sample_logform(const Curve& curve, double t,
                                 const SupportSettings& settings) {
    TraceSample s;
    s.t = t;
    double lr = curve.log_rho(t);
    s.d = std::exp(lr);  // reporting only; may underflow

    PolarChordRatios pc = polar_chord_ratios(curve, t, settings);
    s.ds = s.dt_sup = pc.ratio * s.d;
    s.ratio_s = s.ratio_t = pc.ratio;

    double a_eff = effective_left(curve, t, settings);
    s.truncation_bound = std::exp(curve.log_rho(a_eff) - lr);
    return s;
}

TraceSample trace_sample_generic(const Curve& curve, double t,
                                 const SupportSettings& settings) {
    TraceSample s;
    s.t = t;
    ChordReport sup = find_support_set(curve, t, settings.n_grid,
                                       settings.refine_tol, settings);
    s.d = sup.d_t;
    if (sup.degenerate) {
        s.unbounded = true;
        s.ds = s.dt_sup = std::numeric_limits<double>::infinity();
        s.ratio_s = s.ratio_t = std::numeric_limits<double>::infinity();
        return s;
    }
    s.ds = sup.ds;
    s.ratio_s = sup.ds / sup.d_t;

    s.ratio_t = std::numeric_limits<double>::quiet_NaN();
    s.dt_sup = std::numeric_limits<double>::quiet_NaN();
    if (curve.kind() == CurveKind::polar) {
        if (curve.has_drho()) {
            std::vector<double> taus =
                tangent_set_polar(curve, t, settings.tangent_n_max, settings);
            if (!taus.empty()) {
                double dt = 0.0;
                for (double tau : taus) {
                    dt = std::max(dt, curve.distance_from_start(tau));
                }
                s.dt_sup = dt;
                s.ratio_t = dt / sup.d_t;
            }
        }
    } else {
        ChordReport tan = find_tangent_set(curve, t, settings.n_grid,
                                           settings.refine_tol, settings);
        s.dt_sup = tan.dt_sup;
        s.ratio_t = tan.dt_sup / tan.d_t;
    }

    const Domain& dom = curve.domain();
    if (dom.infinite_a()) {
        double a_eff = effective_left(curve, t, settings);
        s.truncation_bound = curve.distance_from_start(a_eff) / sup.d_t;
    }
    return s;
}

} // namespace

RatioTrace ratio_trace(const Curve& curve, const std::vector<double>& seq,
                       const SupportSettings& settings) {
    RatioTrace trace;
    trace.samples.reserve(seq.size());
    for (double t : seq) {
        TraceSample s;
        try {
            s = curve.has_log_form() ? trace_sample_logform(curve, t, settings)
                                     : trace_sample_generic(curve, t, settings);
        } catch (const error& e) {
            s = TraceSample{};
            s.t = t;
            s.failed = true;
            s.error = e.what();
        }
        trace.samples.push_back(std::move(s));
    }
    return trace;
}

namespace {

std::vector<double> channel_values(const RatioTrace& trace, RatioChannel channel,
                                   std::vector<bool>* unbounded_out) {
    std::vector<double> vals;
    for (const TraceSample& s : trace.samples) {
        if (s.failed) continue;
        double v = channel == RatioChannel::support ? s.ratio_s : s.ratio_t;
        if (std::isnan(v)) continue;
        vals.push_back(v);
        if (unbounded_out) unbounded_out->push_back(s.unbounded);
    }
    return vals;
}

double window_max(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = lo; i < hi; i++) m = std::max(m, v[i]);
    return m;
}

} // namespace

LimsupEstimate limsup_estimate(const RatioTrace& trace, int window,
                               RatioChannel channel) {
    if (window < 3) throw input_error("limsup window must be >= 3");
    std::vector<bool> unb;
    std::vector<double> vals = channel_values(trace, channel, &unb);
    if (vals.size() < static_cast<std::size_t>(window)) {
        throw input_error("trace shorter than the limsup window");
    }

    LimsupEstimate est;
    est.window = window;
    const std::size_t n = vals.size();
    const std::size_t w = static_cast<std::size_t>(window);

    for (std::size_t i = n - w; i < n; i++) {
        if (unb[i] || std::isinf(vals[i])) est.unbounded = true;
    }
    est.value = window_max(vals, n - w, n);
    est.all_samples_max = window_max(vals, 0, n);

    // trend from the tail window versus the window before it
    if (n >= 2 * w) {
        double prev = window_max(vals, n - 2 * w, n - w);
        double slack = 1e-12 + 1e-6 * std::max(std::abs(prev), std::abs(est.value));
        est.trend = est.value > prev + slack   ? Trend::rising
                    : est.value < prev - slack ? Trend::falling
                                               : Trend::flat;
    } else {
        est.trend = Trend::flat;
    }
    return est;
}

double closed_form_ratio(Example example, double alpha) {
    if (!(alpha > 0.0)) throw input_error("closed_form_ratio requires alpha > 0");
    switch (example) {
        case Example::ex1: return std::exp(-alpha * arccot(alpha));
        case Example::ex2: return std::pow(1.0 + 1.0 / alpha, -alpha);
    }
    throw input_error("unknown example");
}

Verdict check_universal_bound(const LimsupEstimate& est, double epsilon) {
    const double bound = 1.0 / M_E;
    if (est.unbounded) return Verdict::holds;
    if (est.value >= bound - epsilon) return Verdict::holds;
    if (est.trend == Trend::rising) return Verdict::inconclusive;
    return Verdict::violated;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(Trend t) {
    switch (t) {
        case Trend::rising: return "rising";
        case Trend::falling: return "falling";
        case Trend::flat: return "flat";
    }
    return "?";
}

} // namespace curveasym
