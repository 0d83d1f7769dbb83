#include "curveasym/arclength.hpp"

#include <algorithm>
#include <cmath>

namespace curveasym {

namespace {

Curve working_copy(const Curve& curve, double t) {
    // bring the chord point to unit distance so |gamma'| never underflows
    if (curve.has_log_form()) return curve.rescaled(-curve.log_rho(t));
    return curve;
}

/// Support-set parameters of the chord at t, measured for the arc ratios.
std::vector<double> support_taus(const Curve& c, double t,
                                 const SupportSettings& s) {
    std::vector<double> taus;
    if (c.has_log_form()) {
        PolarChordRatios pc = polar_chord_ratios(c, t, s);
        for (double d : pc.deltas) taus.push_back(t - d);
        return taus;
    }
    ChordReport rep = find_support_set(c, t, s.n_grid, s.refine_tol, s);
    if (rep.degenerate) return taus;
    for (const MarkedPoint& p : rep.points) {
        // L is increasing, so a plateau contributes its right end
        taus.push_back(p.kind == PointKind::plateau ? p.bracket.second : p.tau);
    }
    return taus;
}

std::vector<double> tangent_taus(const Curve& c, double t,
                                 const SupportSettings& s) {
    std::vector<double> taus;
    if (c.has_log_form()) {
        PolarChordRatios pc = polar_chord_ratios(c, t, s);
        for (double d : pc.deltas) taus.push_back(t - d);
        return taus;
    }
    if (c.kind() == CurveKind::polar) {
        if (!c.has_drho()) return taus;
        return tangent_set_polar(c, t, s.tangent_n_max, s);
    }
    ChordReport rep = find_tangent_set(c, t, s.n_grid, s.refine_tol, s);
    if (rep.degenerate) return taus;
    for (const MarkedPoint& p : rep.points) {
        taus.push_back(p.kind == PointKind::plateau ? p.bracket.second : p.tau);
    }
    return taus;
}

ArcSample arc_sample(const Curve& curve, double t, const ArcSettings& settings) {
    ArcSample s;
    s.t = t;
    Curve c = working_copy(curve, t);
    double a_eff = effective_left(c, t, settings.support);
    // keep the tolerance relative: near a the lengths themselves shrink
    double qtol = settings.quad_tol * std::max(c.distance_from_start(t), 1e-300);
    s.l = c.arc_length(a_eff, t, qtol);

    auto sup_l = [&](const std::vector<double>& taus) {
        double best = 0.0;
        for (double tau : taus) {
            if (tau <= a_eff) continue;  // zero length from the window edge
            best = std::max(best, c.arc_length(a_eff, tau, qtol));
        }
        return best;
    };

    s.ls = sup_l(support_taus(c, t, settings.support));
    s.ratio_ls = s.ls / s.l;

    s.lt = std::numeric_limits<double>::quiet_NaN();
    s.ratio_lt = std::numeric_limits<double>::quiet_NaN();
    bool has_route = c.has_log_form() || c.kind() != CurveKind::polar || c.has_drho();
    if (has_route) {
        std::vector<double> taus = tangent_taus(c, t, settings.support);
        if (!taus.empty()) {
            s.lt = sup_l(taus);
            s.ratio_lt = s.lt / s.l;
        }
    }
    return s;
}

LimsupEstimate arc_limsup(const ArcTrace& trace, int window, bool tangent) {
    RatioTrace rt;
    for (const ArcSample& s : trace.samples) {
        if (s.failed) continue;
        TraceSample ts;
        ts.t = s.t;
        ts.ratio_s = s.ratio_ls;
        ts.ratio_t = s.ratio_lt;
        rt.samples.push_back(ts);
    }
    int w = std::max(3, std::min<int>(window, static_cast<int>(rt.samples.size())));
    return limsup_estimate(rt, w,
                           tangent ? RatioChannel::tangent : RatioChannel::support);
}

} // namespace

ArcTrace arc_ratio_trace(const Curve& curve, const std::vector<double>& seq,
                         const ArcSettings& settings, int window) {
    if (seq.empty()) throw input_error("arc_ratio_trace: empty sequence");
    ArcTrace trace;
    for (double t : seq) {
        ArcSample s;
        try {
            s = arc_sample(curve, t, settings);
        } catch (const error& e) {
            s = ArcSample{};
            s.t = t;
            s.failed = true;
            s.error = e.what();
        }
        trace.samples.push_back(std::move(s));
    }
    trace.est_ls = arc_limsup(trace, window, false);
    try {
        trace.est_lt = arc_limsup(trace, window, true);
    } catch (const error&) {
        trace.est_lt = LimsupEstimate{};  // no tangent route anywhere
    }
    return trace;
}

Eq6Report eq6_check(const Curve& curve, const std::vector<double>& seq,
                    const ArcSettings& settings, double band, int window) {
    if (seq.empty()) throw input_error("eq6_check: empty sequence");
    Eq6Report rep;
    for (double t : seq) {
        Curve c = working_copy(curve, t);
        double a_eff = effective_left(c, t, settings.support);
        double d = c.distance_from_start(t);
        double l = c.arc_length(a_eff, t,
                                settings.quad_tol * std::max(d, 1e-300));
        rep.samples.emplace_back(t, l / d);
    }
    rep.tail_value = rep.samples.back().second;
    std::size_t w = std::min<std::size_t>(window, rep.samples.size());
    rep.tends_to_one = true;
    for (std::size_t i = rep.samples.size() - w; i < rep.samples.size(); i++) {
        if (std::abs(rep.samples[i].second - 1.0) > band) rep.tends_to_one = false;
    }
    return rep;
}

ArcConjectureReport arc_conjecture_check(const Curve& curve,
                                         const std::vector<double>& seq,
                                         const ArcSettings& settings,
                                         int window, double epsilon,
                                         int max_refinements) {
    const double bound = 1.0 / M_E;
    ArcConjectureReport rep;
    ArcSettings s = settings;
    for (int pass = 0;; pass++) {
        rep.trace = arc_ratio_trace(curve, seq, s, window);
        rep.refinements = pass;
        if (rep.trace.est_ls.unbounded ||
            rep.trace.est_ls.value >= bound - epsilon) {
            rep.verdict = Verdict::holds;
            rep.note = "arc-length support ratio stayed above 1/e";
            return rep;
        }
        if (pass >= max_refinements) break;
        s.support.n_grid *= 2;  // the conjecture is open: retry before reporting
    }
    rep.verdict = Verdict::inconclusive;
    rep.note = "tail ratio below 1/e after refinement budget; unresolved, "
               "not a counterexample";
    return rep;
}

} // namespace curveasym
