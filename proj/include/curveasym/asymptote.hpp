#pragma once

#include "curveasym/curve.hpp"
#include "curveasym/support.hpp"

#include <string>
#include <vector>

namespace curveasym {

/// Discretization of "t -> a".
struct SequenceSpec {
    enum class Mode { geometric_to_finite, exponential_to_minus_inf };
    Mode mode = Mode::geometric_to_finite;
    double a = 0.0;     // finite limit (geometric mode)
    double t0 = 1.0;    // first sample (geometric) or T0 > 0 (exponential: t_k = -T0*s^k)
    double ratio = 0.7; // r in (0,1) for geometric, s > 1 for exponential
    int count = 48;
};

std::vector<double> make_sequence(const SequenceSpec& spec, const Domain& domain);

struct TraceSample {
    double t = 0.0;
    double d = 0.0;        // D(t); may underflow to 0 for log-form spirals
    double ds = 0.0;
    double dt_sup = 0.0;
    double ratio_s = 0.0;  // DS/D
    double ratio_t = 0.0;  // DT/D; NaN when no derivative route exists
    bool unbounded = false;
    bool failed = false;
    std::string error;
    double truncation_bound = 0.0;  // D(a_eff)/D(t) when the sup window is truncated
};

struct RatioTrace {
    std::vector<TraceSample> samples;
};

/// Per t_k: support (and tangent, when a derivative route exists) analysis
/// of the chord, recorded as ratios. Per-sample failures are recorded
/// without aborting the trace. Log-form polar curves take a rescaled /
/// offset-space path that stays accurate far beyond double range.
RatioTrace ratio_trace(const Curve& curve, const std::vector<double>& seq,
                       const SupportSettings& settings = {});

enum class Trend { rising, falling, flat };

struct LimsupEstimate {
    double value = 0.0;        // max ratio over the tail window
    int window = 0;
    Trend trend = Trend::flat;
    double all_samples_max = 0.0;
    bool unbounded = false;
};

enum class RatioChannel { support, tangent };

LimsupEstimate limsup_estimate(const RatioTrace& trace, int window,
                               RatioChannel channel = RatioChannel::support);

enum class Example { ex1, ex2 };

/// Printed closed forms: exp(-alpha*arccot(alpha)) and (1 + 1/alpha)^-alpha.
double closed_form_ratio(Example example, double alpha);

enum class Verdict { holds, violated, inconclusive };

/// Compare a limsup estimate against the universal 1/e lower bound.
/// "violated" flags a numerical-resolution problem, never a disproof.
Verdict check_universal_bound(const LimsupEstimate& est, double epsilon);

std::string to_string(Verdict v);
std::string to_string(Trend t);

} // namespace curveasym
