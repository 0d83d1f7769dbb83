#pragma once

#include "curveasym/arclength.hpp"
#include "curveasym/asymptote.hpp"
#include "curveasym/meanvalue.hpp"

#include <ostream>
#include <string>

namespace curveasym {

/// Parsed `key = value` experiment description.
struct Config {
    std::string kind;  // cartesian | polar | graph
    std::string x_expr, y_expr, rho_expr, f_expr;
    double a = 0.0;
    double b = 1.0;
    SequenceSpec seq;
    bool seq_t0_set = false;
    int grid_n = 4096;
    double refine_tol = 0.0;  // 0 = auto
    int window = 8;
};

/// Line-oriented parser: blank lines and '#' comments ignored; unknown
/// keys rejected with input_error.
Config parse_config_text(const std::string& text);
Config load_config(const std::string& path);

/// Curve from the config expressions. Derivatives come from central
/// differences (the expression language has no symbolic derivative).
Curve build_curve(const Config& cfg);
std::vector<double> build_sequence(const Config& cfg, const Curve& curve);
SupportSettings build_settings(const Config& cfg);

// CSV emission: '.' decimal point, %.17g values, deterministic.
void write_trace_csv(std::ostream& os, const RatioTrace& trace);
void write_meanvalue_csv(std::ostream& os, const std::vector<MeanValueResult>& rows);
void write_arc_csv(std::ostream& os, const ArcTrace& trace);

/// {estimate, bound, verdict, window} record.
std::string json_summary(const LimsupEstimate& est, double bound, Verdict verdict);

} // namespace curveasym
