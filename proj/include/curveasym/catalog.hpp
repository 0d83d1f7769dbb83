#pragma once

#include "curveasym/asymptote.hpp"
#include "curveasym/meanvalue.hpp"

#include <string>
#include <vector>

namespace curveasym {

/// A built-in curve together with a sensible t->a sequence and, where one
/// is known, the closed-form limit of DS/D.
struct CurveEntry {
    std::string name;
    std::string description;
    Curve curve;
    SequenceSpec seq;
    double expected_ratio = 0.0;  // NaN when no closed form is known
    SupportSettings settings;

    CurveEntry(std::string n, std::string d, Curve c)
        : name(std::move(n)), description(std::move(d)), curve(std::move(c)) {}
};

/// ex1 (log spiral, needs alpha > 0), ex2 (rho = t^alpha, alpha > 0),
/// ex3 (rho = exp(-(-t)^l), l > 1).
CurveEntry make_ex1(double alpha);
CurveEntry make_ex2(double alpha);
CurveEntry make_ex3(double l);

/// The full sweep catalog: spirals, graphs, a circle, a line, a polar
/// profile. Every entry's expected limit (when closed-form) is >= 1/e.
std::vector<CurveEntry> curve_catalog();

struct MeanValuePreset {
    std::string name;
    MeanValueProblem problem;
    std::vector<double> xs;
    double expected_ratio_h = 0.0;  // NaN when n/a
    double expected_ratio_t = 0.0;
    double expected_c = 0.0;
};

/// remark41: g = t^(1+alpha), h = t (constant ratio (1/(1+alpha))^(1/alpha)).
MeanValuePreset make_remark41(double alpha);
/// lagrange-extremal: g(x) = -integral of dt/ln t over [0, x]; the
/// equality case of the 1/e bound.
MeanValuePreset make_lagrange_extremal(double x_min = 1e-10);
/// powerweight: weighted integral mean with w = t^beta, f = t.
MeanValuePreset make_powerweight(double beta);

/// Lookup by CLI name (ex1|ex2|ex3); throws input_error on unknown names.
CurveEntry make_example(const std::string& name, double param);
/// Lookup by CLI name (remark41|lagrange-extremal|powerweight).
MeanValuePreset make_preset(const std::string& name, double param);

} // namespace curveasym
