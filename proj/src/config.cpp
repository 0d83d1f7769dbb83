#include "curveasym/config.hpp"
#include "curveasym/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace curveasym {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) b++;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) e--;
    return s.substr(b, e - b);
}

double parse_real(const std::string& key, const std::string& v) {
    if (v == "inf" || v == "+inf") return std::numeric_limits<double>::infinity();
    if (v == "-inf") return -std::numeric_limits<double>::infinity();
    try {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw input_error("config: bad number for '" + key + "': " + v);
    }
}

int parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        int i = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return i;
    } catch (const std::exception&) {
        throw input_error("config: bad integer for '" + key + "': " + v);
    }
}

} // namespace

Config parse_config_text(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool a_set = false;
    while (std::getline(in, line)) {
        lineno++;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        std::size_t eq = s.find('=');
        if (eq == std::string::npos) {
            throw input_error("config line " + std::to_string(lineno) +
                              ": expected 'key = value'");
        }
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key.empty() || val.empty()) {
            throw input_error("config line " + std::to_string(lineno) +
                              ": empty key or value");
        }

        if (key == "kind") {
            if (val != "cartesian" && val != "polar" && val != "graph") {
                throw input_error("config: kind must be cartesian|polar|graph");
            }
            cfg.kind = val;
        } else if (key == "x") {
            cfg.x_expr = val;
        } else if (key == "y") {
            cfg.y_expr = val;
        } else if (key == "rho") {
            cfg.rho_expr = val;
        } else if (key == "f") {
            cfg.f_expr = val;
        } else if (key == "a") {
            cfg.a = parse_real(key, val);
            a_set = true;
        } else if (key == "b") {
            cfg.b = parse_real(key, val);
        } else if (key == "sequence.mode") {
            if (val == "geometric") {
                cfg.seq.mode = SequenceSpec::Mode::geometric_to_finite;
            } else if (val == "exponential") {
                cfg.seq.mode = SequenceSpec::Mode::exponential_to_minus_inf;
            } else {
                throw input_error(
                    "config: sequence.mode must be geometric|exponential");
            }
        } else if (key == "sequence.r") {
            cfg.seq.ratio = parse_real(key, val);
        } else if (key == "sequence.count") {
            cfg.seq.count = parse_int(key, val);
        } else if (key == "sequence.t0") {
            cfg.seq.t0 = parse_real(key, val);
            cfg.seq_t0_set = true;
        } else if (key == "grid.n") {
            cfg.grid_n = parse_int(key, val);
        } else if (key == "refine_tol") {
            cfg.refine_tol = parse_real(key, val);
        } else if (key == "window") {
            cfg.window = parse_int(key, val);
        } else {
            throw input_error("config line " + std::to_string(lineno) +
                              ": unknown key '" + key + "'");
        }
    }
    if (cfg.kind.empty()) throw input_error("config: missing 'kind'");
    if (!a_set && cfg.seq.mode == SequenceSpec::Mode::geometric_to_finite) {
        throw input_error("config: missing 'a'");
    }
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

Curve build_curve(const Config& cfg) {
    Domain d{cfg.a, cfg.b};
    auto fn = [](const std::string& text, const char* what) {
        if (text.empty()) {
            throw input_error(std::string("config: missing expression '") + what +
                              "'");
        }
        Expr e = Expr::parse(text);
        return RealFn([e](double t) { return e.eval(t); });
    };
    if (cfg.kind == "cartesian") {
        return Curve::cartesian(fn(cfg.x_expr, "x"), fn(cfg.y_expr, "y"), d);
    }
    if (cfg.kind == "graph") {
        return Curve::graph(fn(cfg.f_expr, "f"), d);
    }
    if (cfg.kind == "polar") {
        return Curve::polar(fn(cfg.rho_expr, "rho"), d);
    }
    throw input_error("config: unknown kind '" + cfg.kind + "'");
}

std::vector<double> build_sequence(const Config& cfg, const Curve& curve) {
    SequenceSpec spec = cfg.seq;
    if (spec.mode == SequenceSpec::Mode::geometric_to_finite) {
        spec.a = cfg.a;
        if (!cfg.seq_t0_set) {
            // default start: part way into the domain
            double hi = std::isinf(cfg.b) ? cfg.a + 2.0 : cfg.b;
            spec.t0 = cfg.a + 0.5 * (hi - cfg.a);
        }
    } else {
        spec.a = -std::numeric_limits<double>::infinity();
        if (!cfg.seq_t0_set) spec.t0 = 1.0;
        if (spec.ratio < 1.0) spec.ratio = 1.5;  // geometric default does not fit
    }
    return make_sequence(spec, curve.domain());
}

SupportSettings build_settings(const Config& cfg) {
    SupportSettings s;
    s.n_grid = cfg.grid_n;
    s.refine_tol = cfg.refine_tol;
    return s;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

void write_trace_csv(std::ostream& os, const RatioTrace& trace) {
    os << "t,D,DS,DT,ratio_support,ratio_tangent,unbounded,truncation_bound\n";
    for (const TraceSample& s : trace.samples) {
        if (s.failed) continue;
        os << fmt(s.t) << ',' << fmt(s.d) << ',' << fmt(s.ds) << ','
           << fmt(s.dt_sup) << ',' << fmt(s.ratio_s) << ',' << fmt(s.ratio_t)
           << ',' << (s.unbounded ? 1 : 0) << ',' << fmt(s.truncation_bound)
           << '\n';
    }
}

void write_meanvalue_csv(std::ostream& os,
                         const std::vector<MeanValueResult>& rows) {
    os << "x,tau,ratio_h,ratio_t,residual\n";
    for (const MeanValueResult& r : rows) {
        os << fmt(r.x) << ',' << fmt(r.tau) << ',' << fmt(r.ratio_h) << ','
           << fmt(r.ratio_t) << ',' << fmt(r.residual) << '\n';
    }
}

void write_arc_csv(std::ostream& os, const ArcTrace& trace) {
    os << "t,L,LS,LT,ratio_Ls,ratio_Lt\n";
    for (const ArcSample& s : trace.samples) {
        if (s.failed) continue;
        os << fmt(s.t) << ',' << fmt(s.l) << ',' << fmt(s.ls) << ',' << fmt(s.lt)
           << ',' << fmt(s.ratio_ls) << ',' << fmt(s.ratio_lt) << '\n';
    }
}

std::string json_summary(const LimsupEstimate& est, double bound, Verdict verdict) {
    std::ostringstream os;
    os << "{\"estimate\": " << fmt(est.value) << ", \"bound\": " << fmt(bound)
       << ", \"verdict\": \"" << to_string(verdict) << "\", \"window\": "
       << est.window << "}";
    return os.str();
}

} // namespace curveasym
