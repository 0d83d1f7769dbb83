#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curveasym/config.hpp"

#include <cmath>
#include <sstream>

using namespace curveasym;

TEST_CASE("parse a graph config") {
    Config cfg = parse_config_text(
        "# comment\n"
        "kind = graph\n"
        "f = t^2\n"
        "a = 0\n"
        "b = 10\n"
        "sequence.mode = geometric\n"
        "sequence.r = 0.5\n"
        "sequence.count = 6\n"
        "sequence.t0 = 1\n"
        "grid.n = 512\n"
        "refine_tol = 1e-11\n"
        "window = 4\n");
    CHECK(cfg.kind == "graph");
    CHECK(cfg.grid_n == 512);
    CHECK(cfg.window == 4);
    Curve c = build_curve(cfg);
    CHECK(c.point(2.0).y == doctest::Approx(4.0));
    std::vector<double> seq = build_sequence(cfg, c);
    REQUIRE(seq.size() == 6);
    CHECK(seq[0] == doctest::Approx(1.0));
    CHECK(seq[5] == doctest::Approx(1.0 / 32.0));
}

TEST_CASE("unknown keys and malformed lines are rejected") {
    CHECK_THROWS_AS(parse_config_text("kind = graph\nbogus = 1\n"), input_error);
    CHECK_THROWS_AS(parse_config_text("kind graph\n"), input_error);
    CHECK_THROWS_AS(parse_config_text("kind = submarine\n"), input_error);
    CHECK_THROWS_AS(parse_config_text("a = 0\n"), input_error);  // missing kind
    CHECK_THROWS_AS(parse_config_text("kind = graph\na = zero\n"), input_error);
}

TEST_CASE("missing expressions are reported") {
    Config cfg = parse_config_text("kind = cartesian\na = 0\nb = 1\n");
    CHECK_THROWS_AS(build_curve(cfg), input_error);
}

TEST_CASE("trace CSV is deterministic and skips failed rows") {
    RatioTrace trace;
    TraceSample s;
    s.t = 0.5;
    s.d = 1.0;
    s.ds = 0.25;
    s.dt_sup = 0.25;
    s.ratio_s = 0.25;
    s.ratio_t = 0.25;
    trace.samples.push_back(s);
    TraceSample bad;
    bad.failed = true;
    trace.samples.push_back(bad);

    std::ostringstream a, b;
    write_trace_csv(a, trace);
    write_trace_csv(b, trace);
    CHECK(a.str() == b.str());
    CHECK(a.str() ==
          "t,D,DS,DT,ratio_support,ratio_tangent,unbounded,truncation_bound\n"
          "0.5,1,0.25,0.25,0.25,0.25,0,0\n");
}

TEST_CASE("mean-value and arc CSV headers") {
    std::ostringstream mv;
    write_meanvalue_csv(mv, {});
    CHECK(mv.str() == "x,tau,ratio_h,ratio_t,residual\n");
    std::ostringstream arc;
    write_arc_csv(arc, ArcTrace{});
    CHECK(arc.str() == "t,L,LS,LT,ratio_Ls,ratio_Lt\n");
}

TEST_CASE("json summary record") {
    LimsupEstimate est;
    est.value = 0.5;
    est.window = 8;
    std::string j = json_summary(est, 1.0 / M_E, Verdict::holds);
    CHECK(j.find("\"estimate\": 0.5") != std::string::npos);
    CHECK(j.find("\"verdict\": \"holds\"") != std::string::npos);
    CHECK(j.find("\"window\": 8") != std::string::npos);
}

TEST_CASE("polar config gets a derivative route via differences") {
    Config cfg = parse_config_text(
        "kind = polar\nrho = t\na = 0\nb = 6\nsequence.t0 = 1\n");
    Curve c = build_curve(cfg);
    CHECK(c.drho(1.0) == doctest::Approx(1.0).epsilon(1e-6));
}
