#include <doctest.h>

#include <fstream>
#include <sstream>

#include "termrw/runner.hpp"

using namespace termrw;

namespace {

std::string corpus(const std::string& name) { return std::string(TERMRW_CORPUS_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::vector<std::string> rule_files = {corpus("twoscale.rules"), corpus("green.rules"),
                                             corpus("hypothesis.rules")};

std::vector<Source> proof_sources(const std::string& patch = "") {
    std::vector<Source> out;
    for (const auto& f : rule_files) out.push_back({f, slurp(f)});
    if (!patch.empty()) out.push_back({"patch", patch});
    out.push_back({"gradient.proof", slurp(corpus("gradient.proof"))});
    return out;
}

std::string trace_text(const RunResult& r, TraceFormat f) {
    std::ostringstream os;
    write_trace(os, r.events, f, false);
    return os.str();
}

}  // namespace

TEST_CASE("the gradient proof replays") {
    auto r = run_script(rule_files, corpus("gradient.proof"));
    INFO(r.error);
    CHECK(r.exit_code == 0);
    REQUIRE(r.final_term);
    int expects = 0;
    for (const auto& e : r.events) {
        CHECK(e.ok);
        if (e.kind == TraceEvent::Kind::expect) ++expects;
    }
    CHECK(expects == 9);
}

TEST_CASE("a dropped remainder is caught") {
    auto r = run_sources({{"p", "apply Identity to Integral(Omega, u, [dx]) + Oeps;\n"
                                "expect Integral(Omega, u, [dx]) modulo oeps;"}});
    CHECK(r.exit_code == 1);
    CHECK(r.error.find("expectation") != std::string::npos);

    auto ok = run_sources({{"p", "apply Identity to Integral(Omega, u, [dx]) + Oeps(3);\n"
                                 "expect Integral(Omega, u, [dx]) + Oeps modulo oeps;\n"
                                 "expect-exact Integral(Omega, u, [dx]) + Oeps(3);"}});
    CHECK(ok.exit_code == 0);
}

TEST_CASE("time limit stops a runaway normalizer") {
    RunOptions options;
    options.time_limit = std::chrono::milliseconds(1);
    auto r = run_sources({{"p", "Grow := [f(X_), f(g(X))];\napply Normalizer(TopDown(Grow)) to f(a);"}}, options);
    CHECK(r.exit_code == 1);
    CHECK(r.error.find("time") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run_sources({{"p", "apply Fail to a;"}}).exit_code == 1);
    CHECK(run_sources({{"p", "apply Missing to a;"}}).exit_code == 2);
    CHECK(run_sources({{"p", "apply TopDown( to a;"}}).exit_code == 2);
    CHECK(run_sources({{"p", "r := [a, X_];"}}).exit_code == 2);
    CHECK(run_sources({{"p", "S := TopDown(S);\napply S to a;"}}).exit_code != 0);
    CHECK(run_script({}, "/nonexistent/file.proof").exit_code == 2);

    auto r = run_sources({{"p", "step 4;\napply Fail to a;"}});
    CHECK(r.error.rfind("step 4: ", 0) == 0);
}

TEST_CASE("removing a rule breaks the first step that needs it") {
    const std::vector<std::pair<std::string, std::string>> uses = {
        {"TstarDefFwd", "1"}, {"ApproxTstar", "2"},    {"GreenGradX", "3"}, {"DivB", "4"},
        {"ApproximationB2", "5"}, {"TstarDefBwd", "6"}, {"TuFirst", "7"},    {"GreenYX", "8"},
        {"GreenXY", "9"},
    };
    for (const auto& [name, step] : uses) {
        CAPTURE(name);
        auto r = run_sources(proof_sources(name + " := [neverOccurs, neverOccurs];"));
        CHECK(r.exit_code == 1);
        CHECK(r.error.rfind("step " + step + ": ", 0) == 0);
    }
}

TEST_CASE("traces are reproducible") {
    auto a = run_sources(proof_sources());
    auto b = run_sources(proof_sources());
    REQUIRE(a.exit_code == 0);
    CHECK(trace_text(a, TraceFormat::text) == trace_text(b, TraceFormat::text));
    CHECK(trace_text(a, TraceFormat::json) == trace_text(b, TraceFormat::json));
    CHECK(trace_text(a, TraceFormat::json).find("elapsed_us") == std::string::npos);
}

TEST_CASE("apply once") {
    auto lin = apply_once({corpus("twoscale.rules")}, "IntegralLinearity", "Integral(D, f + g, [dx])");
    CHECK(lin.exit_code == 0);
    CHECK(lin.output == "Integral(D, f, [dx]) + Integral(D, g, [dx])");

    auto none = apply_once({}, "Fail", "a");
    CHECK(none.exit_code == 1);
    CHECK(none.output == "Fail");

    auto bad = apply_once({}, "TopDown(", "a");
    CHECK(bad.exit_code == 2);
    CHECK(bad.error.rfind("strategy:", 0) == 0);

    auto conv = apply_once({}, "ConvergenceStrategy", "Oeps(1) + (-1)*Oeps(1)");
    CHECK(conv.output == "Oeps(1)");
}

TEST_CASE("durations") {
    CHECK(parse_duration("250us") == std::chrono::microseconds(250));
    CHECK(parse_duration("20ms") == std::chrono::milliseconds(20));
    CHECK(parse_duration("1.5s") == std::chrono::milliseconds(1500));
    CHECK_FALSE(parse_duration("fast"));
    CHECK_FALSE(parse_duration("3"));
    CHECK_FALSE(parse_duration("-1s"));
}
