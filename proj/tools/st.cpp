// st: run rewriting scripts and apply strategies from the command line.
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "termrw/runner.hpp"

namespace {

const std::map<std::string, termrw::TraceFormat> trace_formats = {
    {"none", termrw::TraceFormat::none},
    {"text", termrw::TraceFormat::text},
    {"json", termrw::TraceFormat::json},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Term rewriting with strategies"};
    app.require_subcommand(1);

    std::vector<std::string> rule_files;
    std::string proof_file;
    std::string trace = "none";
    std::string time_limit;
    bool no_timing = false;

    auto* run = app.add_subcommand("run", "Run a proof script");
    run->add_option("proof", proof_file, "Proof script")->required();
    run->add_option("--rules", rule_files, "Rule files, loaded in order");
    run->add_option("--trace", trace, "Trace format")->check(CLI::IsMember({"none", "text", "json"}));
    run->add_option("--time-limit", time_limit, "Wall-clock limit, e.g. 500ms");
    run->add_flag("--no-timing", no_timing, "Leave elapsed times out of the trace");

    std::string strategy;
    std::string term;
    auto* apply = app.add_subcommand("apply", "Apply a strategy once to a term");
    apply->add_option("--rules", rule_files, "Rule files, loaded in order");
    apply->add_option("--strategy", strategy, "Strategy expression")->required();
    apply->add_option("--term", term, "Subject term")->required();
    apply->add_option("--time-limit", time_limit, "Wall-clock limit, e.g. 500ms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    termrw::RunOptions options;
    if (!time_limit.empty()) {
        options.time_limit = termrw::parse_duration(time_limit);
        if (!options.time_limit) {
            std::cerr << "st: bad duration '" << time_limit << "' (use us, ms or s)\n";
            return 2;
        }
    }

    if (*run) {
        auto result = termrw::run_script(rule_files, proof_file, options);
        termrw::write_trace(std::cout, result.events, trace_formats.at(trace), !no_timing);
        if (result.exit_code != 0) {
            std::cerr << "st: " << result.error << '\n';
        } else if (result.final_term && trace == "none") {
            std::cout << termrw::dsl::render_term(*result.final_term) << '\n';
        }
        return result.exit_code;
    }

    auto result = termrw::apply_once(rule_files, strategy, term, options);
    if (!result.output.empty()) std::cout << result.output << '\n';
    if (!result.error.empty()) std::cerr << "st: " << result.error << '\n';
    return result.exit_code;
}
