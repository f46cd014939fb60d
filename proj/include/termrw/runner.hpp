#pragma once

#include <chrono>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "termrw/convergence.hpp"
#include "termrw/dsl.hpp"

namespace termrw {

/// One top-level action of a script run.
struct TraceEvent {
    enum class Kind { apply, expect };
    Kind kind = Kind::apply;
    std::string step;
    /// apply: strategy source text. expect: "modulo oeps" or "exact".
    std::string strategy;
    std::string input;
    /// Rendered result, or "Fail".
    std::string output;
    /// Fresh indexes handed out during the action: [fresh_begin, fresh_end).
    long fresh_begin = 0;
    long fresh_end = 0;
    std::chrono::nanoseconds elapsed{0};
    bool ok = true;
};

enum class TraceFormat { none, text, json };

void write_trace(std::ostream& os, const std::vector<TraceEvent>& events, TraceFormat format, bool timing = true);

/// Executes scripts statement by statement against one Session.
///
/// Names are resolved when an action runs, so a definition may refer to
/// names declared later in the same run.
class Interpreter {
public:
    explicit Interpreter(Session& session) : session_(session) {}

    /// Throws StrategyFailed, ExpectationFailed, UnknownName and the errors
    /// raised by the engine. Events up to the failing action are kept.
    void execute(const dsl::Script& script);

    Strategy build(const dsl::StrategyExpr& s);
    Rule resolve(const dsl::RuleExpr& r);

    const std::vector<TraceEvent>& events() const { return events_; }
    const std::optional<Term>& current() const { return current_; }
    /// Label of the most recent `step` statement.
    const std::string& step() const { return step_; }

private:
    void run_statement(const dsl::Statement& st);
    Strategy build_ref(const std::string& name);

    Session& session_;
    std::map<std::string, dsl::RuleExprPtr> rules_;
    std::map<std::string, dsl::StrategyExpr> strategies_;
    std::set<std::string> building_;
    std::string step_;
    std::optional<Term> current_;
    std::vector<TraceEvent> events_;
};

struct RunOptions {
    std::optional<std::chrono::nanoseconds> time_limit;
};

struct RunResult {
    /// 0 success; 1 failed expectation, strategy failure or time limit;
    /// 2 unreadable input, parse error or unresolved name.
    int exit_code = 0;
    std::string error;
    std::vector<TraceEvent> events;
    std::optional<Term> final_term;
};

/// A named piece of source text (a rule file or a proof script).
struct Source {
    std::string origin;
    std::string text;
};

/// Parses every source, then executes them in order in a fresh Session.
RunResult run_sources(const std::vector<Source>& sources, const RunOptions& options = {});
/// run_sources over files: the rule files first, then the proof.
RunResult run_script(const std::vector<std::string>& rule_files, const std::string& proof_file,
                     const RunOptions& options = {});

struct ApplyResult {
    int exit_code = 0;
    /// Rendered result or "Fail"; empty on error.
    std::string output;
    std::string error;
};

/// Loads rule files, then runs `strategy` once on `term` in a fresh Session.
ApplyResult apply_once(const std::vector<std::string>& rule_files, const std::string& strategy,
                       const std::string& term, const RunOptions& options = {});

/// Parses "250us", "20ms", "1.5s". Returns nullopt when malformed.
std::optional<std::chrono::nanoseconds> parse_duration(const std::string& text);

}  // namespace termrw
