#include "termrw/runner.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "termrw/algebra.hpp"
#include "termrw/contextual.hpp"
#include "termrw/error.hpp"

namespace termrw {

namespace {

using Clock = std::chrono::steady_clock;

std::string fresh_text(const TraceEvent& e) {
    if (e.fresh_begin == e.fresh_end) return "none";
    if (e.fresh_end - e.fresh_begin == 1) return std::to_string(e.fresh_begin);
    return std::to_string(e.fresh_begin) + ".." + std::to_string(e.fresh_end - 1);
}

std::string step_prefix(const std::string& step) { return step.empty() ? "" : "step " + step + ": "; }

Strategy wrap(std::string description, Term (*f)(const Term&)) {
    return Strategy(std::move(description), [f](const Term& t) -> Outcome { return f(t); });
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Exit status for an error escaping a run.
int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const IllFormedRule*>(&e) ||
        dynamic_cast<const BadTemplate*>(&e) || dynamic_cast<const BadContext*>(&e) ||
        dynamic_cast<const UnknownName*>(&e)) {
        return 2;
    }
    if (dynamic_cast<const Error*>(&e)) return 1;
    return 2;
}

}  // namespace

void write_trace(std::ostream& os, const std::vector<TraceEvent>& events, TraceFormat format, bool timing) {
    if (format == TraceFormat::none) return;
    if (format == TraceFormat::json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& e : events) {
            nlohmann::ordered_json j;
            j["kind"] = e.kind == TraceEvent::Kind::apply ? "apply" : "expect";
            j["step"] = e.step;
            j["strategy"] = e.strategy;
            j["input"] = e.input;
            j["output"] = e.output;
            j["fresh"] = {e.fresh_begin, e.fresh_end};
            if (timing) j["elapsed_us"] = std::chrono::duration_cast<std::chrono::microseconds>(e.elapsed).count();
            j["ok"] = e.ok;
            arr.push_back(std::move(j));
        }
        nlohmann::ordered_json doc;
        doc["events"] = std::move(arr);
        os << doc.dump(2) << '\n';
        return;
    }
    for (const auto& e : events) {
        const std::string label = e.step.empty() ? "" : "[" + e.step + "] ";
        if (e.kind == TraceEvent::Kind::apply) {
            os << label << "apply " << e.strategy << '\n';
            os << "  in:    " << e.input << '\n';
            os << "  out:   " << e.output << '\n';
            os << "  fresh: " << fresh_text(e) << '\n';
            if (timing) {
                os << "  time:  " << std::fixed << std::setprecision(3)
                   << std::chrono::duration<double, std::milli>(e.elapsed).count() << " ms\n";
            }
        } else {
            os << label << "expect " << e.strategy << ": " << (e.ok ? "ok" : "FAILED") << '\n';
            os << "  expected: " << e.input << '\n';
            os << "  actual:   " << e.output << '\n';
        }
    }
}

void Interpreter::execute(const dsl::Script& script) {
    for (const auto& st : script.statements) run_statement(st);
}

void Interpreter::run_statement(const dsl::Statement& st) {
    if (const auto* b = std::get_if<dsl::BoundedStmt>(&st.node)) {
        for (const auto& n : b->names) session_.declare_bounded(n);
    } else if (const auto* r = std::get_if<dsl::RuleDef>(&st.node)) {
        rules_[r->name] = r->rule;
        strategies_.erase(r->name);
    } else if (const auto* s = std::get_if<dsl::StrategyDef>(&st.node)) {
        strategies_.insert_or_assign(s->name, s->strategy);
        rules_.erase(s->name);
    } else if (const auto* step = std::get_if<dsl::StepStmt>(&st.node)) {
        step_ = step->label;
    } else if (const auto* a = std::get_if<dsl::ApplyStmt>(&st.node)) {
        if (a->subject) current_ = *a->subject;
        if (!current_) throw Error("no current term; name one with 'apply S to <term>'");
        TraceEvent e;
        e.step = step_;
        e.strategy = dsl::render_strategy(a->strategy);
        e.input = dsl::render_term(*current_);
        e.fresh_begin = session_.counter();
        Outcome out;
        const auto start = Clock::now();
        out = build(a->strategy)(*current_);
        e.elapsed = Clock::now() - start;
        e.fresh_end = session_.counter();
        e.ok = out.has_value();
        e.output = out ? dsl::render_term(*out) : "Fail";
        events_.push_back(e);
        if (!out) throw StrategyFailed("strategy " + e.strategy + " failed");
        current_ = std::move(out);
    } else if (const auto* x = std::get_if<dsl::ExpectStmt>(&st.node)) {
        if (!current_) throw Error("nothing to check: no current term");
        TraceEvent e;
        e.kind = TraceEvent::Kind::expect;
        e.step = step_;
        e.strategy = x->modulo_oeps ? "modulo oeps" : "exact";
        e.fresh_begin = e.fresh_end = session_.counter();
        if (x->modulo_oeps) {
            const Term expected = simplify(x->expected);
            const Term actual = simplify(*current_);
            e.ok = equiv_mod_oeps(expected, actual);
            e.input = dsl::render_term(expected);
            e.output = dsl::render_term(actual);
        } else {
            e.ok = x->expected == *current_;
            e.input = dsl::render_term(x->expected);
            e.output = dsl::render_term(*current_);
        }
        events_.push_back(e);
        if (!e.ok) {
            throw ExpectationFailed("expectation (" + e.strategy + ") failed\n  expected: " +
                                    e.input + "\n  actual:   " + e.output);
        }
    }
}

Rule Interpreter::resolve(const dsl::RuleExpr& r) {
    if (const auto* lit = std::get_if<dsl::RuleExpr::Literal>(&r.node)) return lit->rule;
    if (const auto* ref = std::get_if<dsl::RuleExpr::Ref>(&r.node)) {
        auto it = rules_.find(ref->name);
        if (it == rules_.end()) throw UnknownName(ref->name);
        if (!building_.insert(ref->name).second) throw Error("rule '" + ref->name + "' is defined in terms of itself");
        Rule rule = resolve(*it->second);
        building_.erase(ref->name);
        rule.name = ref->name;
        return rule;
    }
    const auto& outer = std::get<dsl::RuleExpr::Outer>(r.node);
    return outer_context(resolve(*outer.rule), resolve(*outer.context));
}

Strategy Interpreter::build_ref(const std::string& name) {
    if (rules_.contains(name)) return session_transform(session_, resolve(dsl::RuleExpr{dsl::RuleExpr::Ref{name}}));
    auto it = strategies_.find(name);
    if (it == strategies_.end()) throw UnknownName(name);
    if (!building_.insert(name).second) throw Error("strategy '" + name + "' is defined in terms of itself");
    Strategy s = build(it->second);
    building_.erase(name);
    return s;
}

Strategy Interpreter::build(const dsl::StrategyExpr& s) {
    using dsl::StrategyKind;
    auto child = [&](std::size_t i) { return build(s.children.at(i)); };
    auto children = [&] {
        std::vector<Strategy> out;
        for (const auto& c : s.children) out.push_back(build(c));
        return out;
    };
    switch (s.kind) {
    case StrategyKind::ref: return build_ref(s.name);
    case StrategyKind::transform: return session_transform(session_, resolve(*s.rule));
    case StrategyKind::identity: return identity();
    case StrategyKind::fail: return fail();
    case StrategyKind::identity_as_fail: return identity_as_fail(child(0));
    case StrategyKind::fail_as_identity: return fail_as_identity(child(0));
    case StrategyKind::all: return all(child(0));
    case StrategyKind::top_down: return top_down(child(0));
    case StrategyKind::bottom_up: return bottom_up(child(0));
    case StrategyKind::left_choice: return left_choice(children());
    case StrategyKind::comp: return comp(children());
    case StrategyKind::normalizer: return normalizer(child(0));
    case StrategyKind::inner_context: return inner_context(*s.pattern, child(0));
    case StrategyKind::convergence: return convergence_strategy(session_);
    case StrategyKind::eval_rule: return eval_fresh(session_);
    case StrategyKind::simplify: return wrap("Simplify", simplify);
    case StrategyKind::expand: return wrap("Expand", expand);
    }
    throw Error("unhandled strategy");
}

RunResult run_sources(const std::vector<Source>& sources, const RunOptions& options) {
    RunResult result;
    std::vector<dsl::Script> scripts;
    for (const auto& src : sources) {
        try {
            scripts.push_back(dsl::parse_script(src.text));
        } catch (const std::exception& e) {
            result.exit_code = 2;
            result.error = src.origin + ":" + e.what();
            return result;
        }
    }
    Session session;
    Interpreter interp(session);
    try {
        std::optional<ScopedDeadline> deadline;
        if (options.time_limit) deadline.emplace(Clock::now() + *options.time_limit);
        for (const auto& s : scripts) interp.execute(s);
    } catch (const std::exception& e) {
        result.exit_code = exit_code_for(e);
        result.error = step_prefix(interp.step()) + e.what();
    }
    result.events = interp.events();
    result.final_term = interp.current();
    return result;
}

RunResult run_script(const std::vector<std::string>& rule_files, const std::string& proof_file,
                     const RunOptions& options) {
    std::vector<Source> sources;
    try {
        for (const auto& f : rule_files) {
            std::string text = read_file(f);
            sources.push_back({f, std::move(text)});
        }
        std::string text = read_file(proof_file);
        sources.push_back({proof_file, std::move(text)});
    } catch (const std::exception& e) {
        RunResult r;
        r.exit_code = 2;
        r.error = e.what();
        return r;
    }
    return run_sources(sources, options);
}

ApplyResult apply_once(const std::vector<std::string>& rule_files, const std::string& strategy,
                       const std::string& term, const RunOptions& options) {
    ApplyResult result;
    Session session;
    Interpreter interp(session);
    std::string stage;
    try {
        std::vector<dsl::Script> scripts;
        for (const auto& f : rule_files) {
            stage = f + ":";
            scripts.push_back(dsl::parse_script(read_file(f)));
        }
        stage = "strategy:";
        auto expr = dsl::parse_strategy(strategy);
        stage = "term:";
        Term subject = dsl::parse_term(term);
        stage.clear();
        std::optional<ScopedDeadline> deadline;
        if (options.time_limit) deadline.emplace(Clock::now() + *options.time_limit);
        for (const auto& s : scripts) interp.execute(s);
        auto out = interp.build(expr)(subject);
        result.output = out ? dsl::render_term(*out) : "Fail";
        result.exit_code = out ? 0 : 1;
    } catch (const std::exception& e) {
        result.exit_code = exit_code_for(e);
        if (!dynamic_cast<const Error*>(&e)) result.exit_code = 2;
        result.error = stage + e.what();
    }
    return result;
}

std::optional<std::chrono::nanoseconds> parse_duration(const std::string& text) {
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (value < 0) return std::nullopt;
    const std::string unit = text.substr(used);
    double scale = 0;
    if (unit == "us") scale = 1e3;
    else if (unit == "ms") scale = 1e6;
    else if (unit == "s") scale = 1e9;
    else return std::nullopt;
    return std::chrono::nanoseconds(static_cast<long long>(value * scale));
}

}  // namespace termrw
