#include <map>

#include "termrw/contextual.hpp"
#include "termrw/dsl.hpp"
#include "termrw/error.hpp"

namespace termrw::dsl {

namespace {

const std::map<std::string, StrategyKind, std::less<>> nullary_strategies = {
    {"Identity", StrategyKind::identity},
    {"Fail", StrategyKind::fail},
    {"ConvergenceStrategy", StrategyKind::convergence},
    {"EvalRule", StrategyKind::eval_rule},
    {"Simplify", StrategyKind::simplify},
    {"Expand", StrategyKind::expand},
};

const std::map<std::string, StrategyKind, std::less<>> unary_strategies = {
    {"IdentityAsFail", StrategyKind::identity_as_fail},
    {"FailAsIdentity", StrategyKind::fail_as_identity},
    {"All", StrategyKind::all},
    {"TopDown", StrategyKind::top_down},
    {"BottomUp", StrategyKind::bottom_up},
    {"Normalizer", StrategyKind::normalizer},
};

bool is_reserved(const std::string& name) {
    return nullary_strategies.contains(name) || unary_strategies.contains(name) || name == "Transform" ||
           name == "LeftChoice" || name == "Comp" || name == "InnerContext" || name == "OuterContext" ||
           name == "Linearity";
}

bool is_variable_name(const std::string& s) { return !s.empty() && s.back() == '_'; }

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    bool at_end() const { return cur().kind == TokenKind::end; }

    void expect_end() {
        if (!at_end()) fail_here("unexpected '" + cur().text + "'");
    }

    // ---- terms ----

    Term term() { return sum(); }

    // ---- statements ----

    Statement statement() {
        const std::size_t line = cur().line;
        const Token& t = cur();
        if (t.kind != TokenKind::identifier) fail_here("expected a statement");
        if (t.text == "bounded") {
            ++pos_;
            BoundedStmt b;
            do {
                b.names.push_back(constant_name());
            } while (accept(","));
            expect(";");
            return {std::move(b), line};
        }
        if (t.text == "step") {
            ++pos_;
            const Token& label = cur();
            if (label.kind != TokenKind::identifier && label.kind != TokenKind::number &&
                label.kind != TokenKind::string) {
                fail_here("expected a step label");
            }
            ++pos_;
            expect(";");
            return {StepStmt{label.text}, line};
        }
        if (t.text == "apply") {
            ++pos_;
            ApplyStmt a{strategy(), std::nullopt};
            if (accept_word("to")) a.subject = term();
            expect(";");
            return {std::move(a), line};
        }
        if (t.text == "expect") {
            ++pos_;
            Term e = term();
            expect_word("modulo");
            expect_word("oeps");
            expect(";");
            return {ExpectStmt{e, true}, line};
        }
        if (t.text == "expect-exact") {
            ++pos_;
            Term e = term();
            expect(";");
            return {ExpectStmt{e, false}, line};
        }
        const std::string name = constant_name();
        if (is_reserved(name)) fail_at(t, "'" + name + "' is a reserved name");
        expect(":=");
        if (peek_punct("[") || peek_word("Linearity") || peek_word("OuterContext")) {
            auto r = rule_expr(name);
            expect(";");
            return {RuleDef{name, r}, line};
        }
        auto s = strategy();
        expect(";");
        return {StrategyDef{name, std::move(s)}, line};
    }

    // ---- strategies ----

    StrategyExpr strategy() {
        const Token& t = cur();
        if (t.kind != TokenKind::identifier || is_variable_name(t.text)) fail_here("expected a strategy");
        ++pos_;
        const std::string& name = t.text;
        if (auto it = nullary_strategies.find(name); it != nullary_strategies.end()) {
            if (accept("(")) expect(")");
            return {it->second, "", nullptr, std::nullopt, {}};
        }
        if (auto it = unary_strategies.find(name); it != unary_strategies.end()) {
            expect("(");
            StrategyExpr inner = strategy();
            expect(")");
            return {it->second, "", nullptr, std::nullopt, {std::move(inner)}};
        }
        if (name == "Transform") {
            expect("(");
            auto r = rule_expr("");
            expect(")");
            return {StrategyKind::transform, "", r, std::nullopt, {}};
        }
        if (name == "OuterContext") {
            --pos_;
            return {StrategyKind::transform, "", rule_expr(""), std::nullopt, {}};
        }
        if (name == "LeftChoice" || name == "Comp") {
            expect("(");
            expect("[");
            std::vector<StrategyExpr> members;
            if (!peek_punct("]")) {
                do {
                    members.push_back(strategy());
                } while (accept(","));
            }
            expect("]");
            expect(")");
            auto kind = name == "Comp" ? StrategyKind::comp : StrategyKind::left_choice;
            return {kind, "", nullptr, std::nullopt, std::move(members)};
        }
        if (name == "InnerContext") {
            expect("(");
            Term pattern = term();
            expect(",");
            StrategyExpr inner = strategy();
            expect(")");
            return {StrategyKind::inner_context, "", nullptr, pattern, {std::move(inner)}};
        }
        if (name == "Linearity") fail_at(t, "Linearity declares a rule; wrap it in Transform(...)");
        if (peek_punct("(")) fail_at(t, "unknown combinator '" + name + "'");
        return {StrategyKind::ref, name, nullptr, std::nullopt, {}};
    }

    // ---- rules ----

    // `name` names a literal rule; empty for anonymous literals.
    RuleExprPtr rule_expr(const std::string& name) {
        const Token& t = cur();
        if (accept("[")) {
            Term lhs = term();
            expect(",");
            Term rhs = term();
            expect("]");
            std::optional<Guard> guard;
            if (accept_word("where")) {
                const std::string predicate = constant_name();
                expect("(");
                const Token& b = cur();
                if (b.kind != TokenKind::identifier) fail_here("expected a binding name");
                ++pos_;
                expect(")");
                std::string binding = b.text;
                if (is_variable_name(binding)) binding.pop_back();
                guard = Guard{predicate, binding};
            }
            std::string text = "[" + render_term(lhs) + ", " + render_term(rhs) + "]";
            if (guard) text += " where " + guard->predicate + "(" + guard->binding + ")";
            const std::string rule_name = name.empty() ? text : name;
            if (lhs.is_variable() && !lhs.is_hole()) {
                if (guard) fail_at(t, "a context rule cannot carry a guard");
                return literal(make_context_rule(rule_name, lhs, rhs), text);
            }
            return literal(make_rule(rule_name, lhs, rhs, guard), text);
        }
        if (t.kind != TokenKind::identifier || is_variable_name(t.text)) fail_here("expected a rule");
        ++pos_;
        if (t.text == "Linearity") {
            expect("(");
            const Token& n = cur();
            if (n.kind != TokenKind::number) fail_here("expected an argument position");
            ++pos_;
            expect(",");
            const Token& op = cur();
            if (!peek_punct("+") && !peek_punct("*")) fail_here("expected '+' or '*'");
            ++pos_;
            expect(",");
            Term tmpl = term();
            expect(")");
            std::string text = "Linearity(" + n.text + ", " + op.text + ", " + render_term(tmpl) + ")";
            const std::size_t position = std::stoul(n.text);
            Rule r = linearity(position, op.text == "+" ? "plus" : "times", tmpl, name.empty() ? text : name);
            return literal(std::move(r), text);
        }
        if (t.text == "OuterContext") {
            expect("(");
            auto r = rule_expr("");
            expect(",");
            auto c = rule_expr("");
            expect(")");
            return std::make_shared<const RuleExpr>(RuleExpr{RuleExpr::Outer{r, c}});
        }
        if (is_reserved(t.text)) fail_at(t, "'" + t.text + "' is not a rule");
        if (peek_punct("(")) fail_at(t, "unknown rule constructor '" + t.text + "'");
        return std::make_shared<const RuleExpr>(RuleExpr{RuleExpr::Ref{t.text}});
    }

private:
    static RuleExprPtr literal(Rule r, std::string text) {
        return std::make_shared<const RuleExpr>(RuleExpr{RuleExpr::Literal{std::move(r), std::move(text)}});
    }

    const Token& cur() const { return tokens_[pos_]; }

    [[noreturn]] void fail_at(const Token& t, const std::string& msg) const {
        throw ParseError(msg, t.line, t.column);
    }
    [[noreturn]] void fail_here(const std::string& msg) const {
        fail_at(cur(), at_end() ? msg + " at end of input" : msg);
    }

    bool peek_punct(std::string_view p) const { return cur().kind == TokenKind::punct && cur().text == p; }
    bool peek_word(std::string_view w) const { return cur().kind == TokenKind::identifier && cur().text == w; }

    bool accept(std::string_view p) {
        if (!peek_punct(p)) return false;
        ++pos_;
        return true;
    }
    bool accept_word(std::string_view w) {
        if (!peek_word(w)) return false;
        ++pos_;
        return true;
    }
    void expect(std::string_view p) {
        if (!accept(p)) fail_here("expected '" + std::string(p) + "'");
    }
    void expect_word(std::string_view w) {
        if (!accept_word(w)) fail_here("expected '" + std::string(w) + "'");
    }

    std::string constant_name() {
        const Token& t = cur();
        if (t.kind != TokenKind::identifier || is_variable_name(t.text)) fail_here("expected a name");
        ++pos_;
        return t.text;
    }

    Term sum() {
        std::vector<Term> terms{product()};
        while (true) {
            if (accept("+")) {
                terms.push_back(product());
            } else if (accept("-")) {
                terms.push_back(negate(product()));
            } else {
                break;
            }
        }
        return terms.size() == 1 ? terms.front() : plus(std::move(terms));
    }

    Term product() {
        Term acc = unary();
        while (true) {
            if (accept("*")) {
                acc = times({acc, unary()});
            } else if (peek_punct("/")) {
                const Token& slash = cur();
                ++pos_;
                acc = divide(acc, unary(), slash);
            } else {
                break;
            }
        }
        return acc;
    }

    Term divide(const Term& a, const Term& b, const Token& at) const {
        if (b.is_number()) {
            if (b.value() == 0) fail_at(at, "division by zero");
            const Rational inverse = 1 / b.value();
            if (a.is_number()) return Term::number(Rational(a.value() * inverse));
            return times({a, Term::number(inverse)});
        }
        Term inverse = Term::app(std::string(sym::pow), {b, Term::number(-1)});
        if (a.is_number() && a.value() == 1) return inverse;
        return times({a, inverse});
    }

    Term unary() {
        if (accept("-")) return negate(unary());
        return power();
    }

    Term power() {
        Term base = atom();
        if (accept("^")) return Term::app(std::string(sym::pow), {base, unary()});
        return base;
    }

    Term atom() {
        const Token& t = cur();
        switch (t.kind) {
        case TokenKind::number:
            ++pos_;
            return Term::number(Rational(t.text));
        case TokenKind::hole:
            ++pos_;
            return Term::hole();
        case TokenKind::identifier:
            ++pos_;
            return application(t);
        case TokenKind::punct:
            if (accept("(")) {
                Term inner = term();
                expect(")");
                return inner;
            }
            if (accept("[")) {
                std::vector<Term> items;
                if (!peek_punct("]")) items = arguments();
                expect("]");
                return list(std::move(items));
            }
            break;
        default:
            break;
        }
        fail_here(t.kind == TokenKind::end ? "expected a term" : "unexpected '" + t.text + "'");
    }

    std::vector<Term> arguments() {
        std::vector<Term> args{term()};
        while (accept(",")) args.push_back(term());
        return args;
    }

    Term application(const Token& t) {
        std::string name = t.text;
        const bool var = is_variable_name(name);
        if (var) name.pop_back();
        if (!accept("(")) {
            if (var) return Term::variable(name);
            if (name == sym::oeps) return oeps_fresh();
            return Term::constant(name);
        }
        std::vector<Term> args;
        if (!peek_punct(")")) args = arguments();
        expect(")");
        if (var) return Term::head_var_app(name, std::move(args));
        if (name == sym::oeps) {
            if (args.size() != 1) fail_at(t, "Oeps takes exactly one index");
            const Term& i = args.front();
            const bool ok = (i.is_number() && i.value() >= 0 && i.value().get_den() == 1) || i.is_variable() ||
                            i.has_head(sym::fresh_marker);
            if (!ok || i.is_hole()) fail_at(t, "Oeps index must be a natural number or a variable");
            if (i.is_number() && !i.value().get_num().fits_slong_p()) fail_at(t, "Oeps index too large");
        }
        return Term::app(name, std::move(args));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) {
    Parser p(text);
    Term t = p.term();
    p.expect_end();
    return t;
}

StrategyExpr parse_strategy(std::string_view text) {
    Parser p(text);
    StrategyExpr s = p.strategy();
    p.expect_end();
    return s;
}

Script parse_script(std::string_view text) {
    Parser p(text);
    Script script;
    while (!p.at_end()) script.statements.push_back(p.statement());
    return script;
}

}  // namespace termrw::dsl
