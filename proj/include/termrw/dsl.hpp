#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "termrw/rules.hpp"
#include "termrw/term.hpp"

namespace termrw::dsl {

// ---- lexer ----

enum class TokenKind { identifier, number, string, hole, punct, end };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

/// Splits source text into tokens. Identifiers keep their trailing `_`;
/// `:=` and `expect-exact` are single tokens. Throws ParseError.
std::vector<Token> tokenize(std::string_view text);

// ---- script syntax tree ----

struct RuleExpr;
using RuleExprPtr = std::shared_ptr<const RuleExpr>;

/// How a rule is written. Names are resolved when the rule is used.
struct RuleExpr {
    struct Ref {
        std::string name;
    };
    /// A rule literal or a Linearity(...) declaration, already validated.
    /// `text` is its source form.
    struct Literal {
        Rule rule;
        std::string text;
    };
    struct Outer {
        RuleExprPtr rule;
        RuleExprPtr context;
    };
    std::variant<Ref, Literal, Outer> node;
};

enum class StrategyKind {
    ref,
    transform,
    identity,
    fail,
    identity_as_fail,
    fail_as_identity,
    all,
    top_down,
    bottom_up,
    left_choice,
    comp,
    normalizer,
    inner_context,
    convergence,
    eval_rule,
    simplify,
    expand,
};

struct StrategyExpr {
    StrategyKind kind;
    std::string name;                   // ref
    RuleExprPtr rule;                   // transform
    std::optional<Term> pattern;        // inner_context
    std::vector<StrategyExpr> children;
};

struct BoundedStmt {
    std::vector<std::string> names;
};
struct RuleDef {
    std::string name;
    RuleExprPtr rule;
};
struct StrategyDef {
    std::string name;
    StrategyExpr strategy;
};
struct StepStmt {
    std::string label;
};
struct ApplyStmt {
    StrategyExpr strategy;
    std::optional<Term> subject;
};
struct ExpectStmt {
    Term expected;
    bool modulo_oeps;
};

struct Statement {
    std::variant<BoundedStmt, RuleDef, StrategyDef, StepStmt, ApplyStmt, ExpectStmt> node;
    std::size_t line;
};

struct Script {
    std::vector<Statement> statements;
};

// ---- parsing ----

/// Parses one term. Throws ParseError with line and column.
Term parse_term(std::string_view text);
/// Parses a strategy expression such as `TopDown(Transform(r))`.
StrategyExpr parse_strategy(std::string_view text);
/// Parses a whole script or rule file. Literal rules are validated here and
/// throw IllFormedRule, BadContext or BadTemplate.
Script parse_script(std::string_view text);

// ---- printing ----

/// Source text for a canonical term; parse_term(render_term(t)) == t.
std::string render_term(const Term& t);
std::string render_rule(const Rule& r);
std::string render_rule_expr(const RuleExpr& r);
std::string render_strategy(const StrategyExpr& s);

}  // namespace termrw::dsl
