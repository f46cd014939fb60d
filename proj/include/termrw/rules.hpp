#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "termrw/match.hpp"
#include "termrw/term.hpp"

namespace termrw {

/// Side condition `predicate(binding)` checked on a candidate match.
struct Guard {
    std::string predicate;
    std::string binding;

    friend bool operator==(const Guard&, const Guard&) = default;
};

/// Decides a guard for the term bound to its binding name.
using GuardEvaluator = std::function<bool(const Guard&, const Term&)>;

/// A rewrite rule lhs -> rhs. Right-hand sides refer to bindings either by a
/// pattern variable or by a bare identifier carrying the binding name.
struct Rule {
    std::string name;
    Term lhs;
    Term rhs;
    std::optional<Guard> guard;
    /// rhs contains Oeps(FreshIndexMarker); applications must be followed by
    /// fresh-index evaluation.
    bool is_oeps = false;
    /// Second-order rule whose rhs introduces pattern variables of its own.
    /// Only usable as the context argument of outer_context().
    bool is_context = false;
};

/// Validates and builds a rule. Throws IllFormedRule when the rhs uses a
/// pattern variable the lhs does not bind, when the lhs is a bare number,
/// when a hole appears, or when the guard names an unbound binding.
Rule make_rule(std::string name, Term lhs, Term rhs, std::optional<Guard> guard = std::nullopt);

/// Builds a context rule: the lhs must be a single pattern variable, the rhs
/// may introduce new pattern variables. Throws BadContext otherwise.
Rule make_context_rule(std::string name, Term lhs, Term rhs);

/// Rewriting at the top: the first match (in enumeration order) accepted by
/// the guard is applied. Returns nullopt (Fail) when there is none.
/// A guarded rule requires an evaluator.
std::optional<Term> apply_at_top(const Rule& rule, const Term& t, const GuardEvaluator& guards = {});

/// Generic L2-linearity rule for the operator described by `tmpl`.
///
/// `tmpl` holds exactly one hole `_`, which must be argument number
/// `position` (1-based) of its parent application. The result rewrites
/// tmpl[_ := op(X_, Y_)] to op(tmpl'[X], tmpl'[Y]), where tmpl' refers to
/// the template's pattern variables by name. Throws BadTemplate.
Rule linearity(std::size_t position, std::string_view op, const Term& tmpl,
               std::string name = "Linearity");

}  // namespace termrw
