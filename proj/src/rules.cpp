#include "termrw/rules.hpp"

#include <algorithm>

#include "termrw/error.hpp"

namespace termrw {

namespace {

std::size_t count_holes(const Term& t) {
    if (t.is_hole()) return 1;
    std::size_t n = 0;
    for (const auto& a : t.args()) n += count_holes(a);
    return n;
}

bool has_hole(const Term& t) {
    return any_subterm(t, [](const Term& n) { return n.is_hole(); });
}

// Position (1-based) of the hole among the arguments of its parent.
std::optional<std::size_t> hole_position(const Term& t) {
    for (std::size_t i = 0; i < t.arity(); ++i) {
        if (t.arg(i).is_hole()) return i + 1;
        if (auto p = hole_position(t.arg(i))) return p;
    }
    return std::nullopt;
}

Term fill_hole(const Term& t, const Term& with) {
    if (t.is_hole()) return with;
    if (!t.is_app() || t.arity() == 0) return t;
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const auto& a : t.args()) args.push_back(fill_hole(a, with));
    if (t.head_is_variable()) return Term::head_var_app(t.name(), std::move(args));
    return Term::app(t.name(), std::move(args));
}

// Pattern variables become references to their binding by name.
Term as_template(const Term& t) {
    return map_bottom_up(t, [](const Term& n) {
        if (n.is_variable() && !n.is_hole()) return Term::constant(n.name());
        return n;
    });
}

std::string fresh_name(const std::set<std::string>& taken, const std::string& base) {
    if (!taken.contains(base)) return base;
    for (int i = 1;; ++i) {
        std::string candidate = base + std::to_string(i);
        if (!taken.contains(candidate)) return candidate;
    }
}

}  // namespace

Rule make_rule(std::string name, Term lhs, Term rhs, std::optional<Guard> guard) {
    if (lhs.is_number()) throw IllFormedRule(name, "left-hand side is a number");
    if (has_hole(lhs) || has_hole(rhs)) {
        throw IllFormedRule(name, "anonymous hole '_' outside a linearity template");
    }
    const auto bound = free_variables(lhs);
    for (const auto& v : free_variables(rhs)) {
        if (!bound.contains(v)) throw IllFormedRule(name, "right-hand side variable '" + v + "' is not bound");
    }
    if (guard && !bound.contains(guard->binding)) {
        throw IllFormedRule(name, "guard refers to unbound '" + guard->binding + "'");
    }
    Rule r{std::move(name), canonicalize(lhs), canonicalize(rhs), std::move(guard)};
    r.is_oeps = any_subterm(r.rhs, is_fresh_oeps);
    return r;
}

Rule make_context_rule(std::string name, Term lhs, Term rhs) {
    if (!lhs.is_variable() || lhs.is_hole()) {
        throw BadContext("context rule '" + name + "' must have a single pattern variable as left-hand side");
    }
    if (has_hole(rhs)) throw BadContext("context rule '" + name + "' contains a hole");
    Rule r{std::move(name), lhs, canonicalize(rhs), std::nullopt};
    r.is_oeps = any_subterm(r.rhs, is_fresh_oeps);
    const auto vars = free_variables(r.rhs);
    r.is_context = std::any_of(vars.begin(), vars.end(), [&](const std::string& v) { return v != lhs.name(); });
    return r;
}

std::optional<Term> apply_at_top(const Rule& rule, const Term& t, const GuardEvaluator& guards) {
    if (rule.is_context) throw Error("context rule '" + rule.name + "' cannot rewrite terms");
    if (rule.guard && !guards) throw Error("rule '" + rule.name + "' has a guard but no evaluator was given");
    std::optional<Term> result;
    for_each_match(rule.lhs, t, [&](const Substitution& sigma) {
        if (rule.guard && !guards(*rule.guard, sigma.at(rule.guard->binding))) return false;
        result = substitute(sigma, rule.rhs);
        return true;
    });
    return result;
}

Rule linearity(std::size_t position, std::string_view op, const Term& tmpl, std::string name) {
    if (!is_ac_symbol(op)) throw BadTemplate("linearity operator must be plus or times, got '" + std::string(op) + "'");
    const std::size_t holes = count_holes(tmpl);
    if (holes != 1) {
        throw BadTemplate("linearity template must contain exactly one hole, found " + std::to_string(holes));
    }
    const auto at = hole_position(tmpl);
    if (!at || *at != position) {
        throw BadTemplate("hole is argument " + std::to_string(at.value_or(0)) + ", expected " +
                          std::to_string(position));
    }
    auto taken = free_variables(tmpl);
    taken.erase("");
    const std::string x = fresh_name(taken, "X");
    taken.insert(x);
    const std::string y = fresh_name(taken, "Y");

    const std::string op_name(op);
    Term lhs = fill_hole(tmpl, Term::app(op_name, {Term::variable(x), Term::variable(y)}));
    Term body = as_template(tmpl);
    Term rhs = Term::app(op_name, {fill_hole(body, Term::constant(x)), fill_hole(body, Term::constant(y))});
    return make_rule(std::move(name), std::move(lhs), std::move(rhs));
}

}  // namespace termrw
