#include "termrw/contextual.hpp"

#include "termrw/algebra.hpp"
#include "termrw/error.hpp"
#include "termrw/match.hpp"

namespace termrw {

namespace {

// Replaces the context hole X (as a variable or as a reference) by `with`.
Term plug(const Term& t, const std::string& hole, const Term& with) {
    if ((t.is_variable() || t.is_constant()) && t.name() == hole) return with;
    if (!t.is_app() || t.arity() == 0) return t;
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const auto& a : t.args()) args.push_back(plug(a, hole, with));
    return with_args(t, std::move(args));
}

Term as_references(const Term& t, const std::set<std::string>& names) {
    return map_bottom_up(t, [&](const Term& n) {
        if (n.is_variable() && names.contains(n.name())) return Term::constant(n.name());
        return n;
    });
}

bool is_context_factor(const Term& t, const std::set<std::string>& names) {
    return (t.is_variable() || t.is_constant()) && names.contains(t.name());
}

// Simplifies a plugged side. In a product, factors that stand for the
// context's own variables are kept outside the simplified remainder.
Term simplify_side(const Term& t, const std::set<std::string>& context_vars) {
    if (!t.has_head(sym::times)) return simplify(t);
    std::vector<Term> inner;
    std::vector<Term> outer;
    for (const auto& f : t.args()) {
        (is_context_factor(f, context_vars) ? outer : inner).push_back(f);
    }
    if (outer.empty()) return simplify(t);
    outer.push_back(simplify(times(std::move(inner))));
    return times(std::move(outer));
}

}  // namespace

Strategy inner_context(Term pattern, Strategy s) {
    std::string d = "InnerContext(" + s.description() + ")";
    return Strategy(std::move(d),
                    [pattern = std::move(pattern), s = std::move(s)](const Term& t) -> Outcome {
                        if (!contains_match(pattern, t)) return std::nullopt;
                        return s(t);
                    });
}

Rule outer_context(const Rule& rule, const Rule& context) {
    if (!context.lhs.is_variable() || context.lhs.is_hole()) {
        throw BadContext("context '" + context.name + "' must have a single pattern variable as left-hand side");
    }
    const std::string hole = context.lhs.name();
    auto context_vars = free_variables(context.rhs);
    context_vars.erase(hole);

    Term lhs = simplify_side(plug(context.rhs, hole, rule.lhs), context_vars);
    Term rhs = simplify_side(as_references(plug(context.rhs, hole, rule.rhs), context_vars), context_vars);
    return make_rule("OuterContext(" + rule.name + ", " + context.name + ")", std::move(lhs), std::move(rhs),
                     rule.guard);
}

}  // namespace termrw
