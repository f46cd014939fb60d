#include "termrw/convergence.hpp"

#include "termrw/error.hpp"

namespace termrw {

namespace {

Term var(const char* name) { return Term::variable(name); }
Term oeps_var(const char* name) { return Term::app(std::string(sym::oeps), {var(name)}); }

}  // namespace

Session::Session() {
    register_guard("bounded", [this](const Term& t) { return is_bounded(*this, t); });
}

void Session::declare_bounded(const std::string& name) {
    if (name == sym::epsilon) throw Error("epsilon cannot be declared bounded");
    bounded_.insert(name);
}

void Session::register_guard(const std::string& name, Predicate p) { predicates_[name] = std::move(p); }

GuardEvaluator Session::guards() const {
    return [this](const Guard& g, const Term& t) {
        auto it = predicates_.find(g.predicate);
        if (it == predicates_.end()) throw UnknownName("unknown guard predicate '" + g.predicate + "'");
        return it->second(t);
    };
}

bool is_bounded(const Session& session, const Term& z) {
    if (z.is_number() || is_oeps(z)) return true;
    if (z.is_variable()) return false;
    if (z.arity() == 0) return !z.head_is_variable() && session.is_declared_bounded(z.name());
    for (const auto& a : z.args()) {
        if (!is_bounded(session, a)) return false;
    }
    return true;
}

Strategy eval_fresh(Session& session) {
    return Strategy("EvalRule", [&session](const Term& t) -> Outcome {
        if (!is_fresh_oeps(t)) return std::nullopt;
        return oeps(session.fresh_index());
    });
}

Strategy lift_oeps_rule(Session& session, const Rule& r) {
    auto c = comp({transform(r, session.guards()), top_down(eval_fresh(session))});
    return Strategy("Transform(" + r.name + ")", [c](const Term& t) { return c(t); });
}

Strategy session_transform(Session& session, const Rule& r) {
    if (r.is_oeps) return lift_oeps_rule(session, r);
    return transform(r, session.guards());
}

std::vector<Strategy> convergence_rules(Session& session) {
    const Term marker = oeps_fresh();
    Rule negation = make_rule("OepsNegation", times({Term::number(-1), oeps_var("i")}), marker);
    Rule sum_rest = make_rule("OepsSum", plus({oeps_var("i"), oeps_var("j"), var("R")}),
                              plus({marker, Term::constant("R")}));
    Rule sum_pair = make_rule("OepsSum", plus({oeps_var("i"), oeps_var("j")}), marker);
    Rule integral = make_rule("OepsIntegral", Term::app("Integral", {var("D"), oeps_var("i"), var("M")}), marker);
    Rule scaling = make_rule("OepsScaling", times({var("Z"), oeps_var("i")}), marker, Guard{"bounded", "Z"});

    auto sum = identity_as_fail(left_choice({lift_oeps_rule(session, sum_rest), lift_oeps_rule(session, sum_pair)}));
    return {lift_oeps_rule(session, negation), Strategy("Transform(OepsSum)", [sum](const Term& t) { return sum(t); }),
            lift_oeps_rule(session, integral), lift_oeps_rule(session, scaling)};
}

Strategy convergence_strategy(Session& session) {
    auto s = normalizer(top_down(identity_as_fail(left_choice(convergence_rules(session)))));
    return Strategy("ConvergenceStrategy", [s](const Term& t) { return s(t); });
}

}  // namespace termrw
