#include "termrw/dsl.hpp"

namespace termrw::dsl {

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string number_text(const Rational& q) { return q.get_str(); }

// -1 times something that does not print as a bare number.
bool is_negated(const Term& t) {
    if (!t.has_head(sym::times) || t.arity() < 2) return false;
    const Term& first = t.arg(0);
    if (!first.is_number() || first.value() != -1) return false;
    return !(t.arity() == 2 && t.arg(1).is_number());
}

Term drop_first(const Term& t) {
    std::vector<Term> rest(t.args().begin() + 1, t.args().end());
    return rest.size() == 1 ? rest.front() : Term::raw_app(std::string(sym::times), std::move(rest));
}

void render(const Term& t, std::string& out);

void render_args(const std::vector<Term>& args, std::string& out) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ", ";
        render(args[i], out);
    }
}

void render_factor(const Term& f, bool leading, std::string& out) {
    bool parens = f.has_head(sym::plus);
    if (f.is_number()) parens = !is_integer(f.value()) || (!leading && f.value() < 0);
    if (parens) out += '(';
    render(f, out);
    if (parens) out += ')';
}

void render_product(const Term& t, std::string& out) {
    for (std::size_t i = 0; i < t.arity(); ++i) {
        if (i) out += '*';
        render_factor(t.arg(i), i == 0, out);
    }
}

void render_sum(const Term& t, std::string& out) {
    for (std::size_t i = 0; i < t.arity(); ++i) {
        const Term& a = t.arg(i);
        if (i == 0) {
            render(a, out);
        } else if (a.is_number() && a.value() < 0) {
            out += " - " + number_text(Rational(-a.value()));
        } else if (is_negated(a)) {
            out += " - ";
            Term rest = drop_first(a);
            if (rest.has_head(sym::plus)) {
                out += '(';
                render(rest, out);
                out += ')';
            } else {
                render(rest, out);
            }
        } else {
            out += " + ";
            render(a, out);
        }
    }
}

void render_power(const Term& t, std::string& out) {
    const Term& base = t.arg(0);
    const Term& exponent = t.arg(1);
    if (!exponent.is_number() || !is_integer(exponent.value())) {
        out += "pow(";
        render_args(t.args(), out);
        out += ')';
        return;
    }
    bool parens = !base.is_leaf() && (base.is_ac() || base.has_head(sym::pow));
    if (base.is_number()) parens = base.value() < 0 || !is_integer(base.value());
    if (parens) out += '(';
    render(base, out);
    if (parens) out += ')';
    out += '^' + number_text(exponent.value());
}

void render(const Term& t, std::string& out) {
    if (t.is_number()) {
        out += number_text(t.value());
        return;
    }
    if (t.is_variable()) {
        out += t.is_hole() ? "_" : t.name() + "_";
        return;
    }
    if (t.head_is_variable()) {
        out += t.name() + "_(";
        render_args(t.args(), out);
        out += ')';
        return;
    }
    if (t.has_head(sym::plus) && t.arity() >= 2) return render_sum(t, out);
    if (t.has_head(sym::times) && t.arity() >= 2) return render_product(t, out);
    if (t.has_head(sym::pow) && t.arity() == 2) return render_power(t, out);
    if (t.has_head(sym::list)) {
        out += '[';
        render_args(t.args(), out);
        out += ']';
        return;
    }
    if (is_fresh_oeps(t)) {
        out += sym::oeps;
        return;
    }
    out += t.name();
    if (t.arity() == 0) return;
    out += '(';
    render_args(t.args(), out);
    out += ')';
}

std::string join(const std::vector<StrategyExpr>& ss) {
    std::string out = "[";
    for (std::size_t i = 0; i < ss.size(); ++i) {
        if (i) out += ", ";
        out += render_strategy(ss[i]);
    }
    return out + "]";
}

std::string strategy_name(StrategyKind k) {
    switch (k) {
    case StrategyKind::identity: return "Identity";
    case StrategyKind::fail: return "Fail";
    case StrategyKind::identity_as_fail: return "IdentityAsFail";
    case StrategyKind::fail_as_identity: return "FailAsIdentity";
    case StrategyKind::all: return "All";
    case StrategyKind::top_down: return "TopDown";
    case StrategyKind::bottom_up: return "BottomUp";
    case StrategyKind::normalizer: return "Normalizer";
    case StrategyKind::convergence: return "ConvergenceStrategy";
    case StrategyKind::eval_rule: return "EvalRule";
    case StrategyKind::simplify: return "Simplify";
    case StrategyKind::expand: return "Expand";
    default: return "";
    }
}

}  // namespace

std::string render_term(const Term& t) {
    std::string out;
    render(t, out);
    return out;
}

std::string render_rule(const Rule& r) {
    std::string out = "[" + render_term(r.lhs) + ", " + render_term(r.rhs) + "]";
    if (r.guard) out += " where " + r.guard->predicate + "(" + r.guard->binding + ")";
    return out;
}

std::string render_rule_expr(const RuleExpr& r) {
    if (const auto* ref = std::get_if<RuleExpr::Ref>(&r.node)) return ref->name;
    if (const auto* lit = std::get_if<RuleExpr::Literal>(&r.node)) return lit->text;
    const auto& outer = std::get<RuleExpr::Outer>(r.node);
    return "OuterContext(" + render_rule_expr(*outer.rule) + ", " + render_rule_expr(*outer.context) + ")";
}

std::string render_strategy(const StrategyExpr& s) {
    switch (s.kind) {
    case StrategyKind::ref: return s.name;
    case StrategyKind::transform: return "Transform(" + render_rule_expr(*s.rule) + ")";
    case StrategyKind::left_choice: return "LeftChoice(" + join(s.children) + ")";
    case StrategyKind::comp: return "Comp(" + join(s.children) + ")";
    case StrategyKind::inner_context:
        return "InnerContext(" + render_term(*s.pattern) + ", " + render_strategy(s.children.at(0)) + ")";
    default: break;
    }
    if (s.children.empty()) return strategy_name(s.kind);
    return strategy_name(s.kind) + "(" + render_strategy(s.children.front()) + ")";
}

}  // namespace termrw::dsl
