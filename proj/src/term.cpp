#include "termrw/term.hpp"

#include <algorithm>

namespace termrw {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_rational(const Rational& q) {
    std::size_t h = std::hash<long>{}(mpz_get_si(q.get_num_mpz_t()));
    h = mix(h, std::hash<long>{}(mpz_get_si(q.get_den_mpz_t())));
    return mix(h, static_cast<std::size_t>(mpz_size(q.get_num_mpz_t())));
}

int kind_rank(TermKind k) {
    switch (k) {
    case TermKind::number: return 0;
    case TermKind::application: return 1;
    case TermKind::variable: return 2;
    }
    return 3;
}

}  // namespace

Term Term::make(TermKind kind, std::string name, bool head_is_var, std::vector<Term> args,
                Rational value) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->name = std::move(name);
    node->head_is_var = head_is_var;
    node->args = std::move(args);
    node->value = std::move(value);
    std::size_t h = static_cast<std::size_t>(kind) * 1315423911u;
    if (kind == TermKind::number) {
        h = mix(h, hash_rational(node->value));
    } else {
        h = mix(h, std::hash<std::string>{}(node->name));
        h = mix(h, head_is_var ? 1 : 0);
        for (const auto& a : node->args) h = mix(h, a.hash());
    }
    node->hash = h;
    return Term(std::move(node));
}

Term Term::number(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    return make(TermKind::number, {}, false, {}, std::move(v));
}

Term Term::number(long value) { return number(Rational(value)); }

Term Term::variable(std::string name) {
    return make(TermKind::variable, std::move(name), false, {}, Rational());
}

Term Term::hole() { return variable(""); }

Term Term::constant(std::string name) {
    return make(TermKind::application, std::move(name), false, {}, Rational());
}

Term Term::raw_app(std::string head, std::vector<Term> args, bool head_is_var) {
    return make(TermKind::application, std::move(head), head_is_var, std::move(args), Rational());
}

Term Term::head_var_app(std::string head, std::vector<Term> args) {
    return raw_app(std::move(head), std::move(args), true);
}

Term Term::app(std::string head, std::vector<Term> args) {
    if (!is_ac_symbol(head)) return raw_app(std::move(head), std::move(args));
    std::vector<Term> flat;
    flat.reserve(args.size());
    for (auto& a : args) {
        if (a.has_head(head)) {
            flat.insert(flat.end(), a.args().begin(), a.args().end());
        } else {
            flat.push_back(std::move(a));
        }
    }
    if (flat.empty()) return number(head == sym::plus ? 0 : 1);
    if (flat.size() == 1) return flat.front();
    std::stable_sort(flat.begin(), flat.end(),
                     [](const Term& a, const Term& b) { return compare(a, b) < 0; });
    return raw_app(std::move(head), std::move(flat));
}

bool Term::is_ac() const {
    return is_app() && !node_->head_is_var && is_ac_symbol(node_->name);
}

bool is_ac_symbol(std::string_view head) { return head == sym::plus || head == sym::times; }

int compare(const Term& a, const Term& b) {
    if (a.same_node(b)) return 0;
    if (a.kind() != b.kind()) return kind_rank(a.kind()) - kind_rank(b.kind());
    switch (a.kind()) {
    case TermKind::number: return cmp(a.value(), b.value()) < 0 ? -1 : (a.value() == b.value() ? 0 : 1);
    case TermKind::variable: return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
    case TermKind::application: break;
    }
    if (int c = a.name().compare(b.name())) return c < 0 ? -1 : 1;
    if (a.head_is_variable() != b.head_is_variable()) return a.head_is_variable() ? 1 : -1;
    if (a.arity() != b.arity()) return a.arity() < b.arity() ? -1 : 1;
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (int c = compare(a.arg(i), b.arg(i))) return c;
    }
    return 0;
}

bool operator==(const Term& a, const Term& b) {
    if (a.same_node(b)) return true;
    if (a.hash() != b.hash()) return false;
    return compare(a, b) == 0;
}

bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

Term canonicalize(const Term& t) {
    if (!t.is_app() || t.arity() == 0) return t;
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const auto& a : t.args()) args.push_back(canonicalize(a));
    if (t.head_is_variable()) return Term::head_var_app(t.name(), std::move(args));
    return Term::app(t.name(), std::move(args));
}

bool equal(const Term& a, const Term& b) { return canonicalize(a) == canonicalize(b); }

Term erase_oeps_indexes(const Term& t) {
    return map_bottom_up(t, [](const Term& n) {
        if (n.has_head(sym::oeps) && n.arity() == 1) return Term::app(std::string(sym::oeps), {Term::number(0)});
        return n;
    });
}

bool equiv_mod_oeps(const Term& a, const Term& b) {
    return erase_oeps_indexes(canonicalize(a)) == erase_oeps_indexes(canonicalize(b));
}

std::size_t symbol_count(const Term& t) {
    std::size_t n = 1;
    for (const auto& a : t.args()) n += symbol_count(a);
    return n;
}

namespace {
void collect_variables(const Term& t, std::set<std::string>& out) {
    if (t.is_variable()) {
        out.insert(t.name());
        return;
    }
    if (t.is_app() && t.head_is_variable()) out.insert(t.name());
    for (const auto& a : t.args()) collect_variables(a, out);
}
}  // namespace

std::set<std::string> free_variables(const Term& t) {
    std::set<std::string> out;
    collect_variables(t, out);
    return out;
}

bool contains_variables(const Term& t) {
    return any_subterm(t, [](const Term& n) { return n.is_variable() || (n.is_app() && n.head_is_variable()); });
}

bool any_subterm(const Term& t, const std::function<bool(const Term&)>& pred) {
    if (pred(t)) return true;
    for (const auto& a : t.args()) {
        if (any_subterm(a, pred)) return true;
    }
    return false;
}

Term map_bottom_up(const Term& t, const std::function<Term(const Term&)>& f) {
    if (!t.is_app() || t.arity() == 0) return f(t);
    std::vector<Term> args;
    args.reserve(t.arity());
    bool changed = false;
    for (const auto& a : t.args()) {
        args.push_back(map_bottom_up(a, f));
        changed = changed || !args.back().same_node(a);
    }
    if (!changed) return f(t);
    Term rebuilt = t.head_is_variable() ? Term::head_var_app(t.name(), std::move(args))
                                        : Term::app(t.name(), std::move(args));
    return f(rebuilt);
}

Term plus(std::vector<Term> args) { return Term::app(std::string(sym::plus), std::move(args)); }

Term times(std::vector<Term> args) { return Term::app(std::string(sym::times), std::move(args)); }

Term power(Term base, long exponent) {
    return Term::app(std::string(sym::pow), {std::move(base), Term::number(exponent)});
}

Term negate(const Term& t) {
    if (t.is_number()) return Term::number(-t.value());
    return times({Term::number(-1), t});
}

Term list(std::vector<Term> items) { return Term::app(std::string(sym::list), std::move(items)); }

Term oeps(long index) { return Term::app(std::string(sym::oeps), {Term::number(index)}); }

Term oeps_fresh() { return Term::app(std::string(sym::oeps), {fresh_marker()}); }

Term fresh_marker() { return Term::constant(std::string(sym::fresh_marker)); }

Term epsilon() { return Term::constant(std::string(sym::epsilon)); }

bool is_oeps(const Term& t) { return t.has_head(sym::oeps) && t.arity() == 1; }

bool is_fresh_oeps(const Term& t) { return is_oeps(t) && t.arg(0).has_head(sym::fresh_marker); }

bool contains_fresh_marker(const Term& t) {
    return any_subterm(t, [](const Term& n) { return n.has_head(sym::fresh_marker); });
}

}  // namespace termrw
