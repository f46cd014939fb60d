#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace termrw {

using Rational = mpq_class;

/// Reserved symbol names.
namespace sym {
inline constexpr std::string_view plus = "plus";
inline constexpr std::string_view times = "times";
inline constexpr std::string_view pow = "pow";
inline constexpr std::string_view list = "list";
inline constexpr std::string_view oeps = "Oeps";
inline constexpr std::string_view fresh_marker = "FreshIndexMarker";
inline constexpr std::string_view epsilon = "epsilon";
}  // namespace sym

enum class TermKind { number, application, variable };

/// Immutable expression tree. Copies share structure.
///
/// Applications built through app() are canonical: arguments of the AC
/// symbols `plus` and `times` are flattened and sorted, and an AC node with a
/// single argument collapses to that argument. Numbers are exact rationals.
/// A pattern variable carries its name without the trailing underscore used
/// in source text; the empty name denotes the anonymous hole `_`.
class Term {
public:
    static Term number(const Rational& value);
    static Term number(long value);
    static Term variable(std::string name);
    static Term hole();
    static Term constant(std::string name);
    static Term app(std::string head, std::vector<Term> args);
    static Term head_var_app(std::string head, std::vector<Term> args);
    /// Builds an application without canonicalizing it.
    static Term raw_app(std::string head, std::vector<Term> args, bool head_is_var = false);

    TermKind kind() const { return node_->kind; }
    bool is_number() const { return kind() == TermKind::number; }
    bool is_variable() const { return kind() == TermKind::variable; }
    bool is_app() const { return kind() == TermKind::application; }
    bool is_hole() const { return is_variable() && node_->name.empty(); }
    bool is_constant() const { return is_app() && !node_->head_is_var && node_->args.empty(); }
    bool is_leaf() const { return !is_app() || node_->args.empty(); }
    bool is_ac() const;
    bool has_head(std::string_view head) const {
        return is_app() && !node_->head_is_var && node_->name == head;
    }

    /// Head symbol of an application, or the name of a variable.
    const std::string& name() const { return node_->name; }
    bool head_is_variable() const { return node_->head_is_var; }
    const std::vector<Term>& args() const { return node_->args; }
    std::size_t arity() const { return node_->args.size(); }
    const Term& arg(std::size_t i) const { return node_->args.at(i); }
    const Rational& value() const { return node_->value; }
    std::size_t hash() const { return node_->hash; }

    bool same_node(const Term& other) const { return node_ == other.node_; }

    friend bool operator==(const Term& a, const Term& b);
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
    friend bool operator<(const Term& a, const Term& b);

private:
    struct Node {
        TermKind kind;
        std::string name;
        bool head_is_var = false;
        std::vector<Term> args;
        Rational value;
        std::size_t hash = 0;
    };
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Term make(TermKind kind, std::string name, bool head_is_var, std::vector<Term> args,
                     Rational value);

    std::shared_ptr<const Node> node_;
};

/// Fixed total structural order: numbers, then applications (by head name,
/// head kind, arity, arguments), then variables. Returns <0, 0 or >0.
int compare(const Term& a, const Term& b);

bool is_ac_symbol(std::string_view head);

/// Rebuilds `t` bottom-up through the canonical constructors. Idempotent.
Term canonicalize(const Term& t);

/// Structural identity of canonical forms.
bool equal(const Term& a, const Term& b);

/// Replaces every Oeps index (concrete or FreshIndexMarker) by 0.
Term erase_oeps_indexes(const Term& t);

/// Equality after erasing Oeps indexes.
bool equiv_mod_oeps(const Term& a, const Term& b);

/// Number of heads, variables and number leaves.
std::size_t symbol_count(const Term& t);

/// Names of the pattern variables of `t` (head variables included).
std::set<std::string> free_variables(const Term& t);

bool contains_variables(const Term& t);

/// True iff some subterm (including `t`) satisfies `pred`.
bool any_subterm(const Term& t, const std::function<bool(const Term&)>& pred);

/// Rebuilds `t` bottom-up with `f` applied to every node after its children.
Term map_bottom_up(const Term& t, const std::function<Term(const Term&)>& f);

// Builders for the reserved symbols.
Term plus(std::vector<Term> args);
Term times(std::vector<Term> args);
Term power(Term base, long exponent);
Term negate(const Term& t);
Term list(std::vector<Term> items);
Term oeps(long index);
Term oeps_fresh();
Term fresh_marker();
Term epsilon();

bool is_oeps(const Term& t);
bool is_fresh_oeps(const Term& t);
bool contains_fresh_marker(const Term& t);

}  // namespace termrw

template <>
struct std::hash<termrw::Term> {
    std::size_t operator()(const termrw::Term& t) const noexcept { return t.hash(); }
};
