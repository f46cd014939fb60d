#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "termrw/rules.hpp"
#include "termrw/strategy.hpp"

namespace termrw {

/// Per-proof state: the fresh index counter, the set of symbols declared
/// bounded, and the registry of guard predicates.
///
/// Strategies built from a session keep a reference to it, so a session
/// must outlive them and cannot be copied or moved.
class Session {
public:
    using Predicate = std::function<bool(const Term&)>;

    Session();
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    /// Returns the current counter value, then increments it.
    long fresh_index() { return counter_++; }
    long counter() const { return counter_; }

    /// epsilon can never be declared bounded.
    void declare_bounded(const std::string& name);
    bool is_declared_bounded(const std::string& name) const { return bounded_.contains(name); }
    const std::set<std::string>& bounded() const { return bounded_; }

    void register_guard(const std::string& name, Predicate p);
    /// Evaluator over the registered predicates. Unknown names throw UnknownName.
    GuardEvaluator guards() const;

private:
    long counter_ = 0;
    std::set<std::string> bounded_;
    std::map<std::string, Predicate> predicates_;
};

/// True iff every leaf of `z` is a number, an O(eps) term, or a declared
/// bounded symbol. Pattern variables are never bounded.
bool is_bounded(const Session& session, const Term& z);

/// Oeps(FreshIndexMarker) -> Oeps(fresh_index()) at the top; Fail elsewhere.
Strategy eval_fresh(Session& session);

/// comp([transform(r), top_down(eval_fresh)]) with the session's guards.
Strategy lift_oeps_rule(Session& session, const Rule& r);

/// Transform that lifts O(eps) rules and evaluates guards with the session.
Strategy session_transform(Session& session, const Rule& r);

/// The four O(eps) absorption rules: negation, sum, integral, bounded scaling.
std::vector<Strategy> convergence_rules(Session& session);

/// Rewrites with the absorption rules anywhere until no rule applies.
Strategy convergence_strategy(Session& session);

}  // namespace termrw
