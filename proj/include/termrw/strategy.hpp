#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "termrw/rules.hpp"
#include "termrw/term.hpp"

namespace termrw {

/// Outcome of a strategy: a term, or nullopt for the failure signal Fail.
using Outcome = std::optional<Term>;

/// Deterministic partial transformation Term -> Term.
///
/// Strategies are immutable, cheap to copy, and compare only extensionally.
/// Every invocation checks the deadline installed by ScopedDeadline.
class Strategy {
public:
    using Fn = std::function<Outcome(const Term&)>;

    Strategy(std::string description, Fn fn);

    Outcome operator()(const Term& t) const;
    const std::string& description() const { return impl_->description; }

private:
    struct Impl {
        std::string description;
        Fn fn;
    };
    std::shared_ptr<const Impl> impl_;
};

/// Installs a wall-clock deadline for strategy evaluation on this thread.
/// Evaluation past the deadline throws TimeLimitExceeded.
class ScopedDeadline {
public:
    explicit ScopedDeadline(std::chrono::steady_clock::time_point deadline);
    ~ScopedDeadline();
    ScopedDeadline(const ScopedDeadline&) = delete;
    ScopedDeadline& operator=(const ScopedDeadline&) = delete;

private:
    std::optional<std::chrono::steady_clock::time_point> previous_;
};

void check_deadline();

Strategy identity();
Strategy fail();
/// Rewriting at the top with `rule`.
Strategy transform(const Rule& rule, GuardEvaluator guards = {});

Strategy identity_as_fail(Strategy s);
Strategy fail_as_identity(Strategy s);

/// Applies fail_as_identity(s) to every immediate subterm. Never fails.
Strategy all(Strategy s);
/// Tries `s` at the root; on Fail descends into every child.
Strategy top_down(Strategy s);
/// If some proper subterm admits `s`, rewrites the children with
/// bottom_up(s); otherwise fail_as_identity(s). The root is not retried
/// after its children change.
Strategy bottom_up(Strategy s);
/// True iff `s` does not fail on some proper subterm of `t`.
bool exist_child(const Strategy& s, const Term& t);

/// First member that succeeds; `t` itself when all fail. Never fails.
Strategy left_choice(std::vector<Strategy> ss);
/// Sequential composition; Fail from any member propagates.
Strategy comp(std::vector<Strategy> ss);
/// Iterates `s` until its output equals its input. Fail propagates.
Strategy normalizer(Strategy s);

/// Rebuilds an application with new arguments, keeping its head.
Term with_args(const Term& t, std::vector<Term> args);

}  // namespace termrw
