#include "termrw/strategy.hpp"

#include "termrw/error.hpp"

namespace termrw {

namespace {

thread_local std::optional<std::chrono::steady_clock::time_point> current_deadline;

std::string join_descriptions(const std::vector<Strategy>& ss) {
    std::string out = "[";
    for (std::size_t i = 0; i < ss.size(); ++i) {
        if (i) out += ", ";
        out += ss[i].description();
    }
    return out + "]";
}

Term fail_as_identity_apply(const Strategy& s, const Term& t) {
    auto r = s(t);
    return r ? *r : t;
}

Term top_down_apply(const Strategy& s, const Term& t) {
    if (t.is_leaf()) return fail_as_identity_apply(s, t);
    if (auto r = s(t)) return *r;
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const auto& a : t.args()) args.push_back(top_down_apply(s, a));
    return with_args(t, std::move(args));
}

Term bottom_up_apply(const Strategy& s, const Term& t) {
    if (!exist_child(s, t)) return fail_as_identity_apply(s, t);
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const auto& a : t.args()) args.push_back(bottom_up_apply(s, a));
    return with_args(t, std::move(args));
}

bool any_proper_subterm_succeeds(const Strategy& s, const Term& t) {
    for (const auto& a : t.args()) {
        if (s(a) || any_proper_subterm_succeeds(s, a)) return true;
    }
    return false;
}

}  // namespace

Strategy::Strategy(std::string description, Fn fn)
    : impl_(std::make_shared<Impl>(Impl{std::move(description), std::move(fn)})) {}

Outcome Strategy::operator()(const Term& t) const {
    check_deadline();
    return impl_->fn(t);
}

ScopedDeadline::ScopedDeadline(std::chrono::steady_clock::time_point deadline)
    : previous_(current_deadline) {
    current_deadline = deadline;
}

ScopedDeadline::~ScopedDeadline() { current_deadline = previous_; }

void check_deadline() {
    if (current_deadline && std::chrono::steady_clock::now() > *current_deadline) throw TimeLimitExceeded();
}

Term with_args(const Term& t, std::vector<Term> args) {
    if (t.head_is_variable()) return Term::head_var_app(t.name(), std::move(args));
    return Term::app(t.name(), std::move(args));
}

Strategy identity() {
    return Strategy("Identity", [](const Term& t) -> Outcome { return t; });
}

Strategy fail() {
    return Strategy("Fail", [](const Term&) -> Outcome { return std::nullopt; });
}

Strategy transform(const Rule& rule, GuardEvaluator guards) {
    return Strategy("Transform(" + rule.name + ")",
                    [rule, guards = std::move(guards)](const Term& t) { return apply_at_top(rule, t, guards); });
}

Strategy identity_as_fail(Strategy s) {
    std::string d = "IdentityAsFail(" + s.description() + ")";
    return Strategy(std::move(d), [s = std::move(s)](const Term& t) -> Outcome {
        auto r = s(t);
        if (!r || *r == t) return std::nullopt;
        return r;
    });
}

Strategy fail_as_identity(Strategy s) {
    std::string d = "FailAsIdentity(" + s.description() + ")";
    return Strategy(std::move(d), [s = std::move(s)](const Term& t) -> Outcome { return fail_as_identity_apply(s, t); });
}

Strategy all(Strategy s) {
    std::string d = "All(" + s.description() + ")";
    return Strategy(std::move(d), [s = std::move(s)](const Term& t) -> Outcome {
        if (t.is_leaf()) return t;
        std::vector<Term> args;
        args.reserve(t.arity());
        for (const auto& a : t.args()) args.push_back(fail_as_identity_apply(s, a));
        return with_args(t, std::move(args));
    });
}

Strategy top_down(Strategy s) {
    std::string d = "TopDown(" + s.description() + ")";
    return Strategy(std::move(d), [s = std::move(s)](const Term& t) -> Outcome { return top_down_apply(s, t); });
}

Strategy bottom_up(Strategy s) {
    std::string d = "BottomUp(" + s.description() + ")";
    return Strategy(std::move(d), [s = std::move(s)](const Term& t) -> Outcome { return bottom_up_apply(s, t); });
}

bool exist_child(const Strategy& s, const Term& t) { return any_proper_subterm_succeeds(s, t); }

Strategy left_choice(std::vector<Strategy> ss) {
    std::string d = "LeftChoice(" + join_descriptions(ss) + ")";
    return Strategy(std::move(d), [ss = std::move(ss)](const Term& t) -> Outcome {
        for (const auto& s : ss) {
            if (auto r = s(t)) return r;
        }
        return t;
    });
}

Strategy comp(std::vector<Strategy> ss) {
    std::string d = "Comp(" + join_descriptions(ss) + ")";
    return Strategy(std::move(d), [ss = std::move(ss)](const Term& t) -> Outcome {
        Term current = t;
        for (const auto& s : ss) {
            auto r = s(current);
            if (!r) return std::nullopt;
            current = std::move(*r);
        }
        return current;
    });
}

Strategy normalizer(Strategy s) {
    std::string d = "Normalizer(" + s.description() + ")";
    return Strategy(std::move(d), [s = std::move(s)](const Term& t) -> Outcome {
        Term current = t;
        while (true) {
            auto next = s(current);
            if (!next) return std::nullopt;
            if (*next == current) return current;
            current = std::move(*next);
        }
    });
}

}  // namespace termrw
