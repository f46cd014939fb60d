#include "termrw/match.hpp"

#include <vector>

#include "termrw/error.hpp"

namespace termrw {

namespace {

using Continuation = std::function<bool()>;

class Matcher {
public:
    explicit Matcher(Substitution& sigma) : sigma_(sigma) {}

    bool match(const Term& p, const Term& s, const Continuation& k) {
        switch (p.kind()) {
        case TermKind::variable: return bind(p.name(), s, k);
        case TermKind::number: return s.is_number() && p.value() == s.value() && k();
        case TermKind::application: break;
        }
        if (!s.is_app()) return false;
        if (p.head_is_variable()) {
            if (s.head_is_variable() || p.arity() != s.arity()) return false;
            return bind(p.name(), Term::constant(s.name()),
                        [&] { return match_sequence(p.args(), s.args(), 0, k); });
        }
        if (s.head_is_variable() || p.name() != s.name()) return false;
        if (p.is_ac()) return match_ac(p, s, k);
        if (p.arity() != s.arity()) return false;
        return match_sequence(p.args(), s.args(), 0, k);
    }

private:
    bool bind(const std::string& name, const Term& value, const Continuation& k) {
        if (name.empty()) return k();  // the hole binds nothing
        auto it = sigma_.find(name);
        if (it != sigma_.end()) return it->second == value && k();
        sigma_.emplace(name, value);
        if (k()) return true;
        sigma_.erase(name);
        return false;
    }

    bool match_sequence(const std::vector<Term>& ps, const std::vector<Term>& ss, std::size_t i,
                        const Continuation& k) {
        if (i == ps.size()) return k();
        return match(ps[i], ss[i], [&] { return match_sequence(ps, ss, i + 1, k); });
    }

    struct AcState {
        const std::string& head;
        std::vector<Term> rigid;
        std::vector<std::string> vars;
        const std::vector<Term>& subject;
        std::vector<bool> used;
    };

    bool match_ac(const Term& p, const Term& s, const Continuation& k) {
        AcState st{p.name(), {}, {}, s.args(), std::vector<bool>(s.arity(), false)};
        for (const auto& a : p.args()) {
            if (a.is_variable()) {
                st.vars.push_back(a.name());
            } else {
                st.rigid.push_back(a);
            }
        }
        const std::size_t need = st.rigid.size() + st.vars.size();
        if (need > s.arity()) return false;
        if (st.vars.empty() && st.rigid.size() != s.arity()) return false;
        return place_rigid(st, 0, k);
    }

    bool place_rigid(AcState& st, std::size_t i, const Continuation& k) {
        if (i == st.rigid.size()) return place_vars(st, 0, k);
        for (std::size_t j = 0; j < st.subject.size(); ++j) {
            if (st.used[j]) continue;
            st.used[j] = true;
            bool done = match(st.rigid[i], st.subject[j], [&] { return place_rigid(st, i + 1, k); });
            st.used[j] = false;
            if (done) return true;
        }
        return false;
    }

    Term group(const AcState& st, const std::vector<std::size_t>& idx) const {
        if (idx.size() == 1) return st.subject[idx.front()];
        std::vector<Term> parts;
        parts.reserve(idx.size());
        for (auto i : idx) parts.push_back(st.subject[i]);
        return Term::app(st.head, std::move(parts));
    }

    bool place_vars(AcState& st, std::size_t v, const Continuation& k) {
        std::vector<std::size_t> free;
        for (std::size_t j = 0; j < st.subject.size(); ++j) {
            if (!st.used[j]) free.push_back(j);
        }
        if (v == st.vars.size()) return free.empty() && k();
        const std::size_t vars_after = st.vars.size() - v - 1;
        if (free.size() < vars_after + 1) return false;
        if (vars_after == 0) return bind(st.vars[v], group(st, free), k);

        const std::size_t max_size = free.size() - vars_after;
        for (std::size_t size = 1; size <= max_size; ++size) {
            std::vector<std::size_t> pick(size);
            for (std::size_t i = 0; i < size; ++i) pick[i] = i;
            while (true) {
                std::vector<std::size_t> idx;
                idx.reserve(size);
                for (auto i : pick) idx.push_back(free[i]);
                for (auto i : idx) st.used[i] = true;
                bool done = bind(st.vars[v], group(st, idx), [&] { return place_vars(st, v + 1, k); });
                for (auto i : idx) st.used[i] = false;
                if (done) return true;
                // next combination in lexicographic order
                std::size_t i = size;
                while (i > 0 && pick[i - 1] == free.size() - size + i - 1) --i;
                if (i == 0) break;
                ++pick[i - 1];
                for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        return false;
    }

    Substitution& sigma_;
};

}  // namespace

bool for_each_match(const Term& pattern, const Term& subject,
                    const std::function<bool(const Substitution&)>& visit) {
    Substitution sigma;
    Matcher m(sigma);
    return m.match(pattern, subject, [&] { return visit(sigma); });
}

std::optional<Substitution> match(const Term& pattern, const Term& subject) {
    std::optional<Substitution> out;
    for_each_match(pattern, subject, [&](const Substitution& s) {
        out = s;
        return true;
    });
    return out;
}

Term substitute(const Substitution& s, const Term& t) {
    switch (t.kind()) {
    case TermKind::number: return t;
    case TermKind::variable: {
        auto it = s.find(t.name());
        if (it == s.end()) throw UnboundVariable(t.name());
        return it->second;
    }
    case TermKind::application: break;
    }
    if (t.arity() == 0 && !t.head_is_variable()) {
        auto it = s.find(t.name());
        return it == s.end() ? t : it->second;
    }
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const auto& a : t.args()) args.push_back(substitute(s, a));
    std::string head = t.name();
    auto it = s.find(head);
    if (it != s.end() && it->second.is_constant()) {
        head = it->second.name();
    } else if (t.head_is_variable()) {
        throw UnboundVariable(head);
    }
    return Term::app(std::move(head), std::move(args));
}

bool contains_match(const Term& pattern, const Term& subject) {
    return any_subterm(subject, [&](const Term& n) { return match(pattern, n).has_value(); });
}

}  // namespace termrw
